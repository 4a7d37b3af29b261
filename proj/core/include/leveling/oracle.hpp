#ifndef LEVELING_ORACLE_HPP
#define LEVELING_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "leveling/instance.hpp"

namespace leveling {

// Exhaustive reference solver for small instances. Every row is a single
// run of exactly J_x ones starting somewhere in [1, n - J_x + 1].

enum class PrecedenceMode {
  kPaper,   // pos_y <= pos_x
  kStrict,  // pos_y + J_y <= pos_x
};

/// Raised when the start-vector space exceeds the enumeration guard.
class GuardExceeded : public LevelingError {
 public:
  using LevelingError::LevelingError;
};

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// prod_x (n - J_x + 1), saturating at UINT64_MAX.
std::uint64_t placement_count(const ProjectInstance& instance);

/// Calls `visit(starts, schedule)` for every feasible schedule in
/// lexicographic order of the 1-based start vector.
void enumerate_schedules(
    const ProjectInstance& instance, PrecedenceMode mode,
    const std::function<void(const std::vector<int>&, const ScheduleMatrix&)>&
        visit);

/// Materialized form of enumerate_schedules.
std::vector<ScheduleMatrix> all_schedules(const ProjectInstance& instance,
                                          PrecedenceMode mode);

struct OracleReport {
  PrecedenceMode mode = PrecedenceMode::kPaper;
  std::uint64_t feasible_count = 0;
  double optimal_variance = 0.0;
  ScheduleMatrix optimal_schedule;
  std::vector<int> optimal_starts;

  bool feasible() const { return feasible_count > 0; }
};

/// Minimum-variance schedule; ties go to the lexicographically smallest start
/// vector. An infeasible instance yields feasible_count == 0.
OracleReport optimal_variance(const ProjectInstance& instance,
                              PrecedenceMode mode);

}  // namespace leveling

#endif  // LEVELING_ORACLE_HPP
