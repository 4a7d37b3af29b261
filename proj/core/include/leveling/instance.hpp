#ifndef LEVELING_INSTANCE_HPP
#define LEVELING_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leveling {

/// Thrown for malformed instances, dimension mismatches and out-of-range
/// indices.
class LevelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string id;
  int duration = 1;  // days the job stays active
  int demand = 0;    // resource units per active day
};

/// Square 0/1 table. `at(x, y) == 1` means job y sits in front of job x.
/// Indices are 1-based.
class PrecedenceTable {
 public:
  PrecedenceTable() = default;
  explicit PrecedenceTable(int jobs)
      : size_(jobs), cells_(static_cast<std::size_t>(jobs) * jobs, 0) {}

  int size() const { return size_; }

  bool at(int x, int y) const { return cells_[index(x, y)] != 0; }
  void set(int x, int y, bool value = true) {
    cells_[index(x, y)] = value ? 1 : 0;
  }

  /// Number of 1 entries.
  int count() const;

  friend bool operator==(const PrecedenceTable&,
                         const PrecedenceTable&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * size_ + (y - 1);
  }

  int size_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct ProjectInstance {
  std::vector<Job> jobs;
  int horizon = 1;
  PrecedenceTable front;

  int job_count() const { return static_cast<int>(jobs.size()); }
  const Job& job(int x) const { return jobs.at(static_cast<std::size_t>(x - 1)); }

  /// 1-based row of the job named `id`, or 0 if absent.
  int find(std::string_view id) const;
};

/// Augmented permute matrix: m rows (jobs) by n columns (days), every cell
/// 0 or 1. Rows and columns are 1-based.
class ScheduleMatrix {
 public:
  ScheduleMatrix() = default;
  ScheduleMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        bits_(static_cast<std::size_t>(rows) * cols, 0) {}

  static ScheduleMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cells() const { return rows_ * cols_; }

  int at(int x, int i) const { return bits_[index(x, i)]; }
  void set(int x, int i, int value) {
    bits_[index(x, i)] = static_cast<std::uint8_t>(value != 0);
  }
  void flip(int x, int i) { bits_[index(x, i)] ^= 1; }

  int row_sum(int x) const;
  int total() const;

  /// Bits in row-major order, i.e. neuron (x, i) sits at (x-1)*n + (i-1).
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  void check_row(int x) const;

  friend bool operator==(const ScheduleMatrix&,
                         const ScheduleMatrix&) = default;

 private:
  std::size_t index(int x, int i) const {
    return static_cast<std::size_t>(x - 1) * cols_ + (i - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Per-day resource load, daily[i-1] = sum_x Q_x * v_xi.
struct ResourceProfile {
  std::vector<long long> daily;

  long long total() const;
};

struct JobTiming {
  int start = 0;   // first active day, horizon + 1 when the row is empty
  int finish = 0;  // last active day, 0 when the row is empty
};

struct DecodedSchedule {
  std::vector<JobTiming> timing;
  bool rows_contiguous_linear = false;
  bool durations_match = false;
  bool precedence_paper_mode = false;  // front[x][y] => pos_y <= pos_x
  bool precedence_strict = false;      // front[x][y] => pos_y + J_y <= pos_x

  /// Duration-exact, linearly contiguous and start-ordered.
  bool feasible() const {
    return durations_match && rows_contiguous_linear && precedence_paper_mode;
  }
};

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity;
  std::string message;
};

/// Reads the JSON instance document and checks its structure: ids unique
/// and known, integer fields, duration >= 1, demand >= 0, horizon >= 1.
/// Does not check duration against the horizon; see `parse_instance`.
ProjectInstance read_instance(std::string_view text);

/// `read_instance` followed by `validate`; throws on any fatal diagnostic.
ProjectInstance parse_instance(std::string_view text);

ProjectInstance load_instance_file(const std::string& path);

std::vector<Diagnostic> validate(const ProjectInstance& instance);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

ResourceProfile profile(const ScheduleMatrix& schedule,
                        const ProjectInstance& instance);

/// Population variance of the daily loads.
double variance(const ResourceProfile& profile);

/// Smallest day with a 1 in `row`, or n + 1 for an empty row.
int first_active_day(const ScheduleMatrix& schedule, int row);

DecodedSchedule decode(const ScheduleMatrix& schedule,
                       const ProjectInstance& instance);

/// Qm = (sum_x Q_x * J_x) / n.
double average_demand(const ProjectInstance& instance);

void check_dimensions(const ScheduleMatrix& schedule,
                      const ProjectInstance& instance);

}  // namespace leveling

#endif  // LEVELING_INSTANCE_HPP
