#ifndef LEVELING_TESTS_SUPPORT_HPP
#define LEVELING_TESTS_SUPPORT_HPP

// Test-only helpers: random instances/states and reference computations
// written straight from the formulas, sharing no code with the library's
// energy or oracle paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "leveling/energy.hpp"
#include "leveling/instance.hpp"

namespace leveling::testing {

inline std::string test_data(const std::string& name) {
  return std::string(LEVELING_TEST_DATA) + "/" + name;
}

/// Random instance with a sparse, acyclic precedence table.
inline ProjectInstance random_instance(int jobs, int days, std::mt19937_64& rng,
                                       double edge_probability = 0.25) {
  ProjectInstance inst;
  inst.horizon = days;
  std::uniform_int_distribution<int> duration(1, days);
  std::uniform_int_distribution<int> demand(0, 6);
  for (int x = 1; x <= jobs; ++x) {
    inst.jobs.push_back({"J" + std::to_string(x), duration(rng), demand(rng)});
  }
  inst.front = PrecedenceTable(jobs);
  std::bernoulli_distribution edge(edge_probability);
  for (int x = 1; x <= jobs; ++x) {
    for (int y = 1; y < x; ++y) {
      if (edge(rng)) inst.front.set(x, y);
    }
  }
  return inst;
}

inline ScheduleMatrix random_schedule(int rows, int cols, std::mt19937_64& rng,
                                      double density = 0.5) {
  ScheduleMatrix s(rows, cols);
  std::bernoulli_distribution bit(density);
  for (int x = 1; x <= rows; ++x) {
    for (int i = 1; i <= cols; ++i) s.set(x, i, bit(rng) ? 1 : 0);
  }
  return s;
}

/// Dense 0-based copy of a schedule, v[x][i].
inline std::vector<std::vector<int>> to_grid(const ScheduleMatrix& s) {
  std::vector<std::vector<int>> v(static_cast<std::size_t>(s.rows()),
                                  std::vector<int>(static_cast<std::size_t>(s.cols())));
  for (int x = 0; x < s.rows(); ++x) {
    for (int i = 0; i < s.cols(); ++i) v[x][i] = s.at(x + 1, i + 1);
  }
  return v;
}

struct ReferenceEnergy {
  double e0, e1, e2, e3;
  double total() const { return e0 + e1 + e2 + e3; }
};

/// Four energy terms evaluated literally with 0-based loops.
inline ReferenceEnergy reference_energy(const ScheduleMatrix& s,
                                        const ProjectInstance& inst,
                                        const PenaltyParams& p) {
  const auto v = to_grid(s);
  const int m = inst.job_count();
  const int n = inst.horizon;
  ReferenceEnergy r{0, 0, 0, 0};
  for (int i = 0; i < n; ++i) {
    double load = 0;
    for (int x = 0; x < m; ++x) load += inst.jobs[x].demand * v[x][i];
    r.e0 += (load - p.average_demand) * (load - p.average_demand);
  }
  r.e0 *= p.load_weight / 2;
  for (int x = 0; x < m; ++x) {
    int sum = 0;
    for (int i = 0; i < n; ++i) sum += v[x][i];
    r.e1 += std::pow(sum - inst.jobs[x].duration, 2);
    for (int i = 0; i < n; ++i) r.e2 += std::pow(v[x][i] - v[x][(i + 1) % n], 2);
  }
  r.e1 *= p.duration_weight / 2;
  r.e2 *= p.continuity_weight / 2;
  std::vector<int> pos(static_cast<std::size_t>(m), n + 1);
  for (int x = 0; x < m; ++x) {
    for (int i = n - 1; i >= 0; --i) {
      if (v[x][i]) pos[x] = i + 1;
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (!inst.front.at(x + 1, y + 1)) continue;
      const int d = pos[y] - pos[x];
      r.e3 += d * (d >= 0 ? 1 : 0);
    }
  }
  r.e3 *= p.precedence_weight;
  return r;
}

inline double reference_variance(const std::vector<long long>& daily) {
  double mean = 0;
  for (long long d : daily) mean += static_cast<double>(d);
  mean /= static_cast<double>(daily.size());
  double acc = 0;
  for (long long d : daily) acc += (d - mean) * (d - mean);
  return acc / static_cast<double>(daily.size());
}

struct BruteForceOptimum {
  int feasible = 0;
  double best_variance = std::numeric_limits<double>::infinity();
};

/// Scans all 2^(m*n) bit matrices, keeping rows that are one linear run of
/// exactly J_x ones whose starts respect `front` (paper or strict order).
inline BruteForceOptimum brute_force_optimum(const ProjectInstance& inst,
                                             bool strict) {
  const int m = inst.job_count();
  const int n = inst.horizon;
  const int cells = m * n;
  BruteForceOptimum out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<int> start(static_cast<std::size_t>(m), 0);
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) {
      int ones = 0, first = -1, last = -1;
      for (int i = 0; i < n; ++i) {
        if (mask >> (x * n + i) & 1) {
          ++ones;
          if (first < 0) first = i;
          last = i;
        }
      }
      ok = ones == inst.jobs[x].duration && last - first + 1 == ones;
      start[x] = first + 1;
    }
    for (int x = 0; x < m && ok; ++x) {
      for (int y = 0; y < m && ok; ++y) {
        if (!inst.front.at(x + 1, y + 1)) continue;
        const int earliest = strict ? start[y] + inst.jobs[y].duration : start[y];
        ok = earliest <= start[x];
      }
    }
    if (!ok) continue;
    ++out.feasible;
    std::vector<long long> daily(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < m; ++x) {
      for (int i = 0; i < n; ++i) {
        if (mask >> (x * n + i) & 1) daily[i] += inst.jobs[x].demand;
      }
    }
    out.best_variance = std::min(out.best_variance, reference_variance(daily));
  }
  return out;
}

inline ProjectInstance disjointable_instance() {
  ProjectInstance inst;
  inst.horizon = 4;
  inst.jobs = {{"A", 2, 1}, {"B", 2, 1}};
  inst.front = PrecedenceTable(2);
  return inst;
}

}  // namespace leveling::testing

#endif  // LEVELING_TESTS_SUPPORT_HPP
