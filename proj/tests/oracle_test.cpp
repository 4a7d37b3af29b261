#include "leveling/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "leveling/energy.hpp"
#include "support.hpp"

namespace leveling {
namespace {

TEST(EnumerateTest, SingleJob) {
  ProjectInstance inst{{{"A", 2, 1}}, 3, PrecedenceTable(1)};
  const auto all = all_schedules(inst, PrecedenceMode::kPaper);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], ScheduleMatrix::from_rows({{1, 1, 0}}));
  EXPECT_EQ(all[1], ScheduleMatrix::from_rows({{0, 1, 1}}));
}

TEST(EnumerateTest, TwoJobsAndStrictOrder) {
  auto inst = testing::disjointable_instance();
  EXPECT_EQ(all_schedules(inst, PrecedenceMode::kPaper).size(), 9u);
  inst.front.set(2, 1);  // A before B
  const auto strict = all_schedules(inst, PrecedenceMode::kStrict);
  ASSERT_EQ(strict.size(), 1u);
  EXPECT_EQ(strict[0], ScheduleMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  // Paper mode allows equal starts: (1,1) (1,2) (1,3) (2,2) (2,3) (3,3).
  EXPECT_EQ(all_schedules(inst, PrecedenceMode::kPaper).size(), 6u);
}

TEST(EnumerateTest, GuardTrips) {
  ProjectInstance inst;
  inst.horizon = 40;
  for (int x = 0; x < 5; ++x) inst.jobs.push_back({"J" + std::to_string(x), 1, 1});
  inst.front = PrecedenceTable(5);
  EXPECT_EQ(placement_count(inst), 40ull * 40 * 40 * 40 * 40);
  EXPECT_THROW(all_schedules(inst, PrecedenceMode::kPaper), GuardExceeded);
}

TEST(OptimalVarianceTest, DisjointableInstance) {
  const auto inst = testing::disjointable_instance();
  const auto brute = testing::brute_force_optimum(inst, false);
  EXPECT_EQ(brute.feasible, 9);
  EXPECT_DOUBLE_EQ(brute.best_variance, 0.0);

  const auto report = optimal_variance(inst, PrecedenceMode::kPaper);
  EXPECT_EQ(report.feasible_count, 9u);
  EXPECT_DOUBLE_EQ(report.optimal_variance, 0.0);
  EXPECT_EQ(report.optimal_starts, (std::vector<int>{1, 3}));
  EXPECT_EQ(profile(report.optimal_schedule, inst).daily,
            (std::vector<long long>{1, 1, 1, 1}));
}

TEST(OptimalVarianceTest, SingleJobTieBreaksToFirstPlacement) {
  ProjectInstance inst{{{"A", 2, 3}}, 5, PrecedenceTable(1)};
  const auto report = optimal_variance(inst, PrecedenceMode::kPaper);
  EXPECT_EQ(report.feasible_count, 4u);
  EXPECT_EQ(report.optimal_starts, std::vector<int>{1});
}

TEST(OptimalVarianceTest, StrictInfeasible) {
  ProjectInstance inst{{{"A", 3, 1}, {"B", 3, 1}}, 4, PrecedenceTable(2)};
  inst.front.set(2, 1);
  const auto report = optimal_variance(inst, PrecedenceMode::kStrict);
  EXPECT_FALSE(report.feasible());
  EXPECT_EQ(report.feasible_count, 0u);
  EXPECT_TRUE(optimal_variance(inst, PrecedenceMode::kPaper).feasible());
}

TEST(OptimalVarianceTest, MatchesBitMatrixBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 3;
    const int n = 2 + trial % 4;  // m * n <= 15 cells
    const auto inst = testing::random_instance(m, n, rng, 0.5);
    for (bool strict : {false, true}) {
      const auto mode = strict ? PrecedenceMode::kStrict : PrecedenceMode::kPaper;
      const auto brute = testing::brute_force_optimum(inst, strict);
      const auto report = optimal_variance(inst, mode);
      ASSERT_EQ(report.feasible_count, static_cast<std::uint64_t>(brute.feasible));
      EXPECT_LE(report.feasible_count, placement_count(inst));
      if (brute.feasible > 0) {
        EXPECT_NEAR(report.optimal_variance, brute.best_variance, 1e-12);
      }
    }
  }
}

TEST(OptimalVarianceTest, PaperModeRelaxesStrict) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::random_instance(3, 6, rng, 0.5);
    const auto paper = optimal_variance(inst, PrecedenceMode::kPaper);
    const auto strict = optimal_variance(inst, PrecedenceMode::kStrict);
    EXPECT_GE(paper.feasible_count, strict.feasible_count);
    if (strict.feasible()) {
      EXPECT_LE(paper.optimal_variance, strict.optimal_variance + 1e-12);
    }
  }
}

TEST(EnumerateTest, EveryScheduleIsAZeroPenaltyState) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_instance(3, 5, rng, 0.5);
    const auto p = PenaltyParams::defaults_for(inst);
    enumerate_schedules(inst, PrecedenceMode::kPaper,
                        [&](const std::vector<int>&, const ScheduleMatrix& s) {
                          const auto e = total_energy(s, inst, p);
                          EXPECT_DOUBLE_EQ(e.e1, 0.0);
                          EXPECT_DOUBLE_EQ(e.e3, 0.0);
                          int partial = 0;
                          for (int x = 1; x <= 3; ++x) partial += s.row_sum(x) < 5;
                          EXPECT_DOUBLE_EQ(e.e2, p.continuity_weight * partial);
                          EXPECT_TRUE(decode(s, inst).feasible());
                        });
  }
}

}  // namespace
}  // namespace leveling
