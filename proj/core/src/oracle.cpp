#include "leveling/oracle.hpp"

#include <algorithm>
#include <limits>

namespace leveling {

namespace {

bool ordered(const ProjectInstance& instance, const std::vector<int>& starts,
             PrecedenceMode mode) {
  const int m = instance.job_count();
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (!instance.front.at(x, y)) continue;
      const int pos_x = starts[static_cast<std::size_t>(x - 1)];
      int pos_y = starts[static_cast<std::size_t>(y - 1)];
      if (mode == PrecedenceMode::kStrict) pos_y += instance.job(y).duration;
      if (pos_y > pos_x) return false;
    }
  }
  return true;
}

// n^2 times the population variance; exact for integer loads.
long long scaled_variance(const ScheduleMatrix& schedule,
                          const ProjectInstance& instance) {
  const ResourceProfile p = profile(schedule, instance);
  long long sum = 0;
  long long squares = 0;
  for (long long load : p.daily) {
    sum += load;
    squares += load * load;
  }
  return static_cast<long long>(p.daily.size()) * squares - sum * sum;
}

}  // namespace

std::uint64_t placement_count(const ProjectInstance& instance) {
  std::uint64_t count = 1;
  for (const Job& job : instance.jobs) {
    const auto choices =
        static_cast<std::uint64_t>(std::max(0, instance.horizon - job.duration + 1));
    if (choices == 0) return 0;
    if (count > std::numeric_limits<std::uint64_t>::max() / choices) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= choices;
  }
  return count;
}

void enumerate_schedules(
    const ProjectInstance& instance, PrecedenceMode mode,
    const std::function<void(const std::vector<int>&, const ScheduleMatrix&)>&
        visit) {
  const std::uint64_t space = placement_count(instance);
  if (space > kEnumerationGuard) {
    throw GuardExceeded("state space of " + std::to_string(space) +
                        " placements exceeds the guard of " +
                        std::to_string(kEnumerationGuard));
  }
  if (space == 0) return;

  const int m = instance.job_count();
  const int n = instance.horizon;
  std::vector<int> starts(static_cast<std::size_t>(m), 1);
  ScheduleMatrix schedule(m, n);
  auto place = [&](int x, int start) {
    const int duration = instance.job(x).duration;
    for (int i = 1; i <= n; ++i) {
      schedule.set(x, i, i >= start && i < start + duration ? 1 : 0);
    }
  };
  for (int x = 1; x <= m; ++x) place(x, 1);

  while (true) {
    if (ordered(instance, starts, mode)) visit(starts, schedule);
    // Odometer with the last job as the fastest digit.
    int x = m;
    while (x >= 1) {
      auto& s = starts[static_cast<std::size_t>(x - 1)];
      if (s < n - instance.job(x).duration + 1) {
        ++s;
        place(x, s);
        break;
      }
      s = 1;
      place(x, 1);
      --x;
    }
    if (x < 1) return;
  }
}

std::vector<ScheduleMatrix> all_schedules(const ProjectInstance& instance,
                                          PrecedenceMode mode) {
  std::vector<ScheduleMatrix> out;
  enumerate_schedules(instance, mode,
                      [&](const std::vector<int>&, const ScheduleMatrix& s) {
                        out.push_back(s);
                      });
  return out;
}

OracleReport optimal_variance(const ProjectInstance& instance,
                              PrecedenceMode mode) {
  OracleReport report;
  report.mode = mode;
  long long best = std::numeric_limits<long long>::max();
  enumerate_schedules(
      instance, mode,
      [&](const std::vector<int>& starts, const ScheduleMatrix& schedule) {
        ++report.feasible_count;
        const long long v = scaled_variance(schedule, instance);
        if (v < best) {
          best = v;
          report.optimal_schedule = schedule;
          report.optimal_starts = starts;
        }
      });
  if (report.feasible()) {
    report.optimal_variance = variance(profile(report.optimal_schedule, instance));
  }
  return report;
}

}  // namespace leveling
