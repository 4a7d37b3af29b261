#include "leveling/energy.hpp"

#include <algorithm>
#include <cmath>

namespace leveling {

namespace {

// sgn as used by the precedence term: 1 for d >= 0, else 0.
int step_sign(int d) { return d >= 0 ? 1 : 0; }

// Penalty for job x starting at pos_x relative to a front job starting at
// pos_y; nonzero only when the front job starts later.
double lateness(int pos_x, int pos_y) {
  const int d = pos_y - pos_x;
  return static_cast<double>(d) * step_sign(d);
}

double column_load(const ScheduleMatrix& schedule,
                   const ProjectInstance& instance, int i) {
  double load = 0.0;
  for (int x = 1; x <= schedule.rows(); ++x) {
    load += static_cast<double>(instance.job(x).demand) * schedule.at(x, i);
  }
  return load;
}

}  // namespace

PenaltyParams PenaltyParams::defaults_for(const ProjectInstance& instance) {
  PenaltyParams p;
  p.average_demand = leveling::average_demand(instance);
  return p;
}

void PenaltyParams::check() const {
  if (load_weight < 0 || duration_weight < 0 || continuity_weight < 0 ||
      precedence_weight < 0) {
    throw LevelingError("penalty coefficients must be nonnegative");
  }
  if (average_demand < 0) throw LevelingError("Qm must be nonnegative");
}

double e0(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params) {
  check_dimensions(schedule, instance);
  double sum = 0.0;
  for (int i = 1; i <= schedule.cols(); ++i) {
    const double d = column_load(schedule, instance, i) - params.average_demand;
    sum += d * d;
  }
  return params.load_weight / 2.0 * sum;
}

double e1(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params) {
  check_dimensions(schedule, instance);
  double sum = 0.0;
  for (int x = 1; x <= schedule.rows(); ++x) {
    const double d = schedule.row_sum(x) - instance.job(x).duration;
    sum += d * d;
  }
  return params.duration_weight / 2.0 * sum;
}

double e2(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params) {
  check_dimensions(schedule, instance);
  const int n = schedule.cols();
  double sum = 0.0;
  for (int x = 1; x <= schedule.rows(); ++x) {
    for (int i = 1; i <= n; ++i) {
      const int d = schedule.at(x, i) - schedule.at(x, next_column(i, n));
      sum += d * d;
    }
  }
  return params.continuity_weight / 2.0 * sum;
}

double e3(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params) {
  check_dimensions(schedule, instance);
  const int m = schedule.rows();
  std::vector<int> pos(static_cast<std::size_t>(m) + 1);
  for (int x = 1; x <= m; ++x) pos[x] = first_active_day(schedule, x);
  double sum = 0.0;
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (instance.front.at(x, y)) sum += lateness(pos[x], pos[y]);
    }
  }
  return params.precedence_weight * sum;
}

EnergyBreakdown total_energy(const ScheduleMatrix& schedule,
                             const ProjectInstance& instance,
                             const PenaltyParams& params) {
  EnergyBreakdown out;
  out.e0 = e0(schedule, instance, params);
  out.e1 = e1(schedule, instance, params);
  out.e2 = e2(schedule, instance, params);
  out.e3 = e3(schedule, instance, params);
  out.total = out.e0 + out.e1 + out.e2 + out.e3;
  return out;
}

double delta_energy(const ScheduleMatrix& schedule,
                    const ProjectInstance& instance,
                    const PenaltyParams& params, NeuronIndex neuron) {
  const int m = schedule.rows();
  const int n = schedule.cols();
  const int x = neuron.row;
  const int i = neuron.col;
  const int old_bit = schedule.at(x, i);
  const int new_bit = 1 - old_bit;
  const int sign = new_bit - old_bit;

  // E0: only column i's load moves, by +-Q_x.
  const double before = column_load(schedule, instance, i) - params.average_demand;
  const double after = before + sign * static_cast<double>(instance.job(x).demand);
  const double d0 = params.load_weight / 2.0 * (after * after - before * before);

  // E1: only row x's sum moves, by +-1.
  const double gap = schedule.row_sum(x) - instance.job(x).duration;
  const double d1 =
      params.duration_weight / 2.0 * ((gap + sign) * (gap + sign) - gap * gap);

  // E2: the two circular pairs (prev, i) and (i, next). With n == 1 the only
  // pair is (1, 1), which is always zero.
  double d2 = 0.0;
  if (n > 1) {
    const int left = schedule.at(x, prev_column(i, n));
    const int right = schedule.at(x, next_column(i, n));
    auto sq = [](int v) { return static_cast<double>(v * v); };
    d2 = params.continuity_weight / 2.0 *
         (sq(left - new_bit) - sq(left - old_bit) + sq(new_bit - right) -
          sq(old_bit - right));
  }

  // E3: only pos_x can change.
  double d3 = 0.0;
  if (instance.front.count() > 0) {
    const int old_pos = first_active_day(schedule, x);
    int new_pos = old_pos;
    if (new_bit == 1) {
      new_pos = std::min(old_pos, i);
    } else if (i == old_pos) {
      new_pos = n + 1;
      for (int j = i + 1; j <= n; ++j) {
        if (schedule.at(x, j) == 1) {
          new_pos = j;
          break;
        }
      }
    }
    if (new_pos != old_pos) {
      double change = 0.0;
      for (int y = 1; y <= m; ++y) {
        if (y == x) continue;
        const bool x_after_y = instance.front.at(x, y);
        const bool y_after_x = instance.front.at(y, x);
        if (!x_after_y && !y_after_x) continue;
        const int pos_y = first_active_day(schedule, y);
        if (x_after_y) {
          change += lateness(new_pos, pos_y) - lateness(old_pos, pos_y);
        }
        if (y_after_x) {
          change += lateness(pos_y, new_pos) - lateness(pos_y, old_pos);
        }
      }
      d3 = params.precedence_weight * change;
    }
  }
  return d0 + d1 + d2 + d3;
}

SynapticSystem::SynapticSystem(const ProjectInstance& instance,
                               const PenaltyParams& params, SynapseMode mode)
    : rows_(instance.job_count()), cols_(instance.horizon), mode_(mode) {
  const int size = neurons();
  weights_.assign(static_cast<std::size_t>(size) * size, 0.0);
  biases_.assign(static_cast<std::size_t>(size), 0.0);
  const double M = params.load_weight;
  const double A = params.duration_weight;
  const double F = params.continuity_weight;

  for (int x = 1; x <= rows_; ++x) {
    const double qx = instance.job(x).demand;
    for (int i = 1; i <= cols_; ++i) {
      const int a = NeuronIndex{x, i}.linear(cols_);
      double* row = weights_.data() + static_cast<std::size_t>(a - 1) * size;
      for (int y = 1; y <= rows_; ++y) {
        const double qy = instance.job(y).demand;
        for (int j = 1; j <= cols_; ++j) {
          double t = 0.0;
          if (i == j) t -= M * qx * qy;
          if (x == y) {
            t -= A;
            if (i == j) t -= F;
            if (j == next_column(i, cols_)) t += 2.0 * F;
          }
          row[NeuronIndex{y, j}.linear(cols_) - 1] = t;
        }
      }
      double bias = M * qx * params.average_demand +
                    A * instance.job(x).duration;
      if (mode == SynapseMode::kCorrected) bias -= F / 2.0;
      biases_[static_cast<std::size_t>(a - 1)] = bias;
    }
  }
}

SynapticSystem build_synapses(const ProjectInstance& instance,
                              const PenaltyParams& params, SynapseMode mode) {
  return SynapticSystem(instance, params, mode);
}

namespace {

void check_dimensions(const SynapticSystem& synapses,
                      const ScheduleMatrix& schedule) {
  if (synapses.rows() != schedule.rows() || synapses.cols() != schedule.cols()) {
    throw LevelingError("schedule does not match synaptic system dimensions");
  }
}

}  // namespace

double quadratic_energy(const SynapticSystem& synapses,
                        const ScheduleMatrix& schedule) {
  check_dimensions(synapses, schedule);
  const auto& v = schedule.bits();
  const int size = synapses.neurons();
  double quadratic = 0.0;
  double linear = 0.0;
  for (int a = 1; a <= size; ++a) {
    if (!v[static_cast<std::size_t>(a - 1)]) continue;
    const double* row = synapses.weight_row(a);
    for (int b = 1; b <= size; ++b) {
      if (v[static_cast<std::size_t>(b - 1)]) quadratic += row[b - 1];
    }
    linear += synapses.bias(a);
  }
  return -0.5 * quadratic - linear;
}

double quadratic_offset(const ProjectInstance& instance,
                        const PenaltyParams& params) {
  double squares = 0.0;
  for (const Job& job : instance.jobs) {
    squares += static_cast<double>(job.duration) * job.duration;
  }
  const double qm = params.average_demand;
  return params.load_weight / 2.0 * instance.horizon * qm * qm +
         params.duration_weight / 2.0 * squares;
}

double local_field(const SynapticSystem& synapses,
                   const ScheduleMatrix& schedule, NeuronIndex neuron) {
  check_dimensions(synapses, schedule);
  const int a = neuron.linear(synapses.cols());
  const double* row = synapses.weight_row(a);
  const auto& v = schedule.bits();
  double h = synapses.bias(a);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b]) h += row[b];
  }
  return h;
}

}  // namespace leveling
