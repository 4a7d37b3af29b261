#include "leveling/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

namespace leveling {

void SolverConfig::check() const {
  if (!(initial_temperature > 0)) {
    throw LevelingError("initial temperature must be positive");
  }
  if (!(cooling_rate > 0 && cooling_rate < 1)) {
    throw LevelingError("cooling rate a must lie in (0, 1)");
  }
  if (chain_length < 1) throw LevelingError("chain length L must be >= 1");
  if (!(metropolis_scale > 0)) throw LevelingError("K must be positive");
  if (!(stop_temperature > 0 && stop_temperature < initial_temperature)) {
    throw LevelingError("Estop must lie in (0, T0)");
  }
  if (max_outer < 0) throw LevelingError("max outer iterations must be >= 0");
}

void write_trace_csv(std::ostream& out, const EnergyTrace& trace) {
  out << "outer,temperature,step,energy,best_energy,accepted\n";
  char line[160];
  for (const TraceRecord& r : trace.records) {
    std::snprintf(line, sizeof line, "%d,%.12g,%d,%.12g,%.12g,%d\n", r.outer,
                  r.temperature, r.step, r.energy, r.best_energy,
                  r.accepted ? 1 : 0);
    out << line;
  }
}

ScheduleMatrix initial_state(const ProjectInstance& instance,
                             InitStrategy strategy, Rng& rng) {
  const int m = instance.job_count();
  const int n = instance.horizon;
  ScheduleMatrix state(m, n);
  for (int x = 1; x <= m; ++x) {
    for (int i = 1; i <= n; ++i) {
      if (strategy == InitStrategy::kRandom) {
        state.set(x, i, static_cast<int>(rng() >> 63));
      } else {
        state.set(x, i, i <= instance.job(x).duration ? 1 : 0);
      }
    }
  }
  return state;
}

int hopfield_bit(const SynapticSystem& synapses, const ScheduleMatrix& state,
                 NeuronIndex neuron) {
  return local_field(synapses, state, neuron) >= 0.0 ? 1 : 0;
}

ScheduleMatrix propose(const ScheduleMatrix& state,
                       const SynapticSystem& synapses, NeuronIndex neuron) {
  ScheduleMatrix proposed = state;
  proposed.set(neuron.row, neuron.col, hopfield_bit(synapses, state, neuron));
  return proposed;
}

bool metropolis(double delta_e, double temperature, double scale, Rng& rng) {
  if (delta_e < 0) return true;
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return std::exp(-delta_e / (scale * temperature)) > u;
}

namespace {

class Tracker {
 public:
  Tracker(const ProjectInstance& instance, const PenaltyParams& params)
      : instance_(instance), params_(params) {}

  double best_total() const { return best_.energy.total; }

  void offer(const ScheduleMatrix& state, double energy) {
    if (!has_best_ || energy < best_.energy.total) {
      const EnergyBreakdown exact = total_energy(state, instance_, params_);
      if (!has_best_ || exact.total < best_.energy.total) {
        best_.schedule = state;
        best_.energy = exact;
        has_best_ = true;
      }
    }
    if (!best_feasible_ || energy < best_feasible_->energy.total) {
      if (decode(state, instance_).feasible()) {
        best_feasible_ = ScoredSchedule{
            state, total_energy(state, instance_, params_),
            variance(profile(state, instance_))};
      }
    }
  }

  ScoredSchedule best() const { return best_; }
  const std::optional<ScoredSchedule>& best_feasible() const {
    return best_feasible_;
  }

 private:
  const ProjectInstance& instance_;
  const PenaltyParams& params_;
  bool has_best_ = false;
  ScoredSchedule best_;
  std::optional<ScoredSchedule> best_feasible_;
};

}  // namespace

TrialOutcome run(const ProjectInstance& instance, const PenaltyParams& params,
                 const SolverConfig& config) {
  return run(instance, params, config,
             build_synapses(instance, params, config.synapse_mode));
}

TrialOutcome run(const ProjectInstance& instance, const PenaltyParams& params,
                 const SolverConfig& config, const SynapticSystem& synapses) {
  config.check();
  params.check();
  if (has_errors(validate(instance))) {
    throw LevelingError("instance failed validation");
  }
  const auto started = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  const int n = instance.horizon;
  const int neurons = instance.job_count() * n;
  std::uniform_int_distribution<int> pick(1, neurons);

  ScheduleMatrix state = initial_state(instance, config.init, rng);
  double energy = total_energy(state, instance, params).total;

  TrialOutcome outcome;
  TrialResult& result = outcome.result;
  result.seed = config.seed;
  result.initial_energy = energy;

  Tracker tracker(instance, params);
  tracker.offer(state, energy);

  double temperature = config.initial_temperature;
  for (int outer = 0; outer < config.max_outer; ++outer) {
    for (int step = 1; step <= config.chain_length; ++step) {
      const NeuronIndex neuron = NeuronIndex::from_linear(pick(rng), n);
      const int current = state.at(neuron.row, neuron.col);
      const int proposed = hopfield_bit(synapses, state, neuron);

      double delta = 0.0;
      if (proposed != current) {
        delta = delta_energy(state, instance, params, neuron);
        state.flip(neuron.row, neuron.col);
        tracker.offer(state, energy + delta);
        state.flip(neuron.row, neuron.col);
      }
      const bool accepted =
          metropolis(delta, temperature, config.metropolis_scale, rng);
      if (accepted && proposed != current) {
        state.flip(neuron.row, neuron.col);
        energy += delta;
      }
      ++result.inner_steps;
      if (config.record_trace) {
        outcome.trace.records.push_back({outer, temperature, step, energy,
                                         tracker.best_total(), accepted,
                                         delta});
      }
    }
    ++result.outer_iterations;
    // Drop accumulated rounding from the incremental updates.
    energy = total_energy(state, instance, params).total;
    temperature = cool(temperature, config.cooling_rate);
    if (temperature <= config.stop_temperature) break;
  }

  const ScoredSchedule best = tracker.best();
  result.best_schedule = best.schedule;
  result.best_energy = best.energy;
  result.best_variance = variance(profile(best.schedule, instance));
  result.decoded = decode(best.schedule, instance);
  result.best_feasible = tracker.best_feasible();
  result.final_energy = total_energy(state, instance, params).total;
  result.final_schedule = std::move(state);
  result.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  return outcome;
}

BatchSummary run_batch(const ProjectInstance& instance,
                       const PenaltyParams& params, const SolverConfig& config,
                       int trials, int workers) {
  if (trials < 1) throw LevelingError("trials must be >= 1");
  config.check();
  const SynapticSystem synapses =
      build_synapses(instance, params, config.synapse_mode);

  BatchSummary summary;
  summary.trials.resize(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int t = next++; t < trials; t = next++) {
      SolverConfig trial_config = config;
      trial_config.seed = config.seed + static_cast<std::uint64_t>(t);
      trial_config.record_trace = false;
      summary.trials[static_cast<std::size_t>(t)] =
          run(instance, params, trial_config, synapses).result;
    }
  };

  const int threads = std::clamp(workers, 1, trials);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
  }

  for (const TrialResult& r : summary.trials) {
    summary.avg_steps += static_cast<double>(r.inner_steps);
    summary.avg_time += r.wall_time;
    summary.avg_energy += r.best_energy.total;
    summary.avg_variance += r.best_variance;
  }
  summary.avg_steps /= trials;
  summary.avg_time /= trials;
  summary.avg_energy /= trials;
  summary.avg_variance /= trials;
  return summary;
}

}  // namespace leveling
