#ifndef LEVELING_SOLVER_HPP
#define LEVELING_SOLVER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "leveling/energy.hpp"
#include "leveling/instance.hpp"

namespace leveling {

using Rng = std::mt19937_64;

enum class InitStrategy { kRandom, kEarliestStart };

struct SolverConfig {
  double initial_temperature = 100.0;  // T0
  double cooling_rate = 0.90;          // a
  int chain_length = 1000;             // L, inner steps per temperature
  double metropolis_scale = 1.0;       // K
  double stop_temperature = 0.01;      // Estop
  int max_outer = 200;
  InitStrategy init = InitStrategy::kRandom;
  std::uint64_t seed = 0;
  SynapseMode synapse_mode = SynapseMode::kFaithful;
  bool record_trace = true;

  void check() const;
};

struct TraceRecord {
  int outer = 0;        // 0-based outer iteration
  double temperature = 0.0;
  int step = 0;         // 1-based inner step within the outer iteration
  double energy = 0.0;  // energy of the retained state after this step
  double best_energy = 0.0;
  bool accepted = false;
  double delta = 0.0;   // proposed energy change, 0 for a null move
};

struct EnergyTrace {
  std::vector<TraceRecord> records;
};

/// CSV with header `outer,temperature,step,energy,best_energy,accepted`.
void write_trace_csv(std::ostream& out, const EnergyTrace& trace);

struct ScoredSchedule {
  ScheduleMatrix schedule;
  EnergyBreakdown energy;
  double variance = 0.0;
};

struct TrialResult {
  ScheduleMatrix best_schedule;
  EnergyBreakdown best_energy;
  double best_variance = 0.0;
  DecodedSchedule decoded;

  /// Lowest-energy state seen that decodes as feasible, if any.
  std::optional<ScoredSchedule> best_feasible;

  ScheduleMatrix final_schedule;
  double final_energy = 0.0;
  double initial_energy = 0.0;

  long long inner_steps = 0;
  int outer_iterations = 0;
  double wall_time = 0.0;  // seconds
  std::uint64_t seed = 0;
};

struct TrialOutcome {
  TrialResult result;
  EnergyTrace trace;
};

ScheduleMatrix initial_state(const ProjectInstance& instance,
                             InitStrategy strategy, Rng& rng);

/// Asynchronous threshold update of a single neuron: 1 if its local field is
/// >= 0, else 0.
int hopfield_bit(const SynapticSystem& synapses, const ScheduleMatrix& state,
                 NeuronIndex neuron);

/// `state` with `neuron` set to its threshold value. Unchanged when the
/// neuron already holds that value.
ScheduleMatrix propose(const ScheduleMatrix& state,
                       const SynapticSystem& synapses, NeuronIndex neuron);

/// Accepts downhill moves outright; otherwise accepts when
/// exp(-delta/(K*T)) > u for u uniform in [0, 1).
bool metropolis(double delta_e, double temperature, double scale, Rng& rng);

inline double cool(double temperature, double rate) {
  return rate * temperature;
}

/// One DHNN-SA trial. Builds its own synaptic system.
TrialOutcome run(const ProjectInstance& instance, const PenaltyParams& params,
                 const SolverConfig& config);

/// One DHNN-SA trial with a shared, prebuilt synaptic system.
TrialOutcome run(const ProjectInstance& instance, const PenaltyParams& params,
                 const SolverConfig& config, const SynapticSystem& synapses);

struct BatchSummary {
  std::vector<TrialResult> trials;  // ordered by trial index
  double avg_steps = 0.0;
  double avg_time = 0.0;
  double avg_energy = 0.0;
  double avg_variance = 0.0;
};

/// `trials` independent runs seeded config.seed, config.seed + 1, ...
/// executed on up to `workers` threads.
BatchSummary run_batch(const ProjectInstance& instance,
                       const PenaltyParams& params, const SolverConfig& config,
                       int trials, int workers = 1);

}  // namespace leveling

#endif  // LEVELING_SOLVER_HPP
