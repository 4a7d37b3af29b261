#ifndef LEVELING_ENERGY_HPP
#define LEVELING_ENERGY_HPP

#include <cstddef>
#include <vector>

#include "leveling/instance.hpp"

namespace leveling {

/// Penalty coefficients of the four energy terms. The paper's symbols are
/// given next to each field.
struct PenaltyParams {
  double load_weight = 1.0;          // M, resource smoothing (E0)
  double duration_weight = 300.0;    // A, row sum equals duration (E1)
  double continuity_weight = 200.0;  // F, no interruption (E2)
  double precedence_weight = 200.0;  // J, start order (E3)
  double z = 200.0;                  // Z, listed with the others; unused
  double average_demand = 0.0;       // Qm

  /// Paper defaults with Qm = average_demand(instance).
  static PenaltyParams defaults_for(const ProjectInstance& instance);

  void check() const;
};

struct EnergyBreakdown {
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double total = 0.0;
};

/// One neuron per APM cell, linear index (x-1)*n + i counted from 1.
struct NeuronIndex {
  int row = 1;
  int col = 1;

  int linear(int cols) const { return (row - 1) * cols + col; }
  static NeuronIndex from_linear(int linear, int cols) {
    return {(linear - 1) / cols + 1, (linear - 1) % cols + 1};
  }
};

/// Circular right neighbour of column i: mod(i, n) + 1.
inline int next_column(int i, int n) { return i % n + 1; }
/// Circular left neighbour, the inverse of next_column.
inline int prev_column(int i, int n) { return (i + n - 2) % n + 1; }

double e0(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params);
double e1(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params);
double e2(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params);
double e3(const ScheduleMatrix& schedule, const ProjectInstance& instance,
          const PenaltyParams& params);

EnergyBreakdown total_energy(const ScheduleMatrix& schedule,
                             const ProjectInstance& instance,
                             const PenaltyParams& params);

/// Change of the total energy if `neuron` were flipped. Only the column,
/// row, circular neighbours and precedence partners touched by the flip are
/// visited.
double delta_energy(const ScheduleMatrix& schedule,
                    const ProjectInstance& instance,
                    const PenaltyParams& params, NeuronIndex neuron);

enum class SynapseMode {
  kFaithful,   // biases exactly as printed
  kCorrected,  // biases lowered by F/2 so the quadratic form matches E0+E1+E2
};

/// Dense weights T (asymmetric) and biases I over the m*n neurons built from
/// E0, E1 and E2. The precedence term has no weights.
class SynapticSystem {
 public:
  SynapticSystem(const ProjectInstance& instance, const PenaltyParams& params,
                 SynapseMode mode);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int neurons() const { return rows_ * cols_; }
  SynapseMode mode() const { return mode_; }

  /// T_{a,b} for 1-based linear indices.
  double weight(int a, int b) const {
    return weights_[static_cast<std::size_t>(a - 1) * neurons() + (b - 1)];
  }
  double weight(NeuronIndex a, NeuronIndex b) const {
    return weight(a.linear(cols_), b.linear(cols_));
  }
  double bias(int a) const { return biases_[static_cast<std::size_t>(a - 1)]; }
  double bias(NeuronIndex a) const { return bias(a.linear(cols_)); }

  /// Row a of T as a contiguous block of neurons() values.
  const double* weight_row(int a) const {
    return weights_.data() + static_cast<std::size_t>(a - 1) * neurons();
  }

 private:
  int rows_;
  int cols_;
  SynapseMode mode_;
  std::vector<double> weights_;
  std::vector<double> biases_;
};

SynapticSystem build_synapses(const ProjectInstance& instance,
                              const PenaltyParams& params, SynapseMode mode);

/// -1/2 sum_{a,b} T_ab v_a v_b - sum_a I_a v_a over all ordered pairs.
double quadratic_energy(const SynapticSystem& synapses,
                        const ScheduleMatrix& schedule);

/// The constant dropped when E0+E1+E2 is expanded into the quadratic form:
/// (M/2) n Qm^2 + (A/2) sum_x J_x^2.
double quadratic_offset(const ProjectInstance& instance,
                        const PenaltyParams& params);

/// h_a = sum_b T_ab v_b + I_a, self coupling included.
double local_field(const SynapticSystem& synapses,
                   const ScheduleMatrix& schedule, NeuronIndex neuron);

}  // namespace leveling

#endif  // LEVELING_ENERGY_HPP
