#include "cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace leveling::cli {

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string mode_name(PrecedenceMode mode) {
  return mode == PrecedenceMode::kPaper ? "paper" : "strict";
}

std::string init_name(InitStrategy init) {
  return init == InitStrategy::kRandom ? "random" : "earliest";
}

std::string synapse_name(SynapseMode mode) {
  return mode == SynapseMode::kFaithful ? "faithful" : "corrected";
}

std::string render_timing(const ProjectInstance& instance,
                          const DecodedSchedule& decoded) {
  std::string out = fmt::format("{:<10} {:>6} {:>6} {:>8} {:>6}\n", "job",
                                "start", "finish", "duration", "demand");
  for (int x = 1; x <= instance.job_count(); ++x) {
    const JobTiming& t = decoded.timing[static_cast<std::size_t>(x - 1)];
    const std::string start =
        t.start > instance.horizon ? "-" : std::to_string(t.start);
    const std::string finish = t.finish == 0 ? "-" : std::to_string(t.finish);
    out += fmt::format("{:<10} {:>6} {:>6} {:>8} {:>6}\n", instance.job(x).id,
                       start, finish, instance.job(x).duration,
                       instance.job(x).demand);
  }
  return out;
}

std::string render_flags(const DecodedSchedule& d) {
  return fmt::format(
      "flags      durations_match={} rows_contiguous_linear={} "
      "precedence_paper={} precedence_strict={}\n",
      yes_no(d.durations_match), yes_no(d.rows_contiguous_linear),
      yes_no(d.precedence_paper_mode), yes_no(d.precedence_strict));
}

std::string render_energy(const EnergyBreakdown& e) {
  return fmt::format("energy     total={:.6f} e0={:.6f} e1={:.6f} e2={:.6f} e3={:.6f}\n",
                     e.total, e.e0, e.e1, e.e2, e.e3);
}

}  // namespace

std::string render_profile_table(
    const std::vector<std::pair<std::string, ResourceProfile>>& rows) {
  std::size_t days = 0;
  for (const auto& row : rows) days = std::max(days, row.second.daily.size());
  std::string out = fmt::format("{:<10}", "Day");
  for (std::size_t i = 1; i <= days; ++i) out += fmt::format(" {:>4}", i);
  out += fmt::format(" {:>9}\n", "Variance");
  for (const auto& [label, p] : rows) {
    out += fmt::format("{:<10}", label);
    for (long long load : p.daily) out += fmt::format(" {:>4}", load);
    out += fmt::format(" {:>9.2f}\n", variance(p));
  }
  return out;
}

std::string render_solve_report(const ProjectInstance& instance,
                                const PenaltyParams& params,
                                const SolverConfig& config,
                                const TrialResult& result) {
  std::string out;
  out += fmt::format("instance   {} jobs x {} days, {} precedence pairs\n",
                     instance.job_count(), instance.horizon,
                     instance.front.count());
  out += fmt::format("penalty    M={} A={} F={} J={} Z={} (unused) Qm={:.6f}\n",
                     params.load_weight, params.duration_weight,
                     params.continuity_weight, params.precedence_weight,
                     params.z, params.average_demand);
  out += fmt::format(
      "anneal     T0={} a={} L={} K={} Estop={} max-outer={} init={} "
      "synapses={} seed={}\n\n",
      config.initial_temperature, config.cooling_rate, config.chain_length,
      config.metropolis_scale, config.stop_temperature, config.max_outer,
      init_name(config.init), synapse_name(config.synapse_mode), config.seed);

  std::vector<std::pair<std::string, ResourceProfile>> rows;
  rows.emplace_back("DHNN-SA", profile(result.best_schedule, instance));
  if (result.best_feasible &&
      result.best_feasible->schedule != result.best_schedule) {
    rows.emplace_back("feasible", profile(result.best_feasible->schedule, instance));
  }
  out += render_profile_table(rows);
  out += fmt::format("\nvariance   {:.2f}\n", result.best_variance);
  out += render_energy(result.best_energy);
  out += render_flags(result.decoded);
  if (result.best_feasible) {
    out += fmt::format("feasible   energy={:.6f} variance={:.2f}\n",
                       result.best_feasible->energy.total,
                       result.best_feasible->variance);
  } else {
    out += "feasible   none found\n";
  }
  out += fmt::format("steps      inner={} outer={}\n\n", result.inner_steps,
                     result.outer_iterations);
  out += render_timing(instance, result.decoded);
  return out;
}

std::string render_batch_report(const BatchSummary& summary) {
  std::string out = fmt::format("{:<4} {:>11} {:>10} {:>12} {:>9} {:>9}\n", "No",
                                "Itera-Steps", "Itera-Time", "Mini-Energy",
                                "Variance", "Feasible");
  for (std::size_t t = 0; t < summary.trials.size(); ++t) {
    const TrialResult& r = summary.trials[t];
    const std::string feasible =
        r.best_feasible ? fmt::format("{:.2f}", r.best_feasible->variance) : "-";
    out += fmt::format("{:<4} {:>11} {:>10.2f} {:>12.2f} {:>9.2f} {:>9}\n", t + 1,
                       r.inner_steps, r.wall_time, r.best_energy.total,
                       r.best_variance, feasible);
  }
  out += fmt::format("{:<4} {:>11.0f} {:>10.2f} {:>12.2f} {:>9.2f}\n", "Avg",
                     summary.avg_steps, summary.avg_time, summary.avg_energy,
                     summary.avg_variance);
  return out;
}

std::string render_oracle_report(const ProjectInstance& instance,
                                 const OracleReport& report) {
  std::string out = fmt::format("mode              {}\n", mode_name(report.mode));
  out += fmt::format("placements        {}\n", placement_count(instance));
  out += fmt::format("feasible          {}\n", report.feasible_count);
  if (!report.feasible()) {
    out += "infeasible\n";
    return out;
  }
  out += fmt::format("optimal_variance  {:.2f}\n", report.optimal_variance);
  std::string starts;
  for (std::size_t x = 0; x < report.optimal_starts.size(); ++x) {
    starts += fmt::format("{}{}={}", x == 0 ? "" : " ", instance.jobs[x].id,
                          report.optimal_starts[x]);
  }
  out += fmt::format("starts            {}\n\n", starts);
  out += render_profile_table(
      {{"oracle", profile(report.optimal_schedule, instance)}});
  return out;
}

namespace {

struct Options {
  std::string instance_path;
  double M = 1.0, A = 300.0, F = 200.0, J = 200.0, Z = 200.0;
  SolverConfig config;
  std::string trace_path;
  int trials = 5;
  int jobs = 1;
  PrecedenceMode mode = PrecedenceMode::kPaper;
};

void add_instance(CLI::App* cmd, Options& o) {
  cmd->add_option("instance", o.instance_path, "Instance JSON file")
      ->required();
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--M", o.M, "Load smoothing penalty")->capture_default_str();
  cmd->add_option("--A", o.A, "Duration penalty")->capture_default_str();
  cmd->add_option("--F", o.F, "Non-interrupt penalty")->capture_default_str();
  cmd->add_option("--J", o.J, "Precedence penalty")->capture_default_str();
  cmd->add_option("--Z", o.Z, "Accepted and echoed; has no energy term")
      ->capture_default_str();
  cmd->add_option("--K", o.config.metropolis_scale, "Metropolis scale")
      ->capture_default_str();
  cmd->add_option("--T0", o.config.initial_temperature, "Initial temperature")
      ->capture_default_str();
  cmd->add_option("--a", o.config.cooling_rate, "Cooling rate, T' = a*T")
      ->capture_default_str();
  cmd->add_option("--L", o.config.chain_length, "Inner steps per temperature")
      ->capture_default_str();
  cmd->add_option("--Estop", o.config.stop_temperature, "Stop temperature")
      ->capture_default_str();
  cmd->add_option("--max-outer", o.config.max_outer, "Outer iteration cap")
      ->capture_default_str();
  cmd->add_option("--init", o.config.init, "Initial state")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InitStrategy>{
              {"random", InitStrategy::kRandom},
              {"earliest", InitStrategy::kEarliestStart}},
          CLI::ignore_case));
  cmd->add_option("--synapses", o.config.synapse_mode,
                  "Bias variant used by the state generator")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SynapseMode>{
              {"faithful", SynapseMode::kFaithful},
              {"corrected", SynapseMode::kCorrected}},
          CLI::ignore_case));
  cmd->add_option("--seed", o.config.seed, "RNG seed")->capture_default_str();
}

PenaltyParams penalty_from(const Options& o, const ProjectInstance& instance) {
  PenaltyParams p = PenaltyParams::defaults_for(instance);
  p.load_weight = o.M;
  p.duration_weight = o.A;
  p.continuity_weight = o.F;
  p.precedence_weight = o.J;
  p.z = o.Z;
  p.check();
  return p;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ProjectInstance instance = load_instance_file(o.instance_path);
  const PenaltyParams params = penalty_from(o, instance);
  SolverConfig config = o.config;
  config.record_trace = !o.trace_path.empty();
  const TrialOutcome outcome = leveling::run(instance, params, config);
  out << render_solve_report(instance, params, config, outcome.result);
  if (!o.trace_path.empty()) {
    std::ofstream trace(o.trace_path);
    if (!trace) throw LevelingError("cannot write trace file '" + o.trace_path + "'");
    write_trace_csv(trace, outcome.trace);
  }
  return kOk;
}

int cmd_batch(const Options& o, std::ostream& out) {
  const ProjectInstance instance = load_instance_file(o.instance_path);
  const PenaltyParams params = penalty_from(o, instance);
  const BatchSummary summary =
      run_batch(instance, params, o.config, o.trials, o.jobs);
  out << render_batch_report(summary);
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const ProjectInstance instance = load_instance_file(o.instance_path);
  const OracleReport report = optimal_variance(instance, o.mode);
  out << render_oracle_report(instance, report);
  return report.feasible() ? kOk : kInfeasible;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::ifstream in(o.instance_path);
  if (!in) throw LevelingError("cannot open instance file '" + o.instance_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const ProjectInstance instance = read_instance(text.str());
  const std::vector<Diagnostic> diagnostics = validate(instance);
  if (diagnostics.empty()) {
    out << "OK\n";
    return kOk;
  }
  for (const Diagnostic& d : diagnostics) {
    out << (d.severity == Severity::kError ? "error: " : "warning: ")
        << d.message << '\n';
  }
  return has_errors(diagnostics) ? kInvalid : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Resource leveling with a Hopfield/annealing hybrid"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "Run one annealing trial");
  add_instance(solve, o);
  add_solver_flags(solve, o);
  solve->add_option("--trace", o.trace_path, "Write the energy trace CSV here");

  CLI::App* batch = app.add_subcommand("batch", "Run independent trials");
  add_instance(batch, o);
  add_solver_flags(batch, o);
  batch->add_option("--trials", o.trials, "Number of trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch->add_option("--jobs", o.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum");
  add_instance(oracle, o);
  oracle->add_option("--mode", o.mode, "Precedence interpretation")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, PrecedenceMode>{
              {"paper", PrecedenceMode::kPaper},
              {"strict", PrecedenceMode::kStrict}},
          CLI::ignore_case));

  CLI::App* check = app.add_subcommand("check", "Validate an instance file");
  add_instance(check, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*solve || *batch) o.config.check();
    if (*solve) return cmd_solve(o, out);
    if (*batch) return cmd_batch(o, out);
    if (*oracle) return cmd_oracle(o, out);
    return cmd_check(o, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const LevelingError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace leveling::cli
