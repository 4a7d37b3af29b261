#include "leveling/instance.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace leveling {

using nlohmann::json;

int PrecedenceTable::count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

int ProjectInstance::find(std::string_view id) const {
  for (std::size_t x = 0; x < jobs.size(); ++x) {
    if (jobs[x].id == id) return static_cast<int>(x) + 1;
  }
  return 0;
}

ScheduleMatrix ScheduleMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  ScheduleMatrix out(m, n);
  for (int x = 1; x <= m; ++x) {
    const auto& row = rows[static_cast<std::size_t>(x - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw LevelingError("ragged schedule rows");
    }
    for (int i = 1; i <= n; ++i) {
      const int bit = row[static_cast<std::size_t>(i - 1)];
      if (bit != 0 && bit != 1) throw LevelingError("schedule cell not 0/1");
      out.set(x, i, bit);
    }
  }
  return out;
}

int ScheduleMatrix::row_sum(int x) const {
  const auto begin = bits_.begin() + static_cast<std::ptrdiff_t>(index(x, 1));
  return std::accumulate(begin, begin + cols_, 0);
}

int ScheduleMatrix::total() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0);
}

void ScheduleMatrix::check_row(int x) const {
  if (x < 1 || x > rows_) {
    throw LevelingError("row index " + std::to_string(x) + " out of range [1, " +
                        std::to_string(rows_) + "]");
  }
}

long long ResourceProfile::total() const {
  return std::accumulate(daily.begin(), daily.end(), 0LL);
}

namespace {

int require_int(const json& node, const char* field, const std::string& where) {
  if (!node.contains(field)) {
    throw LevelingError(where + ": missing field '" + field + "'");
  }
  const json& value = node.at(field);
  if (!value.is_number_integer()) {
    throw LevelingError(where + ": field '" + field + "' must be an integer");
  }
  const auto wide = value.get<long long>();
  if (wide < std::numeric_limits<int>::min() ||
      wide > std::numeric_limits<int>::max()) {
    throw LevelingError(where + ": field '" + field + "' out of range");
  }
  return static_cast<int>(wide);
}

}  // namespace

ProjectInstance read_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LevelingError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw LevelingError("malformed document: not an object");

  ProjectInstance instance;
  instance.horizon = require_int(doc, "horizon", "instance");
  if (instance.horizon < 1) throw LevelingError("horizon must be >= 1");

  if (!doc.contains("jobs") || !doc.at("jobs").is_array()) {
    throw LevelingError("malformed document: 'jobs' must be an array");
  }
  std::unordered_set<std::string> seen;
  for (const json& node : doc.at("jobs")) {
    if (!node.is_object()) throw LevelingError("malformed job entry");
    if (!node.contains("id") || !node.at("id").is_string()) {
      throw LevelingError("job entry without string 'id'");
    }
    Job job;
    job.id = node.at("id").get<std::string>();
    const std::string where = "job '" + job.id + "'";
    job.duration = require_int(node, "duration", where);
    job.demand = require_int(node, "demand", where);
    if (job.duration < 1) throw LevelingError(where + ": duration must be >= 1");
    if (job.demand < 0) throw LevelingError(where + ": demand must be >= 0");
    if (!seen.insert(job.id).second) {
      throw LevelingError("duplicate job id '" + job.id + "'");
    }
    instance.jobs.push_back(std::move(job));
  }
  if (instance.jobs.empty()) throw LevelingError("instance has no jobs");

  instance.front = PrecedenceTable(instance.job_count());
  if (doc.contains("precedence")) {
    const json& pairs = doc.at("precedence");
    if (!pairs.is_array()) {
      throw LevelingError("malformed document: 'precedence' must be an array");
    }
    for (const json& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw LevelingError("precedence entries must be [pred, succ] id pairs");
      }
      const auto pred_id = pair[0].get<std::string>();
      const auto succ_id = pair[1].get<std::string>();
      const int pred = instance.find(pred_id);
      const int succ = instance.find(succ_id);
      if (pred == 0) throw LevelingError("unknown job id '" + pred_id + "'");
      if (succ == 0) throw LevelingError("unknown job id '" + succ_id + "'");
      if (pred == succ) {
        throw LevelingError("job '" + pred_id + "' cannot precede itself");
      }
      instance.front.set(succ, pred);
    }
  }
  return instance;
}

ProjectInstance parse_instance(std::string_view text) {
  ProjectInstance instance = read_instance(text);
  for (const Diagnostic& d : validate(instance)) {
    if (d.severity == Severity::kError) throw LevelingError(d.message);
  }
  return instance;
}

ProjectInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LevelingError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::vector<Diagnostic> validate(const ProjectInstance& instance) {
  std::vector<Diagnostic> out;
  const int m = instance.job_count();
  const int n = instance.horizon;
  for (const Job& job : instance.jobs) {
    if (job.duration > n) {
      out.push_back({Severity::kError,
                     "job '" + job.id + "': duration " +
                         std::to_string(job.duration) + " exceeds horizon " +
                         std::to_string(n)});
    }
  }

  // Edges run predecessor -> successor: front[succ][pred].
  enum Mark { kNew, kOpen, kDone };
  std::vector<Mark> mark(static_cast<std::size_t>(m) + 1, kNew);
  // Longest strict chain (sum of durations) ending at each job.
  std::vector<long long> chain(static_cast<std::size_t>(m) + 1, 0);
  bool cyclic = false;

  auto visit = [&](auto&& self, int x) -> void {
    mark[x] = kOpen;
    long long longest_pred = 0;
    for (int y = 1; y <= m; ++y) {
      if (!instance.front.at(x, y)) continue;
      if (mark[y] == kOpen) {
        cyclic = true;
        continue;
      }
      if (mark[y] == kNew) self(self, y);
      longest_pred = std::max(longest_pred, chain[y]);
    }
    chain[x] = longest_pred + instance.job(x).duration;
    mark[x] = kDone;
  };
  for (int x = 1; x <= m; ++x) {
    if (mark[x] == kNew) visit(visit, x);
  }

  if (cyclic) {
    out.push_back({Severity::kWarning, "precedence cycle"});
  } else {
    const long long longest = *std::max_element(chain.begin(), chain.end());
    if (longest > n) {
      out.push_back({Severity::kWarning,
                     "strict precedence may be unsatisfiable: longest chain "
                     "needs " +
                         std::to_string(longest) + " days, horizon is " +
                         std::to_string(n)});
    }
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

void check_dimensions(const ScheduleMatrix& schedule,
                      const ProjectInstance& instance) {
  if (schedule.rows() != instance.job_count() ||
      schedule.cols() != instance.horizon) {
    throw LevelingError(
        "schedule is " + std::to_string(schedule.rows()) + "x" +
        std::to_string(schedule.cols()) + " but instance is " +
        std::to_string(instance.job_count()) + "x" +
        std::to_string(instance.horizon));
  }
}

ResourceProfile profile(const ScheduleMatrix& schedule,
                        const ProjectInstance& instance) {
  check_dimensions(schedule, instance);
  ResourceProfile out;
  out.daily.assign(static_cast<std::size_t>(schedule.cols()), 0);
  for (int x = 1; x <= schedule.rows(); ++x) {
    const long long demand = instance.job(x).demand;
    for (int i = 1; i <= schedule.cols(); ++i) {
      out.daily[static_cast<std::size_t>(i - 1)] += demand * schedule.at(x, i);
    }
  }
  return out;
}

double variance(const ResourceProfile& profile) {
  if (profile.daily.empty()) throw LevelingError("variance of empty profile");
  const double n = static_cast<double>(profile.daily.size());
  const double mean = static_cast<double>(profile.total()) / n;
  double sum = 0.0;
  for (long long load : profile.daily) {
    const double d = static_cast<double>(load) - mean;
    sum += d * d;
  }
  return sum / n;
}

int first_active_day(const ScheduleMatrix& schedule, int row) {
  schedule.check_row(row);
  for (int i = 1; i <= schedule.cols(); ++i) {
    if (schedule.at(row, i) == 1) return i;
  }
  return schedule.cols() + 1;
}

DecodedSchedule decode(const ScheduleMatrix& schedule,
                       const ProjectInstance& instance) {
  check_dimensions(schedule, instance);
  const int m = schedule.rows();
  const int n = schedule.cols();
  DecodedSchedule out;
  out.timing.resize(static_cast<std::size_t>(m));
  out.rows_contiguous_linear = true;
  out.durations_match = true;

  for (int x = 1; x <= m; ++x) {
    JobTiming& t = out.timing[static_cast<std::size_t>(x - 1)];
    t.start = first_active_day(schedule, x);
    for (int i = n; i >= 1; --i) {
      if (schedule.at(x, i) == 1) {
        t.finish = i;
        break;
      }
    }
    const int ones = schedule.row_sum(x);
    if (ones != instance.job(x).duration) out.durations_match = false;
    // One unbroken run means every cell between first and last 1 is set.
    if (ones == 0 || t.finish - t.start + 1 != ones) {
      out.rows_contiguous_linear = false;
    }
  }

  out.precedence_paper_mode = true;
  out.precedence_strict = true;
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (!instance.front.at(x, y)) continue;
      const int pos_x = out.timing[static_cast<std::size_t>(x - 1)].start;
      const int pos_y = out.timing[static_cast<std::size_t>(y - 1)].start;
      if (pos_y > pos_x) out.precedence_paper_mode = false;
      if (pos_y + instance.job(y).duration > pos_x) {
        out.precedence_strict = false;
      }
    }
  }
  return out;
}

double average_demand(const ProjectInstance& instance) {
  long long resource_days = 0;
  for (const Job& job : instance.jobs) {
    resource_days += static_cast<long long>(job.demand) * job.duration;
  }
  return static_cast<double>(resource_days) / instance.horizon;
}

}  // namespace leveling
