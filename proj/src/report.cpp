#include "flowlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace flowlab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

ReportRow z_row(std::string experiment, std::string statistic, double estimate,
                double stderr_, double oracle, double z_threshold) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.statistic = std::move(statistic);
  row.estimate = estimate;
  row.stderr_ = stderr_;
  row.oracle = oracle;
  if (stderr_ == 0.0) {
    row.z_score = (estimate == oracle) ? 0.0
                  : std::numeric_limits<double>::infinity();
  } else {
    row.z_score = (estimate - oracle) / stderr_;
  }
  row.verdict =
      std::abs(row.z_score) <= z_threshold ? Verdict::pass : Verdict::fail;
  return row;
}

ReportRow p_row(std::string experiment, std::string statistic, double p_value,
                double level) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.statistic = std::move(statistic);
  row.estimate = p_value;
  row.stderr_ = 0.0;
  row.oracle = level;
  row.z_score = std::numeric_limits<double>::quiet_NaN();
  row.verdict = p_value >= level ? Verdict::pass : Verdict::fail;
  return row;
}

ReportRow bound_row(std::string experiment, std::string statistic,
                    double estimate, double bound, bool below) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.statistic = std::move(statistic);
  row.estimate = estimate;
  row.stderr_ = 0.0;
  row.oracle = bound;
  row.z_score = std::numeric_limits<double>::quiet_NaN();
  row.verdict = (below ? estimate < bound : estimate > bound) ? Verdict::pass
                                                              : Verdict::fail;
  return row;
}

ReportRow info_row(std::string experiment, std::string statistic,
                   double estimate, Verdict v) {
  ReportRow row;
  row.experiment = std::move(experiment);
  row.statistic = std::move(statistic);
  row.estimate = estimate;
  row.stderr_ = 0.0;
  row.oracle = std::numeric_limits<double>::quiet_NaN();
  row.z_score = std::numeric_limits<double>::quiet_NaN();
  row.verdict = v;
  return row;
}

void ExperimentReport::append(const ExperimentReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool ExperimentReport::all_pass() const {
  for (const auto& r : rows_)
    if (r.verdict != Verdict::pass) return false;
  return true;
}

std::size_t ExperimentReport::fail_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_)
    if (r.verdict != Verdict::pass) ++n;
  return n;
}

void ExperimentReport::write_csv(
    std::ostream& out, const std::vector<std::string>& config_echo) const {
  for (const auto& line : config_echo) out << "# " << line << "\n";
  out << "experiment,statistic,estimate,stderr,oracle,z_score,verdict\n";
  for (const auto& r : rows_) {
    out << r.experiment << ',' << r.statistic << ',' << format_double(r.estimate)
        << ',' << format_double(r.stderr_) << ',' << format_double(r.oracle)
        << ',' << format_double(r.z_score) << ',' << verdict_name(r.verdict)
        << "\n";
  }
}

void ExperimentReport::write_json(
    std::ostream& out,
    const std::vector<std::pair<std::string, std::string>>& config) const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  doc["config"] = cfg;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json row;
    row["experiment"] = r.experiment;
    row["statistic"] = r.statistic;
    row["estimate"] = r.estimate;
    row["stderr"] = r.stderr_;
    row["oracle"] = std::isnan(r.oracle) ? nlohmann::ordered_json()
                                         : nlohmann::ordered_json(r.oracle);
    row["z_score"] = std::isnan(r.z_score) ? nlohmann::ordered_json()
                                           : nlohmann::ordered_json(r.z_score);
    row["verdict"] = verdict_name(r.verdict);
    rows.push_back(row);
  }
  doc["rows"] = rows;
  out << doc.dump(2) << "\n";
}

}  // namespace flowlab
