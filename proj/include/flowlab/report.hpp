#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace flowlab {

enum class Verdict { pass, fail, inconclusive };

// How a row's verdict is decided. ZScore rows pass iff |z| <= threshold;
// PValueAtLeast rows pass iff estimate >= oracle (the declared level);
// BoundBelow/BoundAbove compare estimate against oracle directly.
enum class RowKind { ZScore, PValueAtLeast, BoundBelow, BoundAbove, Info };

struct ReportRow {
  std::string experiment;
  std::string statistic;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double oracle = 0.0;
  double z_score = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

ReportRow z_row(std::string experiment, std::string statistic, double estimate,
                double stderr_, double oracle, double z_threshold = 4.0);

ReportRow p_row(std::string experiment, std::string statistic, double p_value,
                double level = 1e-3);

ReportRow bound_row(std::string experiment, std::string statistic,
                    double estimate, double bound, bool below);

ReportRow info_row(std::string experiment, std::string statistic,
                   double estimate, Verdict v = Verdict::pass);

class ExperimentReport {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  void append(const ExperimentReport& other);

  const std::vector<ReportRow>& rows() const { return rows_; }
  bool all_pass() const;
  std::size_t fail_count() const;

  // Fixed header: experiment,statistic,estimate,stderr,oracle,z_score,verdict.
  // `config_echo` lines are emitted first as '#' comments.
  void write_csv(std::ostream& out,
                 const std::vector<std::string>& config_echo = {}) const;
  void write_json(std::ostream& out,
                  const std::vector<std::pair<std::string, std::string>>&
                      config = {}) const;

 private:
  std::vector<ReportRow> rows_;
};

std::string verdict_name(Verdict v);
std::string format_double(double x);

}  // namespace flowlab
