#include "flowlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowlab {

double Accumulator::mean() const {
  if (count_ == 0) throw std::invalid_argument("Accumulator: empty");
  return sum() / static_cast<double>(count_);
}

double Accumulator::variance() const {
  if (count_ < 2) throw std::invalid_argument("Accumulator: count < 2");
  const double n = static_cast<double>(count_);
  const double m = mean();
  const double v = (sum_of_squares() - n * m * m) / (n - 1.0);
  return v > 0.0 ? v : 0.0;
}

double Accumulator::stderr_of_mean() const {
  return std::sqrt(variance() / static_cast<double>(count_));
}

MeanCi mc_mean_ci(const Accumulator& acc) {
  if (acc.count() < 2) throw std::invalid_argument("mc_mean_ci: count < 2");
  return {acc.mean(), acc.stderr_of_mean()};
}

MeanCi mc_mean_ci(std::span<const double> samples) {
  Accumulator acc;
  for (double x : samples) acc.add(x);
  return mc_mean_ci(acc);
}

MeanCi mc_variance_ci(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 4) throw std::invalid_argument("mc_variance_ci: count < 4");
  Accumulator acc;
  for (double x : samples) acc.add(x);
  const double m = acc.mean();
  double m2 = 0.0, m4 = 0.0;
  for (double x : samples) {
    const double d = x - m;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  const double var = m2 * static_cast<double>(n) / (static_cast<double>(n) - 1.0);
  // Var(sample variance) ~ (m4 - m2^2)/n
  const double se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / static_cast<double>(n));
  return {var, se};
}

MeanCi mc_covariance_ci(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 4)
    throw std::invalid_argument("mc_covariance_ci: bad sizes");
  const double n = static_cast<double>(a.size());
  Accumulator sa, sb;
  for (double x : a) sa.add(x);
  for (double x : b) sb.add(x);
  const double ma = sa.mean(), mb = sb.mean();
  double cov = 0.0, var_prod = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    cov += (a[i] - ma) * (b[i] - mb);
  cov /= n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = (a[i] - ma) * (b[i] - mb) - cov;
    var_prod += d * d;
  }
  var_prod /= n;
  return {cov * n / (n - 1.0), std::sqrt(var_prod / n)};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double ks_statistic_sorted(std::span<const double> sorted,
                           const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

}  // namespace

double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return ks_statistic_sorted(sorted, cdf);
}

TestResult ks_test(std::span<const double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.size() < 20) throw std::invalid_argument("ks_test: n < 20");
  const double d = ks_distance(samples, cdf);
  const double sn = std::sqrt(static_cast<double>(samples.size()));
  const double p = kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
  return {d, p};
}

double ks_distance_two_sample(std::span<const double> a,
                              std::span<const double> b) {
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

TestResult ks_test_two_sample(std::span<const double> a,
                              std::span<const double> b) {
  if (a.size() < 20 || b.size() < 20)
    throw std::invalid_argument("ks_test_two_sample: n < 20");
  const double d = ks_distance_two_sample(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ne = std::sqrt(na * nb / (na + nb));
  const double p = kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
  return {d, p};
}

namespace {

// regularized incomplete gamma functions, series + continued fraction
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a, term = sum;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad args");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

// P(A^2 < z) for the Anderson-Darling limit law (Marsaglia & Marsaglia)
double ad_inf(double z) {
  if (z <= 0.0) return 0.0;
  if (z < 2.0) {
    return std::exp(-1.2337141 / z) / std::sqrt(z) *
           (2.00012 +
            (0.247105 -
             (0.0649821 - (0.0347962 - (0.011672 - 0.00168691 * z) * z) * z) *
                 z) *
                z);
  }
  return std::exp(
      -std::exp(1.0776 - (2.30695 -
                          (0.43424 - (0.082433 - (0.008056 - 0.0003146 * z) * z) * z) *
                              z) *
                             z));
}

}  // namespace

double chi_square_upper_tail(double statistic, int df) {
  return gamma_q(0.5 * df, 0.5 * statistic);
}

TestResult chi_square(std::span<const std::int64_t> counts,
                      std::span<const double> expected_probs) {
  if (counts.size() != expected_probs.size() || counts.size() < 2)
    throw std::invalid_argument("chi_square: bad sizes");
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = expected_probs[i] * static_cast<double>(total);
    if (expected < 5.0)
      throw std::invalid_argument("chi_square: expected count < 5");
    const double d = static_cast<double>(counts[i]) - expected;
    stat += d * d / expected;
  }
  const int df = static_cast<int>(counts.size()) - 1;
  return {stat, chi_square_upper_tail(stat, df)};
}

TestResult anderson_darling_normal(std::span<const double> standardized) {
  const std::size_t n = standardized.size();
  if (n < 20) throw std::invalid_argument("anderson_darling: n < 20");
  std::vector<double> sorted(standardized.begin(), standardized.end());
  std::sort(sorted.begin(), sorted.end());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = std::clamp(normal_cdf(sorted[i]), 1e-300, 1.0 - 1e-16);
    const double fj =
        std::clamp(normal_cdf(sorted[n - 1 - i]), 1e-300, 1.0 - 1e-16);
    s += (2.0 * static_cast<double>(i) + 1.0) *
         (std::log(fi) + std::log1p(-fj));
  }
  const double a2 = -static_cast<double>(n) - s / static_cast<double>(n);
  return {a2, 1.0 - ad_inf(a2)};
}

}  // namespace flowlab
