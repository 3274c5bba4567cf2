#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace flowlab {

// Streaming moment accumulator with compensated (Kahan) summation, so that
// merge order changes results by no more than ~1e-12 over 1e6-sample runs.
// Merging is associative and commutative; merged moments equal the pooled
// computation.
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    sum_.add(x);
    sumsq_.add(x * x);
  }

  void merge(const Accumulator& other) {
    count_ += other.count_;
    sum_.merge(other.sum_);
    sumsq_.merge(other.sumsq_);
  }

  std::size_t count() const { return count_; }
  double sum() const { return sum_.value(); }
  double sum_of_squares() const { return sumsq_.value(); }

  double mean() const;
  double variance() const;  // unbiased sample variance
  double stderr_of_mean() const;

 private:
  struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x) {
      const double y = x - c;
      const double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    void merge(const Kahan& o) {
      add(o.s);
      add(-o.c);
    }
    double value() const { return s - c; }
  };

  std::size_t count_ = 0;
  Kahan sum_, sumsq_;
};

struct MeanCi {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// mean and stderr = sample-std/sqrt(count); requires count >= 2
MeanCi mc_mean_ci(const Accumulator& acc);
MeanCi mc_mean_ci(std::span<const double> samples);

// sample variance with a moment-based standard error (delta method on m4)
MeanCi mc_variance_ci(std::span<const double> samples);

// covariance of paired samples with standard error
MeanCi mc_covariance_ci(std::span<const double> a, std::span<const double> b);

double normal_cdf(double z);

struct TestResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

// One-sample Kolmogorov-Smirnov against an evaluable CDF; asymptotic p-value.
// Input need not be sorted. Requires n >= 20.
TestResult ks_test(std::span<const double> samples,
                   const std::function<double(double)>& cdf);

// Two-sample KS with the effective-n asymptotic p-value.
TestResult ks_test_two_sample(std::span<const double> a,
                              std::span<const double> b);

// KS distance only (no p-value), against an evaluable CDF.
double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& cdf);

// Sup-distance between two empirical CDFs.
double ks_distance_two_sample(std::span<const double> a,
                              std::span<const double> b);

// Pearson chi-square against expected cell probabilities, df = k-1.
// Every expected count must be >= 5.
TestResult chi_square(std::span<const std::int64_t> counts,
                      std::span<const double> expected_probs);

// Anderson-Darling test of standard normality (fully specified null);
// caller standardizes the sample first.
TestResult anderson_darling_normal(std::span<const double> standardized);

// Upper tail of the chi-square distribution with k degrees of freedom.
double chi_square_upper_tail(double statistic, int df);

// Kolmogorov limit law Q(lambda) = P(sup > lambda), the asymptotic KS p-value.
double kolmogorov_q(double lambda);

}  // namespace flowlab
