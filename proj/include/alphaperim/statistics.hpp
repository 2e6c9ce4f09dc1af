// Ordinary least squares on log-log data with Student confidence intervals,
// moment-based normality diagnostics, and the special functions they need.
#ifndef ALPHAPERIM_STATISTICS_HPP
#define ALPHAPERIM_STATISTICS_HPP

#include <span>

namespace alphaperim {

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double ci_low = 0.0;   // Student 95% interval for the slope
  double ci_high = 0.0;
  double r_squared = 0.0;
};

/// OLS of log(y) on log(x). Requires >= 3 points and y > 0 everywhere;
/// throws std::invalid_argument otherwise.
SlopeFit ols_loglog(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> values);
/// Sample standard deviation with denominator n - 1.
double sample_std(std::span<const double> values);

struct NormalityReport {
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double jarque_bera_stat = 0.0;
  double p_value = 0.0;  // chi-square(2) approximation
  bool zero_variance = false;
};

/// Moment-based (Jarque-Bera) normality diagnostic. Requires >= 20 values.
NormalityReport normality_diagnostic(std::span<const double> values);

// Special functions (double precision, deterministic).
double regularized_incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double dof);
/// Inverse CDF; p in (0, 1), dof > 0.
double student_t_quantile(double p, double dof);
/// P(X > x) for X ~ chi-square(dof).
double chi_square_survival(double x, double dof);

}  // namespace alphaperim

#endif  // ALPHAPERIM_STATISTICS_HPP
