#include "alphaperim/statistics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace alphaperim {
namespace {

using Eigen::ArrayXd;
using ConstMap = Eigen::Map<const ArrayXd>;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h;
}

// Series and continued-fraction forms of the regularized incomplete gamma.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * std::numeric_limits<double>::epsilon()) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= std::numeric_limits<double>::epsilon()) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0) || !(x <= 1.0)) {
    throw std::invalid_argument("regularized_incomplete_beta: bad arguments");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("student_t_cdf: dof must be positive");
  if (t == 0.0) return 0.5;
  const double x = dof / (dof + t * t);
  const double half_tail = 0.5 * regularized_incomplete_beta(0.5 * dof, 0.5, x);
  return t > 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_quantile(double p, double dof) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("student_t_quantile: p outside (0,1)");
  if (!(dof > 0.0)) throw std::invalid_argument("student_t_quantile: dof must be positive");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_t_quantile(1.0 - p, dof);
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, dof) < p && hi < 1e300) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, dof) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::abs(mid) * 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
  return 0.5 * (lo + hi);
}

double chi_square_survival(double x, double dof) {
  if (!(dof > 0.0) || !(x >= 0.0)) throw std::invalid_argument("chi_square_survival: bad arguments");
  const double a = 0.5 * dof;
  const double xx = 0.5 * x;
  if (xx == 0.0) return 1.0;
  if (xx < a + 1.0) return 1.0 - gamma_p_series(a, xx);
  return gamma_q_continued_fraction(a, xx);
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean: empty input");
  return ConstMap(values.data(), static_cast<Eigen::Index>(values.size())).mean();
}

double sample_std(std::span<const double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  if (n < 2) throw std::invalid_argument("sample_std: need at least 2 values");
  const ConstMap v(values.data(), n);
  const double m = v.mean();
  return std::sqrt((v - m).square().sum() / static_cast<double>(n - 1));
}

SlopeFit ols_loglog(std::span<const double> x, std::span<const double> y) {
  const auto k = static_cast<Eigen::Index>(x.size());
  if (k < 3 || y.size() != x.size()) {
    throw std::invalid_argument("ols_loglog: need >= 3 (x, y) pairs");
  }
  ArrayXd lx(k), ly(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("ols_loglog: nonpositive value at x = " +
                                  std::to_string(x[i]) + " (log undefined)");
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = lx.mean();
  const double my = ly.mean();
  const double sxx = (lx - mx).square().sum();
  if (!(sxx > 0.0)) throw std::invalid_argument("ols_loglog: x values all equal");
  const double sxy = ((lx - mx) * (ly - my)).sum();

  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const ArrayXd resid = ly - (fit.intercept + fit.slope * lx);
  const double rss = resid.square().sum();
  const double tss = (ly - my).square().sum();
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;

  const double dof = static_cast<double>(k - 2);
  const double se = std::sqrt(std::max(0.0, rss / dof / sxx));
  const double tq = student_t_quantile(0.975, dof);
  fit.ci_low = fit.slope - tq * se;
  fit.ci_high = fit.slope + tq * se;
  return fit;
}

NormalityReport normality_diagnostic(std::span<const double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  if (n < 20) throw std::invalid_argument("normality_diagnostic: need at least 20 values");
  const ConstMap v(values.data(), n);
  const double m = v.mean();
  const ArrayXd c = v - m;
  const double m2 = c.square().mean();
  NormalityReport report;
  if (!(m2 > 0.0) || m2 < 1e-30 * (m * m + 1.0)) {
    report.zero_variance = true;
    report.p_value = 0.0;
    return report;
  }
  const double m3 = c.cube().mean();
  const double m4 = c.square().square().mean();
  report.skewness = m3 / std::pow(m2, 1.5);
  report.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  report.jarque_bera_stat =
      static_cast<double>(n) *
      (report.skewness * report.skewness / 6.0 +
       report.excess_kurtosis * report.excess_kurtosis / 24.0);
  report.p_value = chi_square_survival(report.jarque_bera_stat, 2.0);
  return report;
}

}  // namespace alphaperim
