#pragma once

#include <cmath>
#include <limits>

namespace pmpmh {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();
inline constexpr double kLog2Pi = 1.8378770664093454836;

inline double log_normal_pdf(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (d * d / var + std::log(var) + kLog2Pi);
}

inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// Standard normal cdf and quantile.
double normal_cdf(double z);
double normal_quantile(double p);

// Log pmf/pdf helpers. Count arguments are passed as doubles holding exact
// integers; out-of-support arguments yield -infinity, never NaN.
double log_poisson_pmf(double k, double mean);
double log_binomial_pmf(double k, double n, double p);
double log_gamma_pdf(double x, double shape, double rate);
double log_inv_gamma_pdf(double x, double shape, double scale);

}  // namespace pmpmh
