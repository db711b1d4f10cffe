#include "pmpmh/math.hpp"

#include <boost/math/distributions/normal.hpp>

namespace pmpmh {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  static const boost::math::normal_distribution<double> unit{};
  return boost::math::quantile(unit, p);
}

double log_poisson_pmf(double k, double mean) {
  if (k < 0.0) return kNegInf;
  if (mean <= 0.0) return k == 0.0 ? 0.0 : kNegInf;
  return k * std::log(mean) - mean - std::lgamma(k + 1.0);
}

double log_binomial_pmf(double k, double n, double p) {
  if (k < 0.0 || k > n || n < 0.0) return kNegInf;
  if (p <= 0.0) return k == 0.0 ? 0.0 : kNegInf;
  if (p >= 1.0) return k == n ? 0.0 : kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
         k * std::log(p) + (n - k) * std::log1p(-p);
}

double log_gamma_pdf(double x, double shape, double rate) {
  if (x <= 0.0) return kNegInf;
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

double log_inv_gamma_pdf(double x, double shape, double scale) {
  if (x <= 0.0) return kNegInf;
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) - scale / x;
}

}  // namespace pmpmh
