#include "ptvarfima/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ptvarfima {

namespace {

double corruption_slope = 0.0;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

void set_gamma_corruption(double log_slope) { corruption_slope = log_slope; }

double gamma_corruption() { return corruption_slope; }

double SignedLogGamma::value() const { return std::exp(log_abs) * sign; }

SignedLogGamma signed_log_gamma(double x) {
  if (std::isnan(x)) throw std::domain_error("signed_log_gamma: NaN argument");
  if (is_nonpositive_integer(x))
    throw GammaPoleError("signed_log_gamma: pole at x = " + std::to_string(x));

  SignedLogGamma out;
  if (x > 0.0) {
    out.log_abs = static_cast<double>(std::lgamma(static_cast<long double>(x)));
    out.sign = 1;
  } else {
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)). With x = n + f,
    // n = floor(x), f in (0,1): |sin(pi x)| = sin(pi f), sign = (-1)^n.
    const long double xl = x;
    const long double f = xl - std::floor(xl);
    const long double pil = 3.14159265358979323846264338327950288L;
    const long double log_sin = std::log(std::sin(pil * f));
    out.log_abs = static_cast<double>(std::log(pil) - log_sin -
                                      std::lgamma(1.0L - xl));
    const long long n = static_cast<long long>(std::floor(x));
    out.sign = (n % 2 == 0) ? 1 : -1;
  }
  if (corruption_slope != 0.0) out.log_abs += corruption_slope * std::fabs(x);
  return out;
}

double gamma_ratio(double a, double b) {
  const SignedLogGamma la = signed_log_gamma(a);
  const SignedLogGamma lb = signed_log_gamma(b);
  const long double diff =
      static_cast<long double>(la.log_abs) - static_cast<long double>(lb.log_abs);
  return static_cast<double>(std::exp(diff)) * la.sign * lb.sign;
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const SignedLogGamma lg = signed_log_gamma(x);
  return std::exp(-lg.log_abs) * lg.sign;
}

double rising_factorial(double x, long long n) {
  if (n < 0) throw std::domain_error("rising_factorial: n must be >= 0");
  if (n == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (x < 0.0 && is_nonpositive_integer(x)) {
    // (x)_n for x a negative integer terminates; not needed by the model
    // formulas but kept total over the reachable domain.
    if (x + static_cast<double>(n) > 0.0) return 0.0;
  }
  const SignedLogGamma num = signed_log_gamma(x + static_cast<double>(n));
  const SignedLogGamma den = signed_log_gamma(x);
  const long double diff = static_cast<long double>(num.log_abs) -
                           static_cast<long double>(den.log_abs);
  return static_cast<double>(std::exp(diff)) * num.sign * den.sign;
}

namespace {

void check_memory_parameter(double d) {
  if (!(d >= 0.0 && d < 0.5))
    throw std::domain_error("memory parameter d must lie in [0, 1/2), got " +
                            std::to_string(d));
}

}  // namespace

CoeffVector psi_coeffs(double d, int max_index, int season) {
  check_memory_parameter(d);
  if (max_index < 1) throw std::invalid_argument("psi_coeffs: max_index >= 1");
  CoeffVector out;
  out.season = season;
  out.kind = CoeffKind::psi;
  out.d = d;
  out.values.resize(static_cast<std::size_t>(max_index) + 1);
  out.values[0] = 1.0;
  for (int j = 1; j <= max_index; ++j)
    out.values[j] = out.values[j - 1] * (j - 1 + d) / j;
  return out;
}

CoeffVector pi_coeffs(double d, int max_index, int season) {
  check_memory_parameter(d);
  if (max_index < 1) throw std::invalid_argument("pi_coeffs: max_index >= 1");
  CoeffVector out;
  out.season = season;
  out.kind = CoeffKind::pi;
  out.d = d;
  out.values.resize(static_cast<std::size_t>(max_index) + 1);
  out.values[0] = 1.0;
  for (int j = 1; j <= max_index; ++j)
    out.values[j] = out.values[j - 1] * (j - 1 - d) / j;
  return out;
}

double psi_coeff_direct(double d, long long j) {
  check_memory_parameter(d);
  if (j < 0) throw std::invalid_argument("psi_coeff_direct: j >= 0");
  if (j == 0) return 1.0;
  if (d == 0.0) return 0.0;
  // (d)_j / j!
  const SignedLogGamma num = signed_log_gamma(d + static_cast<double>(j));
  const SignedLogGamma den_d = signed_log_gamma(d);
  const SignedLogGamma den_j = signed_log_gamma(static_cast<double>(j) + 1.0);
  const long double diff = static_cast<long double>(num.log_abs) -
                           den_d.log_abs - den_j.log_abs;
  return static_cast<double>(std::exp(diff)) * num.sign * den_d.sign * den_j.sign;
}

double pi_coeff_direct(double d, long long j) {
  check_memory_parameter(d);
  if (j < 0) throw std::invalid_argument("pi_coeff_direct: j >= 0");
  if (j == 0) return 1.0;
  if (d == 0.0) return 0.0;
  const SignedLogGamma num = signed_log_gamma(static_cast<double>(j) - d);
  const SignedLogGamma den_d = signed_log_gamma(-d);  // negative argument
  const SignedLogGamma den_j = signed_log_gamma(static_cast<double>(j) + 1.0);
  const long double diff = static_cast<long double>(num.log_abs) -
                           den_d.log_abs - den_j.log_abs;
  return static_cast<double>(std::exp(diff)) * num.sign * den_d.sign * den_j.sign;
}

double gauss_2f1_at_one(double a, double b, double c) {
  const double s = c - a - b;
  if (!(s > 0.0))
    throw DivergenceError(
        "gauss_2f1_at_one: series diverges at z = 1 unless c - a - b > 0 "
        "(got c - a - b = " + std::to_string(s) + ")");
  if (is_nonpositive_integer(c) || is_nonpositive_integer(c - a) ||
      is_nonpositive_integer(c - b))
    throw GammaPoleError("gauss_2f1_at_one: Gamma pole in summation formula");

  const SignedLogGamma lc = signed_log_gamma(c);
  const SignedLogGamma ls = signed_log_gamma(s);
  const SignedLogGamma lca = signed_log_gamma(c - a);
  const SignedLogGamma lcb = signed_log_gamma(c - b);
  const long double lg = static_cast<long double>(lc.log_abs) + ls.log_abs -
                         lca.log_abs - lcb.log_abs;
  return static_cast<double>(std::exp(lg)) * lc.sign * ls.sign * lca.sign *
         lcb.sign;
}

}  // namespace ptvarfima
