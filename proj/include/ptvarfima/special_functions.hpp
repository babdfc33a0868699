// Gamma-ratio kernels, fractional-differencing coefficient generators and the
// Gauss hypergeometric evaluator at unit argument. Every closed form in the
// library is assembled from these primitives; all Gamma arithmetic runs in
// log space so that lags up to 1e6 stay in range.
#pragma once

#include <stdexcept>
#include <vector>

namespace ptvarfima {

// Gamma evaluation at a pole (x = 0, -1, -2, ...).
class GammaPoleError : public std::domain_error {
  using std::domain_error::domain_error;
};

// Hypergeometric series divergent at z = 1 (c - a - b <= 0).
class DivergenceError : public std::domain_error {
  using std::domain_error::domain_error;
};

// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs = 0.0;
  int sign = 1;

  // exp(log_abs) * sign; overflows to +-inf for log_abs beyond double range.
  double value() const;
};

// Valid for every non-pole real x; negative x goes through the reflection
// formula. Throws GammaPoleError at x = 0, -1, -2, ...
SignedLogGamma signed_log_gamma(double x);

// Gamma(a) / Gamma(b) via a single exponentiation of the log difference.
double gamma_ratio(double a, double b);

// 1 / Gamma(x); returns 0 at the poles of Gamma (x = 0, -1, -2, ...).
double reciprocal_gamma(double x);

// Rising factorial (x)_n = Gamma(x + n) / Gamma(x) for integer n >= 0.
// Defined by the limit at x = 0: (0)_0 = 1, (0)_n = 0 for n >= 1, which is
// what makes the degenerate white-noise season (d = 0) work everywhere.
double rising_factorial(double x, long long n);

enum class CoeffKind { psi, pi };

// Truncated causal (psi) or inverse (pi) fractional-differencing weights for
// one season: values[j] holds the coefficient of lag j, j = 0..max_index().
struct CoeffVector {
  int season = 1;  // 1-based owning season
  CoeffKind kind = CoeffKind::psi;
  double d = 0.0;
  std::vector<double> values;

  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

// Causal weights of (1-B)^{-d}: psi_0 = 1, psi_j = psi_{j-1} * (j-1+d) / j.
// One multiply per term; the Gamma-ratio route below is the cross-check.
CoeffVector psi_coeffs(double d, int max_index, int season = 1);

// Inverse weights of (1-B)^{d}: pi_0 = 1, pi_j = pi_{j-1} * (j-1-d) / j.
CoeffVector pi_coeffs(double d, int max_index, int season = 1);

// Gamma-ratio evaluation of a single coefficient, psi_j = (d)_j / j!.
// Independent of the recursion path above.
double psi_coeff_direct(double d, long long j);

// pi_j = Gamma(j-d) / (Gamma(j+1) Gamma(-d)); negative for j >= 1, d > 0.
double pi_coeff_direct(double d, long long j);

// 2F1(a, b; c; 1) by the Gauss summation theorem,
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
// Requires c - a - b > 0 and none of c, c-a, c-b a non-positive integer.
double gauss_2f1_at_one(double a, double b, double c);

// Test hook: skews every signed_log_gamma result by slope * |x|. Used by the
// verification pipeline's negative control; never set in normal operation.
void set_gamma_corruption(double log_slope);
double gamma_corruption();

}  // namespace ptvarfima
