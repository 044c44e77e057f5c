#include "lamcount/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lamcount/error.hpp"

namespace lamcount {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Γ(-1/2) = -2√π.
constexpr double kGammaMinusHalf = -2.0 * 1.7724538509055160273;

double discriminant_numerator(double z) { return 1.0 - 3.0 * z - z * z - z * z * z; }

double constant_c(double rho) {
  // Q(ρ) = R'(ρ) for R(z) = z³ + z² + 3z - 1.
  const double q = 3.0 * rho * rho + 2.0 * rho + 3.0;
  const double c_tilde = -std::sqrt(rho * q / (1.0 - rho)) / (2.0 * rho);
  return c_tilde / kGammaMinusHalf;
}

double constant_c_hnf(double rho) { return constant_c(rho) * rho / (1.0 - rho); }

// Propagates the bracket width of ρ through g by evaluating both ends.
Estimate propagate(double (*g)(double), const Estimate& rho) {
  const double v = g(rho.value);
  const double spread = std::max(std::abs(g(rho.value - rho.tolerance) - v),
                                 std::abs(g(rho.value + rho.tolerance) - v));
  return {v, spread + 8 * kEps * std::abs(v)};
}

double density_hnf_of(double rho) { return rho / (1.0 - rho); }
double inverse(double rho) { return 1.0 / rho; }

struct PlainConstants {
  double log_rho;
  double log_c;
};

const PlainConstants& plain_constants() {
  static const PlainConstants k = [] {
    const Estimate rho = dominant_singularity(0.0);
    return PlainConstants{std::log(rho.value), std::log(constant_c(rho.value))};
  }();
  return k;
}

}  // namespace

Estimate bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0) return {lo, 0};
  if (fhi == 0) return {hi, 0};
  if ((flo < 0) == (fhi < 0))
    throw NoRootBracketed("no sign change on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  for (int iter = 0; iter < 2000 && hi - lo > 2 * tolerance; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0) return {mid, 0};
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo + (hi - lo) / 2, (hi - lo) / 2 + kEps * hi};
}

Estimate dominant_singularity(double tolerance) {
  return bisect(discriminant_numerator, 0.0, 1.0 / 3.0, tolerance);
}

Estimate subterm_singularity(std::uint64_t pattern_size, double tolerance) {
  if (pattern_size < 2)
    throw std::invalid_argument("subterm singularity requires a pattern of size >= 2");
  const Estimate rho = dominant_singularity(tolerance);
  const double p1 = static_cast<double>(pattern_size + 1);
  // (1-z)Δ_T: the z = 1 pole of Δ_T is cleared before bracketing.
  auto f = [p1](double z) { return discriminant_numerator(z) + 4.0 * std::pow(z, p1) * (1.0 - z); };
  return bisect(f, rho.value - 2 * rho.tolerance, 1.0 / 3.0, tolerance);
}

AnalyticsReport analytics(double tolerance, std::uint64_t pattern_size) {
  if (!(tolerance >= 1e-14)) throw std::invalid_argument("tolerance must be >= 1e-14");
  AnalyticsReport r;
  r.rho = dominant_singularity(tolerance);
  r.inv_rho = propagate(inverse, r.rho);
  r.c = propagate(constant_c, r.rho);
  r.c_hnf = propagate(constant_c_hnf, r.rho);
  r.pattern_size = pattern_size;
  r.rho_subterm = subterm_singularity(pattern_size, tolerance);
  const double ratio = r.rho.value / r.rho_subterm.value;
  r.rho_ratio = {ratio, ratio * (r.rho.tolerance / r.rho.value +
                                 r.rho_subterm.tolerance / r.rho_subterm.value) +
                            4 * kEps};
  r.density_neutral_hnf = r.rho;
  r.density_hnf = propagate(density_hnf_of, r.rho);
  return r;
}

double log_asymptotic_estimate(std::uint64_t n) {
  const PlainConstants& k = plain_constants();
  const double dn = static_cast<double>(n);
  return k.log_c - dn * k.log_rho - 1.5 * std::log(dn);
}

double asymptotic_estimate(std::uint64_t n) { return std::exp(log_asymptotic_estimate(n)); }

double log_bigint(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of a non-positive integer");
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 1000) return std::log(x.convert_to<double>());
  const std::size_t shift = top - 62;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double bigint_ratio(const BigInt& a, const BigInt& b) {
  return std::exp(log_bigint(a) - log_bigint(b));
}

double asymptotic_ratio(const BigInt& exact, std::uint64_t n) {
  return std::exp(log_bigint(exact) - log_asymptotic_estimate(n));
}

}  // namespace lamcount
