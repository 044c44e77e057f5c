#pragma once

#include <cstdint>
#include <functional>

#include "lamcount/bigint.hpp"

namespace lamcount {

/// A floating-point estimate with an absolute error bound.
struct Estimate {
  double value = 0;
  double tolerance = 0;
};

/// Singularity, constants and densities of the plain-term series.
struct AnalyticsReport {
  Estimate rho;            // dominant singularity of L∞
  Estimate inv_rho;        // exponential growth rate 1/ρ
  Estimate c;              // [z^n]L∞ ~ C ρ^-n n^-3/2
  Estimate c_hnf;          // same constant for head normal forms
  std::uint64_t pattern_size = 9;
  Estimate rho_subterm;    // singularity of terms avoiding a size-p pattern
  Estimate rho_ratio;      // ρ / ρ_T, the per-step decay of the avoidance density
  Estimate density_neutral_hnf;
  Estimate density_hnf;
};

/// Root of f in (lo, hi) by bisection; f(lo) and f(hi) must have opposite
/// signs, otherwise NoRootBracketed is thrown. Stops once the bracket is
/// narrower than 2*tolerance.
Estimate bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance);

/// Unique root of 1 - 3z - z² - z³ in (0, 1/3).
Estimate dominant_singularity(double tolerance);

/// Smallest root in (ρ, 1/3) of (1 - 3z - z² - z³) + 4 z^(p+1) (1 - z), p >= 2.
Estimate subterm_singularity(std::uint64_t pattern_size, double tolerance);

/// Requires tolerance >= 1e-14.
AnalyticsReport analytics(double tolerance = 1e-14, std::uint64_t pattern_size = 9);

/// ln(C ρ^-n n^-3/2).
double log_asymptotic_estimate(std::uint64_t n);

/// C ρ^-n n^-3/2; overflows to +inf beyond n ≈ 580.
double asymptotic_estimate(std::uint64_t n);

/// exact / (C ρ^-n n^-3/2), computed in log space.
double asymptotic_ratio(const BigInt& exact, std::uint64_t n);

/// Natural logarithm of a positive big integer.
double log_bigint(const BigInt& x);

/// Ratio a/b of two positive big integers as a double.
double bigint_ratio(const BigInt& a, const BigInt& b);

}  // namespace lamcount
