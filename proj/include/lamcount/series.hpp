#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamcount/bigint.hpp"
#include "lamcount/term.hpp"

namespace lamcount {

/// Exact coefficients c[0..truncation_order] of a counting series.
struct SeriesTable {
  std::string family;
  std::vector<BigInt> coeffs;

  std::size_t truncation_order() const noexcept {
    return coeffs.empty() ? 0 : coeffs.size() - 1;
  }
  const BigInt& operator[](std::size_t n) const { return coeffs.at(n); }
};

/// L∞ from the P-recurrence
///   (n+1) c[n] = (4n-1) c[n-1] - (2n-1) c[n-2] - c[n-3] - (n-4) c[n-4],
/// seeded with 0, 1, 2, 4. Throws DivisibilityViolation if a division is inexact.
SeriesTable linf_coeffs_holonomic(std::size_t order);

/// L∞ from z L² - (1-z) L + z/(1-z) = 0, i.e. c[n] = c[n-1] + Σ c[i]c[n-1-i] + 1.
SeriesTable linf_coeffs_functional(std::size_t order);

/// Alternating binomial sum for [z^n]L∞ (n >= 1), evaluated in exact rationals.
/// Throws NonIntegerResult if the sum is not an integer.
BigInt linf_closed_form(std::uint64_t n);

/// [z^n]L_m for n <= order: terms whose free indices are all below m.
SeriesTable lm_coeffs(std::uint64_t m, std::size_t order);

/// Size model with |0| = 0 and applications of weight 2: [z^n]A1 = [z^(n+1)]L∞.
SeriesTable a1_coeffs(std::size_t order);

struct NormalFormSeries {
  SeriesTable indices;  // D
  SeriesTable neutral;  // M (Motzkin numbers)
  SeriesTable normal;   // N
};

/// N = M + zN, M = zMN + D, D = zD + z.
NormalFormSeries nf_coeffs(std::size_t order);

struct HeadNormalFormSeries {
  SeriesTable neutral_hnf;  // K
  SeriesTable hnf;          // H
};

/// K = zK L∞ + D and H = K + zH.
HeadNormalFormSeries hnf_coeffs(std::size_t order);

struct SubtermSeries {
  SeriesTable containing;  // T
  SeriesTable avoiding;    // L∞ - T
};

/// Terms containing a fixed non-index pattern of size p:
///   z T² + (1 - 2z L∞ - z) T - z^p = 0.
/// Requires p >= 2 (a size-1 pattern is the index 0).
SubtermSeries subterm_series(std::uint64_t pattern_size, std::size_t order);

/// Same, taking the pattern itself. Throws IndexPatternUnsupported for an index
/// pattern, whose containers also include every longer index.
SubtermSeries subterm_series(const Term& pattern, std::size_t order);

/// Size model with |0| = 0, every other node 1: z M² - (1-z) M + 1/(1-z) = 0.
SeriesTable minf_coeffs(std::size_t order);

}  // namespace lamcount
