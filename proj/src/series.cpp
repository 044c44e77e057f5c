#include "lamcount/series.hpp"

#include <stdexcept>

#include "lamcount/error.hpp"

namespace lamcount {

namespace {

// Coefficient k of a*b, where both tables hold at least k+1 entries.
BigInt convolution_at(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                      std::size_t k) {
  BigInt sum = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (a[i] == 0 || b[k - i] == 0) continue;
    sum += a[i] * b[k - i];
  }
  return sum;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

SeriesTable make_table(std::string family, std::size_t order) {
  return SeriesTable{std::move(family), std::vector<BigInt>(order + 1, BigInt(0))};
}

}  // namespace

SeriesTable linf_coeffs_holonomic(std::size_t order) {
  SeriesTable t = make_table("linf", order);
  auto& c = t.coeffs;
  static const int seed[] = {0, 1, 2, 4};
  for (std::size_t n = 0; n <= order && n < 4; ++n) c[n] = seed[n];
  for (std::size_t n = 4; n <= order; ++n) {
    const BigInt num = BigInt(4 * n - 1) * c[n - 1] - BigInt(2 * n - 1) * c[n - 2] - c[n - 3] -
                       BigInt(n - 4) * c[n - 4];
    BigInt q, r;
    divide_qr(num, BigInt(n + 1), q, r);
    if (r != 0)
      throw DivisibilityViolation("holonomic recurrence: " + std::to_string(n + 1) +
                                  " does not divide the numerator at n = " + std::to_string(n));
    c[n] = std::move(q);
  }
  return t;
}

SeriesTable linf_coeffs_functional(std::size_t order) {
  SeriesTable t = make_table("linf", order);
  auto& c = t.coeffs;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] + convolution_at(c, c, n - 1) + 1;
  return t;
}

BigInt linf_closed_form(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("linf_closed_form requires n >= 1");
  BigRational sum = 0;
  for (std::uint64_t k = 0; k <= (n - 1) / 2; ++k) {
    BigRational term(binomial(n - k, k) * binomial(2 * n - 3 * k, n - 2 * k - 1),
                     BigInt(n - k));
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (denominator(sum) != 1)
    throw NonIntegerResult("closed-form sum is not an integer at n = " + std::to_string(n));
  return numerator(sum);
}

SeriesTable lm_coeffs(std::uint64_t m, std::size_t order) {
  const SeriesTable linf = linf_coeffs_functional(order);
  // rows[k] holds L_{m+k} up to z^(order-k); L_{m+k+1} feeds L_{m+k} one size lower.
  std::vector<std::vector<BigInt>> rows(order + 1);
  for (std::size_t k = order + 1; k-- > 0;) {
    const std::uint64_t bound = m + k;
    auto& row = rows[k];
    row.assign(order - k + 1, BigInt(0));
    for (std::size_t n = 1; n < row.size(); ++n) {
      if (bound >= n) {
        row[n] = linf.coeffs[n];
        continue;
      }
      row[n] = convolution_at(row, row, n - 1) + rows[k + 1][n - 1];
      if (n <= bound) row[n] += 1;
    }
  }
  return SeriesTable{"l" + std::to_string(m), std::move(rows[0])};
}

SeriesTable a1_coeffs(std::size_t order) {
  const SeriesTable linf = linf_coeffs_functional(order + 1);
  SeriesTable t = make_table("a1", order);
  for (std::size_t n = 0; n <= order; ++n) t.coeffs[n] = linf.coeffs[n + 1];
  return t;
}

NormalFormSeries nf_coeffs(std::size_t order) {
  NormalFormSeries s{make_table("D", order), make_table("M", order), make_table("N", order)};
  auto& d = s.indices.coeffs;
  auto& m = s.neutral.coeffs;
  auto& nf = s.normal.coeffs;
  for (std::size_t n = 1; n <= order; ++n) {
    d[n] = 1;
    m[n] = convolution_at(m, nf, n - 1) + d[n];
    nf[n] = m[n] + nf[n - 1];
  }
  return s;
}

HeadNormalFormSeries hnf_coeffs(std::size_t order) {
  const SeriesTable linf = linf_coeffs_functional(order);
  HeadNormalFormSeries s{make_table("K", order), make_table("H", order)};
  auto& k = s.neutral_hnf.coeffs;
  auto& h = s.hnf.coeffs;
  for (std::size_t n = 1; n <= order; ++n) {
    k[n] = convolution_at(k, linf.coeffs, n - 1) + 1;
    h[n] = k[n] + h[n - 1];
  }
  return s;
}

SubtermSeries subterm_series(std::uint64_t pattern_size, std::size_t order) {
  if (pattern_size < 2)
    throw std::invalid_argument("subterm_series requires a pattern of size >= 2");
  const SeriesTable linf = linf_coeffs_functional(order);
  SubtermSeries s{make_table("T" + std::to_string(pattern_size), order),
                  make_table("avoid" + std::to_string(pattern_size), order)};
  auto& t = s.containing.coeffs;
  for (std::size_t n = 1; n <= order; ++n) {
    t[n] = t[n - 1] + 2 * convolution_at(t, linf.coeffs, n - 1) - convolution_at(t, t, n - 1);
    if (n == pattern_size) t[n] += 1;
  }
  for (std::size_t n = 0; n <= order; ++n) {
    s.avoiding.coeffs[n] = linf.coeffs[n] - t[n];
    if (s.avoiding.coeffs[n] < 0)
      throw Error("negative avoidance count at n = " + std::to_string(n));
  }
  return s;
}

SubtermSeries subterm_series(const Term& pattern, std::size_t order) {
  if (pattern.is_index())
    throw IndexPatternUnsupported("pattern " + render_term(pattern) +
                                  " is a de Bruijn index; containment in longer indices "
                                  "is not captured by the subterm equation");
  return subterm_series(pattern.natural_size(), order);
}

SeriesTable minf_coeffs(std::size_t order) {
  SeriesTable t = make_table("minf", order);
  auto& c = t.coeffs;
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] + convolution_at(c, c, n - 1) + 1;
  return t;
}

}  // namespace lamcount
