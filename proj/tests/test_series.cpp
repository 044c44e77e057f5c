#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lamcount/enumeration.hpp"
#include "lamcount/error.hpp"
#include "lamcount/series.hpp"

using namespace lamcount;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

BigInt at(const SeriesTable& s, long long n) { return n < 0 ? BigInt(0) : s[static_cast<std::size_t>(n)]; }

}  // namespace

TEST_CASE("holonomic table") {
  CHECK(linf_coeffs_holonomic(16).coeffs ==
        ints({0, 1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455, 31160, 93802, 284789, 871008,
              2681019}));
  CHECK(linf_coeffs_holonomic(0).coeffs == ints({0}));
  CHECK(linf_coeffs_holonomic(2).coeffs == ints({0, 1, 2}));
  CHECK(linf_coeffs_holonomic(16).truncation_order() == 16);
}

TEST_CASE("holonomic table satisfies the differential equation") {
  // (z^3+z^2-2z) + (z^3+3z^2-3z+1) L + (z^5+2z^3-4z^2+z) L' = 0, read at z^n.
  const auto c = linf_coeffs_holonomic(300);
  for (long long n = 1; n <= 300; ++n) {
    BigInt lhs = n == 1 ? -2 : (n == 2 || n == 3) ? 1 : 0;
    lhs += at(c, n) - 3 * at(c, n - 1) + 3 * at(c, n - 2) + at(c, n - 3);
    lhs += n * at(c, n) - 4 * (n - 1) * at(c, n - 1) + 2 * (n - 2) * at(c, n - 2) +
           (n - 4) * at(c, n - 4);
    CAPTURE(n);
    CHECK(lhs == 0);
  }
}

TEST_CASE("three extractions agree") {
  const auto h = linf_coeffs_holonomic(500);
  const auto f = linf_coeffs_functional(500);
  CHECK(h.coeffs == f.coeffs);
  CHECK(f[1] == 1);
  CHECK(f[3] == 4);
  CHECK(linf_closed_form(1) == 1);
  CHECK(linf_closed_form(5) == 22);
  CHECK(linf_closed_form(30) == h[30]);
  for (std::uint64_t n = 1; n <= 120; ++n) CHECK(linf_closed_form(n) == h[n]);
  CHECK_THROWS_AS(linf_closed_form(0), std::invalid_argument);
}

TEST_CASE("L_m") {
  const auto l0 = lm_coeffs(0, 12);
  CHECK(std::vector<BigInt>(l0.coeffs.begin() + 2, l0.coeffs.end()) ==
        ints({1, 1, 3, 6, 17, 41, 116, 313, 895, 2550, 7450}));
  CHECK(lm_coeffs(1, 3)[3] == 3);  // frozen from the brute-force oracle
  const auto linf = linf_coeffs_holonomic(12);
  for (std::uint64_t n = 0; n <= 12; ++n)
    for (std::uint64_t m = n; m <= 13; ++m) CHECK(lm_coeffs(m, 12)[n] == linf[n]);
  for (std::uint64_t m = 0; m < 12; ++m) {
    const auto a = lm_coeffs(m, 12);
    const auto b = lm_coeffs(m + 1, 12);
    for (std::uint64_t n = 0; n <= 12; ++n) {
      CHECK(a[n] <= b[n]);
      CHECK(b[n] <= linf[n]);
    }
  }
  CHECK(l0.truncation_order() == 12);
}

TEST_CASE("A1 shift") {
  const auto a1 = a1_coeffs(100);
  const auto linf = linf_coeffs_holonomic(101);
  CHECK(a1[0] == 1);
  CHECK(a1[2] == 4);
  for (std::size_t n = 0; n <= 100; ++n) CHECK(a1[n] == linf[n + 1]);
  for (std::uint64_t n = 0; n <= 9; ++n) CHECK(a1[n] == count_terms_sized(n, SizeModel::A1));
  CHECK(a1[8] == 1223);  // oracle count under the A1 size
}

TEST_CASE("normal forms") {
  const auto s = nf_coeffs(12);
  CHECK(s.neutral.coeffs == ints({0, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798}));
  for (std::size_t n = 1; n <= 12; ++n) CHECK(s.indices[n] == 1);
  CHECK(s.indices[0] == 0);
  CHECK(s.normal[1] == 1);
  CHECK(s.normal[6] == 38);  // oracle
}

TEST_CASE("head normal forms") {
  const auto s = hnf_coeffs(101);
  const auto linf = linf_coeffs_holonomic(101);
  CHECK(s.neutral_hnf[1] == 1);
  CHECK(s.neutral_hnf[4] == 4);
  CHECK(s.neutral_hnf[5] == 9);
  CHECK(s.hnf[3] == 4);
  BigInt running = 0;
  for (std::size_t n = 1; n <= 101; ++n) {
    running += s.neutral_hnf[n];
    CHECK(s.hnf[n] == running);
    if (n <= 100) CHECK(s.neutral_hnf[n + 1] == linf[n]);
  }
}

TEST_CASE("subterm series") {
  const auto s = subterm_series(9, 40);
  const auto linf = linf_coeffs_holonomic(40);
  for (std::size_t n = 0; n < 9; ++n) CHECK(s.containing[n] == 0);
  // oracle census for the fixed pattern omega
  CHECK(s.containing[9] == 1);
  CHECK(s.containing[10] == 1);
  CHECK(s.containing[11] == 3);
  CHECK(s.containing[12] == 9);
  CHECK(s.avoiding[10] == 3549);
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(s.avoiding[n] >= 0);
    CHECK(s.avoiding[n] + s.containing[n] == linf[n]);
  }
  const auto by_term = subterm_series(parse_term("(\\(0 0) \\(0 0))"), 40);
  CHECK(by_term.containing.coeffs == s.containing.coeffs);
  for (std::uint64_t p = 2; p <= 6; ++p) {
    const auto q = subterm_series(p, 20);
    for (std::size_t n = 0; n < p; ++n) CHECK(q.containing[n] == 0);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(q.avoiding[n] >= 0);
  }
  CHECK_THROWS_AS(subterm_series(parse_term("3"), 10), IndexPatternUnsupported);
  CHECK_THROWS_AS(subterm_series(1, 10), std::invalid_argument);
}

TEST_CASE("containment series counts fixed non-index patterns") {
  // Any non-index pattern of size p gives the same series; check two against brute force.
  for (const char* pattern : {"\\\\1", "(0 0)", "\\(0 \\0)"}) {
    const Term pt = parse_term(pattern);
    const auto s = subterm_series(pt, 10);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      BigInt hits = 0;
      for (const auto& x : enumerate_terms(n, FreeBound::unbounded()))
        if (contains_subterm(x, pt)) ++hits;
      CAPTURE(pattern);
      CAPTURE(n);
      CHECK(hits == s.containing[n]);
    }
  }
}

TEST_CASE("MInf") {
  const auto m = minf_coeffs(10);
  CHECK(m.coeffs == ints({1, 3, 10, 40, 181, 884, 4539, 24142, 131821, 734577, 4160626}));
  CHECK(m[5] == 884);  // oracle count under the MInf size
  for (std::uint64_t n = 0; n <= 6; ++n) CHECK(m[n] == count_terms_sized(n, SizeModel::MInf));
}
