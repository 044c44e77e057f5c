// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lamcount/analytics.hpp"
#include "lamcount/bijections.hpp"
#include "lamcount/certify.hpp"
#include "lamcount/cli.hpp"
#include "lamcount/enumeration.hpp"
#include "lamcount/series.hpp"
#include "lamcount/trees.hpp"

using namespace lamcount;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

Outcome sequence_reproduction() {
  Outcome o;
  const std::string expected =
      "0,1,2,4,9,22,57,154,429,1223,3550,10455,31160,93802,284789,871008,2681019\n";
  const std::string got = cli_out({"series", "linf", "-n", "16"});
  if (got != expected) o.fail("got " + got);
  return o;
}

Outcome triple_oracle() {
  Outcome o;
  const auto h = linf_coeffs_holonomic(200);
  const auto f = linf_coeffs_functional(200);
  for (std::uint64_t n = 0; n <= 200 && o.pass; ++n) {
    if (h[n] != f[n]) o.fail("holonomic/functional differ at n=" + std::to_string(n));
    if (n >= 1 && linf_closed_form(n) != h[n])
      o.fail("closed form differs at n=" + std::to_string(n));
  }
  return o;
}

Outcome enumeration_vs_series() {
  Outcome o;
  const std::size_t N = 12;
  const auto linf = linf_coeffs_holonomic(N);
  const auto nf = nf_coeffs(N);
  const auto h = hnf_coeffs(N);
  std::vector<SeriesTable> lm;
  for (std::uint64_t m = 0; m <= 3; ++m) lm.push_back(lm_coeffs(m, N));
  auto expect = [&](bool ok, const std::string& what, std::uint64_t n) {
    if (!ok) o.fail(what + " at n=" + std::to_string(n));
  };
  for (std::uint64_t n = 0; n <= N; ++n) {
    expect(count_terms(n, FreeBound::unbounded()) == linf[n], "plain", n);
    for (std::uint64_t m = 0; m <= 3; ++m)
      expect(count_terms(n, FreeBound::at_most(m)) == lm[m][n], "L_" + std::to_string(m), n);
    expect(count_family(n, Family::NormalForm) == nf.normal[n], "normal", n);
    expect(count_family(n, Family::Neutral) == nf.neutral[n], "neutral", n);
    expect(count_family(n, Family::HeadNF) == h.hnf[n], "hnf", n);
    expect(count_family(n, Family::NeutralHNF) == h.neutral_hnf[n], "neutral-hnf", n);
  }
  return o;
}

Outcome typable_table() {
  Outcome o;
  const std::vector<std::string> typable{"0",   "0",   "1",    "1",    "2",    "5",    "13",   "27",
                                         "74",  "198", "508",  "1371", "3809", "10477", "29116"};
  const std::vector<std::string> all{"0",   "0",   "1",    "1",    "3",    "6",    "17",    "41",
                                     "116", "313", "895",  "2550", "7450", "21881", "65168"};
  std::istringstream in(cli_out({"typable", "--max", "14"}));
  std::string header;
  std::getline(in, header);
  for (std::size_t n = 0; n < typable.size(); ++n) {
    std::size_t size = 0;
    std::string t, a;
    if (!(in >> size >> t >> a)) {
      o.fail("missing row " + std::to_string(n));
      break;
    }
    if (size != n || t != typable[n] || a != all[n])
      o.fail("row " + std::to_string(n) + " is " + t + " / " + a);
  }
  return o;
}

Outcome bijection_certification() {
  Outcome o;
  for (auto kind : {BijectionKind::LambdaBw, BijectionKind::BwBz, BijectionKind::LambdaBz,
                    BijectionKind::MotzkinNeutral, BijectionKind::KhnfShift}) {
    const CheckReport r = certify_bijection(kind, 10);
    if (!r.ok())
      o.fail(std::string(bijection_name(kind)) + " size " + std::to_string(r.failure->size) +
             ": " + r.failure->what + " " + r.failure->witness);
  }
  const auto linf = linf_coeffs_holonomic(10);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    std::set<std::string> grammar, predicate;
    for (const auto& z : enumerate_bz(n)) grammar.insert(to_sexpr(z));
    for (const auto& z : enumerate_binary_trees(n))
      if (is_zigzag_free(z)) predicate.insert(to_sexpr(z));
    if (grammar != predicate || grammar.size() != linf[n])
      o.fail("zigzag cardinality at n=" + std::to_string(n));
  }
  return o;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(' ');
  const auto b = s.find_last_not_of(' ');
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Outcome bijection_tables() {
  Outcome o;
  for (std::uint64_t n : {3u, 4u}) {
    std::ifstream in(std::string(LAMCOUNT_GOLDEN_DIR) + "/table_size" + std::to_string(n) +
                     ".txt");
    if (!in) {
      o.fail("golden file for size " + std::to_string(n) + " missing");
      continue;
    }
    std::set<std::string> terms, shifted;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cells;
      std::stringstream ss(line);
      for (std::string c; std::getline(ss, c, '|');) cells.push_back(trim(c));
      if (cells.size() != 4) {
        o.fail("bad golden row: " + line);
        continue;
      }
      const Term x = parse_term(cells[0]);
      if (to_sexpr(lambda_to_bw(x)) != cells[1] || to_sexpr(lambda_to_bz(x)) != cells[2] ||
          render_term(khnf_unshift(x)) != cells[3])
        o.fail("row mismatch: " + line);
      terms.insert(cells[0]);
      shifted.insert(cells[3]);
    }
    std::set<std::string> want_terms, want_k;
    for (const auto& x : enumerate_terms(n, FreeBound::unbounded())) want_terms.insert(render_term(x));
    for (const auto& x : enumerate_family(n + 1, Family::NeutralHNF)) want_k.insert(render_term(x));
    if (terms != want_terms) o.fail("size " + std::to_string(n) + " term column differs");
    if (shifted != want_k) o.fail("size " + std::to_string(n) + " hnf column differs");
  }
  if (count_family(4, Family::NeutralHNF) != 4) o.fail("K4 != 4");
  if (count_family(5, Family::NeutralHNF) != 9) o.fail("K5 != 9");
  return o;
}

Outcome constants() {
  Outcome o;
  const AnalyticsReport r = analytics();
  auto near = [&](const char* name, double got, double want, double tol) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream s;
      s << std::setprecision(17) << name << " = " << got << ", want " << want << " +- " << tol;
      o.fail(s.str());
    }
  };
  near("rho", r.rho.value, 0.29559774252208393, 1e-12);
  near("1/rho", r.inv_rho.value, 3.38297, 1e-4);
  near("C", r.c.value, 0.60676, 1e-4);
  near("C_H", r.c_hnf.value, 0.254625911836762946, 1e-9);
  near("density_H", r.density_hnf.value, 0.41964337760707887, 1e-10);
  near("rho_T(9)", r.rho_subterm.value, 0.2956014673597697, 1e-10);
  near("rho/rho_T(9)", r.rho_ratio.value, 0.9999873991231537, 1e-10);
  return o;
}

Outcome asymptotic_ratio_check() {
  Outcome o;
  const auto c = linf_coeffs_holonomic(5000);
  const double r1 = asymptotic_ratio(c[1000], 1000);
  const double r5 = asymptotic_ratio(c[5000], 5000);
  std::ostringstream s;
  s << std::setprecision(9) << "ratio(1000) = " << r1 << ", ratio(5000) = " << r5;
  o.detail = s.str();
  if (!(r1 >= 0.95 && r1 <= 1.05)) o.fail(s.str() + "; ratio(1000) outside [0.95, 1.05]");
  if (!(std::abs(r5 - 1) < std::abs(r1 - 1))) o.fail(s.str() + "; no closer to 1 at 5000");
  return o;
}

Outcome subterm_avoidance() {
  Outcome o;
  const std::size_t N = 12;
  const Term omega = parse_term("(\\(0 0) \\(0 0))");
  const auto s = subterm_series(omega, N);
  for (std::uint64_t n = 0; n <= N; ++n) {
    BigInt hits = 0, misses = 0;
    for (const auto& x : enumerate_terms(n, FreeBound::unbounded()))
      (contains_subterm(x, omega) ? hits : misses) += 1;
    if (hits != s.containing[n] || misses != s.avoiding[n])
      o.fail("census differs at n=" + std::to_string(n));
  }
  const auto linf = linf_coeffs_holonomic(N);
  std::ostringstream ratios;
  ratios << std::setprecision(7) << "Avoid/L for n=9..12:";
  std::vector<double> r;
  for (std::uint64_t n = 9; n <= 12; ++n) {
    r.push_back(bigint_ratio(s.avoiding[n], linf[n]));
    ratios << ' ' << r.back();
  }
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] < r[i - 1]))
      o.fail("census matches, but " + ratios.str() + " is not strictly decreasing (n=" +
             std::to_string(8 + i) + " -> " + std::to_string(9 + i) + ")");
  if (o.pass) o.detail = ratios.str();
  return o;
}

Outcome minf_check() {
  Outcome o;
  const std::string got = cli_out({"series", "minf", "-n", "10"});
  if (got != "1,3,10,40,181,884,4539,24142,131821,734577,4160626\n") o.fail("got " + got);
  const auto m = minf_coeffs(6);
  for (std::uint64_t n = 0; n <= 6; ++n)
    if (count_terms_sized(n, SizeModel::MInf) != m[n])
      o.fail("enumeration differs at n=" + std::to_string(n));
  return o;
}

Outcome shift_identities() {
  Outcome o;
  const auto linf = linf_coeffs_holonomic(101);
  const auto k = hnf_coeffs(101).neutral_hnf;
  const auto a1 = a1_coeffs(100);
  for (std::size_t n = 1; n <= 100; ++n)
    if (k[n + 1] != linf[n]) o.fail("K[n+1] != L[n] at n=" + std::to_string(n));
  for (std::size_t n = 0; n <= 100; ++n)
    if (a1[n] != linf[n + 1]) o.fail("A1[n] != L[n+1] at n=" + std::to_string(n));
  const CheckReport r = certify_bijection(BijectionKind::KhnfShift, 10);
  if (!r.ok()) o.fail("shift bijection: " + r.failure->what + " " + r.failure->witness);
  for (std::uint64_t n = 0; n <= 10; ++n) {
    if (n >= 1 && count_family(n + 1, Family::NeutralHNF) != count_terms(n, FreeBound::unbounded()))
      o.fail("enumerated K differs at n=" + std::to_string(n));
    if (count_terms_sized(n, SizeModel::A1) != count_terms(n + 1, FreeBound::unbounded()))
      o.fail("enumerated A1 differs at n=" + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sequence reproduction", 1, sequence_reproduction},
      {2, "triple-oracle agreement n<=200", 10, triple_oracle},
      {3, "enumeration vs series n<=12", 300, enumeration_vs_series},
      {4, "typable table sizes 0..14", 1800, typable_table},
      {5, "bijection certification n<=10", 300, bijection_certification},
      {6, "size 3 and 4 bijection tables", 1, bijection_tables},
      {7, "constants", 1, constants},
      {8, "asymptotic ratio", 30, asymptotic_ratio_check},
      {9, "subterm census and avoidance density", 300, subterm_avoidance},
      {10, "MInf series and enumeration", 60, minf_check},
      {11, "shift identities", 60, shift_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      std::ostringstream s;
      s << "took " << secs << "s, budget " << c.budget_seconds << "s";
      o.fail(s.str());
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << std::fixed << std::setprecision(3) << secs << "s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
