#include "lamcount/certify.hpp"

#include <array>
#include <utility>

#include "lamcount/bijections.hpp"
#include "lamcount/enumeration.hpp"
#include "lamcount/error.hpp"

namespace lamcount {

namespace {

constexpr std::array<std::pair<BijectionKind, std::string_view>, 5> kNames{{
    {BijectionKind::LambdaBw, "lbw"},
    {BijectionKind::BwBz, "bwbz"},
    {BijectionKind::LambdaBz, "lbz"},
    {BijectionKind::MotzkinNeutral, "mone"},
    {BijectionKind::KhnfShift, "khnf"},
}};

std::string render(const Term& t) { return render_term(t); }
template <class Tree>
std::string render(const Tree& t) {
  return to_sexpr(t);
}

std::uint64_t object_size(const Term& t) { return t.natural_size(); }
template <class Tree>
std::uint64_t object_size(const Tree& t) {
  return t.size();
}

// Checks one direction: every x maps into the codomain with the expected
// size, and comes back unchanged.
template <class A, class Fwd, class Back, class Member>
std::optional<CheckFailure> round_trip(std::uint64_t size, const std::vector<A>& domain,
                                       Fwd forward, Back backward, Member member,
                                       std::int64_t size_shift, std::string_view label) {
  for (const A& x : domain) {
    try {
      const auto y = forward(x);
      const auto expected = static_cast<std::int64_t>(size) + size_shift;
      if (static_cast<std::int64_t>(object_size(y)) != expected)
        return CheckFailure{size, std::string(label) + ": size not preserved", render(x)};
      if (!member(y))
        return CheckFailure{size, std::string(label) + ": image outside codomain", render(x)};
      if (!(backward(y) == x))
        return CheckFailure{size, std::string(label) + ": round trip is not the identity",
                            render(x)};
    } catch (const Error& e) {
      return CheckFailure{size, std::string(label) + ": " + e.what(), render(x)};
    }
  }
  return std::nullopt;
}

std::vector<Term> plain(std::uint64_t n) { return enumerate_terms(n, FreeBound::unbounded()); }

}  // namespace

std::optional<BijectionKind> parse_bijection_kind(std::string_view name) {
  for (const auto& [kind, n] : kNames)
    if (n == name) return kind;
  return std::nullopt;
}

std::string_view bijection_name(BijectionKind kind) {
  for (const auto& [k, n] : kNames)
    if (k == kind) return n;
  return "?";
}

CheckReport certify_bijection(BijectionKind kind, std::uint64_t max_size) {
  CheckReport report;
  auto any_term = [](const Term&) { return true; };
  for (std::uint64_t n = 1; n <= max_size && report.ok(); ++n) {
    std::optional<CheckFailure> f;
    std::uint64_t dom = 0;
    std::uint64_t cod = 0;
    switch (kind) {
      case BijectionKind::LambdaBw: {
        const auto terms = plain(n);
        const auto trees = enumerate_bw(n);
        dom = terms.size();
        cod = trees.size();
        f = round_trip(n, terms, lambda_to_bw, bw_to_lambda, is_black_rooted, 0, "lambda->bw");
        if (!f)
          f = round_trip(n, trees, bw_to_lambda, lambda_to_bw, any_term, 0, "bw->lambda");
        break;
      }
      case BijectionKind::BwBz: {
        const auto bws = enumerate_bw(n);
        const auto bzs = enumerate_bz(n);
        dom = bws.size();
        cod = bzs.size();
        f = round_trip(n, bws, bw_to_bz, bz_to_bw, is_zigzag_free, 0, "bw->bz");
        if (!f) f = round_trip(n, bzs, bz_to_bw, bw_to_bz, is_black_rooted, 0, "bz->bw");
        break;
      }
      case BijectionKind::LambdaBz: {
        const auto terms = plain(n);
        const auto trees = enumerate_bz(n);
        dom = terms.size();
        cod = trees.size();
        f = round_trip(n, terms, lambda_to_bz, bz_to_lambda, is_zigzag_free, 0, "lambda->bz");
        if (!f)
          f = round_trip(n, trees, bz_to_lambda, lambda_to_bz, any_term, 0, "bz->lambda");
        break;
      }
      case BijectionKind::MotzkinNeutral: {
        const auto trees = enumerate_motzkin(n);
        const auto terms = enumerate_family(n, Family::Neutral);
        dom = trees.size();
        cod = terms.size();
        auto neutral = [](const Term& t) { return classify(t).is_neutral; };
        auto any_tree = [](const MotzkinTree&) { return true; };
        f = round_trip(n, trees, motzkin_to_neutral, neutral_to_motzkin, neutral, 0,
                       "motzkin->neutral");
        if (!f)
          f = round_trip(n, terms, neutral_to_motzkin, motzkin_to_neutral, any_tree, 0,
                         "neutral->motzkin");
        break;
      }
      case BijectionKind::KhnfShift: {
        // Neutral hnfs of size n+1 against plain terms of size n.
        const auto hnfs = enumerate_family(n + 1, Family::NeutralHNF);
        const auto terms = plain(n);
        dom = hnfs.size();
        cod = terms.size();
        auto neutral_hnf = [](const Term& t) { return classify(t).is_neutral_hnf; };
        f = round_trip(n + 1, hnfs, khnf_shift, khnf_unshift, any_term, -1, "khnf->plain");
        if (!f)
          f = round_trip(n, terms, khnf_unshift, khnf_shift, neutral_hnf, 1, "plain->khnf");
        break;
      }
    }
    if (!f && dom != cod)
      f = CheckFailure{n, "domain and codomain differ in size: " + std::to_string(dom) +
                              " vs " + std::to_string(cod),
                       ""};
    report.sizes.push_back({n, dom, cod});
    report.failure = std::move(f);
  }
  return report;
}

CheckReport certify_triangle(std::uint64_t max_size) {
  CheckReport report;
  for (std::uint64_t n = 1; n <= max_size && report.ok(); ++n) {
    const auto terms = plain(n);
    for (const Term& t : terms) {
      const BzTree direct = lambda_to_bz(t);
      if (!(bw_to_bz(lambda_to_bw(t)) == direct)) {
        report.failure = CheckFailure{n, "bw_to_bz . lambda_to_bw != lambda_to_bz", render(t)};
        break;
      }
      if (!(bw_to_lambda(bz_to_bw(direct)) == bz_to_lambda(direct))) {
        report.failure =
            CheckFailure{n, "bw_to_lambda . bz_to_bw != bz_to_lambda", to_sexpr(direct)};
        break;
      }
    }
    report.sizes.push_back({n, terms.size(), terms.size()});
  }
  return report;
}

}  // namespace lamcount
