#include "lamcount/enumeration.hpp"

#include <limits>

namespace lamcount {

namespace {

constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();

std::uint64_t bound_key(FreeBound b) { return b.is_unbounded() ? kNoBound : b.value(); }

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::NormalForm:
      return "normal";
    case Family::Neutral:
      return "neutral";
    case Family::HeadNF:
      return "hnf";
    case Family::NeutralHNF:
      return "neutral-hnf";
  }
  return "?";
}

Enumerator::Enumerator(SizeModel model, std::uint64_t memo_limit)
    : model_(model), weights_(weights(model)), memo_limit_(memo_limit) {}

// A free index k under d binders costs at least k - d + 1 <= n + 1, so any
// bound above n admits every term of size n.
FreeBound Enumerator::normalize(std::uint64_t n, FreeBound bound) const noexcept {
  if (!bound.is_unbounded() && bound.value() > n) return FreeBound::unbounded();
  return bound;
}

void Enumerator::for_each_term(std::uint64_t n, FreeBound bound, const TermVisitor& visit) {
  bound = normalize(n, bound);
  if (n > memo_limit_) {
    generate_plain(n, bound, visit);
    return;
  }
  const PlainKey key{n, bound_key(bound)};
  auto it = plain_memo_.find(key);
  if (it == plain_memo_.end()) {
    std::vector<Term> terms;
    generate_plain(n, bound, [&terms](const Term& t) { terms.push_back(t); });
    it = plain_memo_.emplace(key, std::move(terms)).first;
  }
  // std::map nodes are stable, so recursive fills cannot invalidate this.
  for (const Term& t : it->second) visit(t);
}

void Enumerator::generate_plain(std::uint64_t n, FreeBound bound, const TermVisitor& visit) {
  const SizeWeights& w = weights_;
  if (n >= w.zero) {
    const std::uint64_t k = (n - w.zero) / w.succ;
    if ((n - w.zero) % w.succ == 0 && k <= std::numeric_limits<std::uint32_t>::max() &&
        bound.admits(k + 1))
      visit(Term::index(static_cast<std::uint32_t>(k)));
  }
  if (n >= w.abs) {
    for_each_term(n - w.abs, bound.under_binder(),
                  [&visit](const Term& body) { visit(Term::abs(body)); });
  }
  if (n >= w.app) {
    const std::uint64_t rest = n - w.app;
    for (std::uint64_t left = 0; left <= rest; ++left) {
      for_each_term(left, bound, [&](const Term& f) {
        for_each_term(rest - left, bound, [&](const Term& a) { visit(Term::app(f, a)); });
      });
    }
  }
}

void Enumerator::for_each_in_family(std::uint64_t n, Family family, const TermVisitor& visit) {
  if (n > memo_limit_) {
    generate_family(n, family, visit);
    return;
  }
  const FamilyKey key{n, family};
  auto it = family_memo_.find(key);
  if (it == family_memo_.end()) {
    std::vector<Term> terms;
    generate_family(n, family, [&terms](const Term& t) { terms.push_back(t); });
    it = family_memo_.emplace(key, std::move(terms)).first;
  }
  for (const Term& t : it->second) visit(t);
}

void Enumerator::generate_family(std::uint64_t n, Family family, const TermVisitor& visit) {
  if (n == 0) return;
  visit(Term::index(static_cast<std::uint32_t>(n - 1)));

  // λ-closure: N = M + λN and H = K + λH.
  if (family == Family::NormalForm || family == Family::HeadNF) {
    for_each_in_family(n - 1, family, [&visit](const Term& body) { visit(Term::abs(body)); });
  }

  // Application spine: head from M (resp. K), argument from N (resp. L∞).
  const bool normal_args = family == Family::NormalForm || family == Family::Neutral;
  const Family head = normal_args ? Family::Neutral : Family::NeutralHNF;
  const std::uint64_t rest = n - 1;
  for (std::uint64_t left = 1; left < rest; ++left) {
    for_each_in_family(left, head, [&](const Term& f) {
      auto emit = [&](const Term& a) { visit(Term::app(f, a)); };
      if (normal_args)
        for_each_in_family(rest - left, Family::NormalForm, emit);
      else
        for_each_term(rest - left, FreeBound::unbounded(), emit);
    });
  }
}

std::vector<Term> enumerate_terms(std::uint64_t n, FreeBound bound) {
  std::vector<Term> out;
  Enumerator e;
  e.for_each_term(n, bound, [&out](const Term& t) { out.push_back(t); });
  return out;
}

std::vector<Term> enumerate_family(std::uint64_t n, Family family) {
  std::vector<Term> out;
  Enumerator e;
  e.for_each_in_family(n, family, [&out](const Term& t) { out.push_back(t); });
  return out;
}

std::vector<Term> enumerate_terms_sized(std::uint64_t n, SizeModel model) {
  std::vector<Term> out;
  Enumerator e(model);
  e.for_each_term(n, FreeBound::unbounded(), [&out](const Term& t) { out.push_back(t); });
  return out;
}

BigInt count_terms(std::uint64_t n, FreeBound bound) {
  std::uint64_t c = 0;
  Enumerator e;
  e.for_each_term(n, bound, [&c](const Term&) { ++c; });
  return BigInt(c);
}

BigInt count_family(std::uint64_t n, Family family) {
  std::uint64_t c = 0;
  Enumerator e;
  e.for_each_in_family(n, family, [&c](const Term&) { ++c; });
  return BigInt(c);
}

BigInt count_terms_sized(std::uint64_t n, SizeModel model) {
  std::uint64_t c = 0;
  Enumerator e(model);
  e.for_each_term(n, FreeBound::unbounded(), [&c](const Term&) { ++c; });
  return BigInt(c);
}

}  // namespace lamcount
