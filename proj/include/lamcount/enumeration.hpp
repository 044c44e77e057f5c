#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "lamcount/bigint.hpp"
#include "lamcount/term.hpp"

namespace lamcount {

/// Upper bound m on free indices (terms of L_m), or no bound (plain terms).
class FreeBound {
 public:
  static constexpr FreeBound unbounded() noexcept { return FreeBound(); }
  static constexpr FreeBound at_most(std::uint64_t m) noexcept { return FreeBound(m); }

  constexpr bool is_unbounded() const noexcept { return !m_.has_value(); }
  constexpr std::uint64_t value() const noexcept { return *m_; }
  constexpr bool admits(std::uint64_t max_free) const noexcept {
    return !m_ || max_free <= *m_;
  }
  /// Bound seen under one more binder.
  constexpr FreeBound under_binder() const noexcept {
    return m_ ? FreeBound(*m_ + 1) : FreeBound();
  }

  friend constexpr bool operator==(const FreeBound&, const FreeBound&) = default;

 private:
  constexpr FreeBound() = default;
  constexpr explicit FreeBound(std::uint64_t m) : m_(m) {}
  std::optional<std::uint64_t> m_;
};

enum class Family { NormalForm, Neutral, HeadNF, NeutralHNF };

std::string_view family_name(Family f) noexcept;

using TermVisitor = std::function<void(const Term&)>;

/// Exhaustive generator of λ-terms of a given size.
///
/// Streams are deterministic: the index (if any) first, then abstractions in
/// the order of their bodies, then applications by ascending left size, left
/// term, right term. This is exactly `enumeration_order`.
///
/// Sub-streams up to `memo_limit` are materialized once and reused; larger
/// sizes are regenerated lazily. An Enumerator is not thread-safe; use one per
/// thread.
class Enumerator {
 public:
  explicit Enumerator(SizeModel model = SizeModel::Natural, std::uint64_t memo_limit = 11);

  SizeModel model() const noexcept { return model_; }

  void for_each_term(std::uint64_t n, FreeBound bound, const TermVisitor& visit);

  /// Grammar-directed generation of a syntactic family (natural size only):
  ///   N = M + λN,  M = M N + D,  H = K + λH,  K = K L∞ + D.
  void for_each_in_family(std::uint64_t n, Family family, const TermVisitor& visit);

 private:
  using PlainKey = std::pair<std::uint64_t, std::uint64_t>;  // (size, bound or kNoBound)
  using FamilyKey = std::pair<std::uint64_t, Family>;

  void generate_plain(std::uint64_t n, FreeBound bound, const TermVisitor& visit);
  void generate_family(std::uint64_t n, Family family, const TermVisitor& visit);
  FreeBound normalize(std::uint64_t n, FreeBound bound) const noexcept;

  SizeModel model_;
  SizeWeights weights_;
  std::uint64_t memo_limit_;
  std::map<PlainKey, std::vector<Term>> plain_memo_;
  std::map<FamilyKey, std::vector<Term>> family_memo_;
};

/// Plain (free_bound unbounded) or L_m terms of natural size n, in stream order.
std::vector<Term> enumerate_terms(std::uint64_t n, FreeBound bound);
std::vector<Term> enumerate_family(std::uint64_t n, Family family);
/// Plain terms of size n under an arbitrary size model.
std::vector<Term> enumerate_terms_sized(std::uint64_t n, SizeModel model);

/// Stream lengths; terms are visited but never collected.
BigInt count_terms(std::uint64_t n, FreeBound bound);
BigInt count_family(std::uint64_t n, Family family);
BigInt count_terms_sized(std::uint64_t n, SizeModel model);

}  // namespace lamcount
