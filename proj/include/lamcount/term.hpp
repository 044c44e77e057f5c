#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace lamcount {

enum class TermKind : std::uint8_t { Index, Abs, App };

/// Immutable λ-term over de Bruijn indices.
///
/// Index(k) stands for the successor chain S^k(0); it is stored as a single
/// natural number but every size model weighs it as the full chain. Nodes are
/// shared between terms, so copying a Term is O(1) and terms may be passed
/// freely between threads.
class Term {
 public:
  static Term index(std::uint32_t k);
  static Term abs(Term body);
  static Term app(Term fun, Term arg);

  TermKind kind() const noexcept;
  bool is_index() const noexcept { return kind() == TermKind::Index; }
  bool is_abs() const noexcept { return kind() == TermKind::Abs; }
  bool is_app() const noexcept { return kind() == TermKind::App; }

  // Accessors; calling one on the wrong kind is a precondition violation.
  std::uint32_t index() const noexcept;
  const Term& body() const noexcept;
  const Term& fun() const noexcept;
  const Term& arg() const noexcept;

  /// Size under the natural model, cached at construction.
  std::uint64_t natural_size() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Node weights (λ, application, successor, zero) of a size model.
struct SizeWeights {
  std::uint64_t abs;
  std::uint64_t app;
  std::uint64_t succ;
  std::uint64_t zero;

  std::uint64_t index(std::uint32_t k) const noexcept { return succ * k + zero; }
};

enum class SizeModel { Natural, A1, MInf };

constexpr SizeWeights weights(SizeModel model) noexcept {
  switch (model) {
    case SizeModel::A1:
      return {1, 2, 1, 0};
    case SizeModel::MInf:
      return {1, 1, 1, 0};
    case SizeModel::Natural:
      break;
  }
  return {1, 1, 1, 1};
}

/// Parses the concrete syntax `term = "\" term / "(" term " " term ")" / digits`.
/// Throws ParseError carrying the byte offset of the failure.
Term parse_term(std::string_view text);

/// Canonical rendering; `parse_term(render_term(t)) == t`.
std::string render_term(const Term& t);

std::uint64_t size(const Term& t, SizeModel model = SizeModel::Natural);

/// Least m such that every free index of `t` is below m (0 for closed terms).
std::uint64_t max_free_index(const Term& t);

struct Classification {
  bool is_normal = false;
  bool is_neutral = false;
  bool is_hnf = false;
  bool is_neutral_hnf = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Syntactic classes:
///  - normal: no subterm (λM)N;
///  - neutral: an index applied to normal forms (normal, no head λ);
///  - neutral hnf: an index applied to arbitrary terms;
///  - hnf: λ^k applied to a neutral hnf.
Classification classify(const Term& t);

/// True iff `pattern` occurs as a subtree of `t` when indices are read as
/// S-chains, so Index(j) occurs in Index(k) whenever j <= k.
bool contains_subterm(const Term& t, const Term& pattern);

/// Total order used by every enumerator: natural size first, then indices,
/// then abstractions (by body), then applications (by left size, left, right).
std::strong_ordering enumeration_order(const Term& a, const Term& b);

}  // namespace lamcount
