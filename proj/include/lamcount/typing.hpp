#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lamcount/bigint.hpp"
#include "lamcount/term.hpp"

namespace lamcount {

/// Simple type: a type variable or an arrow.
class SimpleType {
 public:
  static SimpleType var(std::uint32_t id);
  static SimpleType arrow(SimpleType domain, SimpleType codomain);

  bool is_var() const noexcept;
  std::uint32_t var_id() const noexcept;
  const SimpleType& domain() const noexcept;
  const SimpleType& codomain() const noexcept;

  friend bool operator==(const SimpleType& a, const SimpleType& b) noexcept;

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// "a -> (b -> a)" style rendering; variables are a, b, …, z, t26, t27, …
std::string render_type(const SimpleType& t);

/// Principal simple type of a closed term, with variables numbered by first
/// occurrence (left to right). Returns nullopt when the term is untypable.
/// Throws NotClosed for open terms.
std::optional<SimpleType> infer(const Term& t);

struct TypableCount {
  BigInt typable;
  BigInt closed;
};

/// Closed terms of natural size n and how many of them are simply typable.
TypableCount count_typable(std::uint64_t n);

}  // namespace lamcount
