#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lamcount {

enum class BwColor : std::uint8_t { Black, White };

/// Black-white binary tree. A default-constructed tree is the empty tree □.
///
/// Well-formed trees follow the two-sorted grammar
///   BW• = •(BW•) + •(BW○)
///   BW○ = □ + ○(BW○) + ○(BW○, BW•)
/// i.e. black nodes have only a left child, a white node's left child is white
/// and its right child is black. `is_black_rooted` checks this.
class BwTree {
 public:
  BwTree() = default;
  static BwTree black(BwTree left = {});
  static BwTree white(BwTree left = {}, BwTree right = {});

  bool empty() const noexcept { return node_ == nullptr; }
  BwColor color() const noexcept;
  const BwTree& left() const noexcept;
  const BwTree& right() const noexcept;
  /// Number of colored nodes.
  std::uint64_t size() const noexcept;

  friend bool operator==(const BwTree& a, const BwTree& b) noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

bool is_black_rooted(const BwTree& t);
bool is_white_part(const BwTree& t);

/// Positional binary tree with one node sort. Default-constructed = empty.
class BzTree {
 public:
  BzTree() = default;
  static BzTree node(BzTree left = {}, BzTree right = {});
  static BzTree leaf() { return node(); }

  bool empty() const noexcept { return node_ == nullptr; }
  const BzTree& left() const noexcept;
  const BzTree& right() const noexcept;
  std::uint64_t size() const noexcept;

  friend bool operator==(const BzTree& a, const BzTree& b) noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// No node that is a left child has a right child without a left child.
bool is_zigzag_free(const BzTree& t);

enum class MotzkinKind : std::uint8_t { Leaf, Unary, Binary };

/// Unary-binary tree; never empty.
class MotzkinTree {
 public:
  static MotzkinTree leaf();
  static MotzkinTree unary(MotzkinTree child);
  static MotzkinTree binary(MotzkinTree left, MotzkinTree right);

  MotzkinKind kind() const noexcept;
  const MotzkinTree& child() const noexcept;  // Unary
  const MotzkinTree& left() const noexcept;   // Binary
  const MotzkinTree& right() const noexcept;  // Binary
  std::uint64_t size() const noexcept;

  friend bool operator==(const MotzkinTree& a, const MotzkinTree& b) noexcept;

 private:
  struct Node;
  explicit MotzkinTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// S-expressions:
//   Bw:      ()  (B child)  (W child)  (W child right)
//   Bz:      ()  (* left right)
//   Motzkin: L   (U child)  (N left right)
std::string to_sexpr(const BwTree& t);
std::string to_sexpr(const BzTree& t);
std::string to_sexpr(const MotzkinTree& t);

/// Parsers throw ParseError; they check syntax only, not the Bw grammar.
BwTree parse_bw(std::string_view text);
BzTree parse_bz(std::string_view text);
MotzkinTree parse_motzkin(std::string_view text);

/// Graphviz text, one node per line, edges labelled L/R (Motzkin: U/L/R).
std::string to_dot(const BwTree& t, std::string_view name = "bw");
std::string to_dot(const BzTree& t, std::string_view name = "bz");
std::string to_dot(const MotzkinTree& t, std::string_view name = "motzkin");

// Exhaustive grammar-directed generation, deterministic order.
std::vector<BwTree> enumerate_bw(std::uint64_t n);
std::vector<BzTree> enumerate_bz(std::uint64_t n);
std::vector<MotzkinTree> enumerate_motzkin(std::uint64_t n);
/// Every positional binary tree with n nodes (Catalan many).
std::vector<BzTree> enumerate_binary_trees(std::uint64_t n);

}  // namespace lamcount
