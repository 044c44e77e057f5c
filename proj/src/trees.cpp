#include "lamcount/trees.hpp"

#include <cassert>
#include <map>
#include <optional>

#include "lamcount/error.hpp"

namespace lamcount {

// ---- BwTree ----------------------------------------------------------------

struct BwTree::Node {
  BwColor color;
  std::uint64_t size;
  BwTree left;
  BwTree right;
};

BwTree BwTree::black(BwTree left) {
  BwTree t;
  const std::uint64_t s = 1 + left.size();
  t.node_ = std::make_shared<const Node>(Node{BwColor::Black, s, std::move(left), BwTree()});
  return t;
}

BwTree BwTree::white(BwTree left, BwTree right) {
  BwTree t;
  const std::uint64_t s = 1 + left.size() + right.size();
  t.node_ =
      std::make_shared<const Node>(Node{BwColor::White, s, std::move(left), std::move(right)});
  return t;
}

BwColor BwTree::color() const noexcept { return node_->color; }
const BwTree& BwTree::left() const noexcept { return node_->left; }
const BwTree& BwTree::right() const noexcept { return node_->right; }
std::uint64_t BwTree::size() const noexcept { return node_ ? node_->size : 0; }

bool operator==(const BwTree& a, const BwTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.empty() || b.empty()) return false;
  return a.color() == b.color() && a.size() == b.size() && a.left() == b.left() &&
         a.right() == b.right();
}

bool is_black_rooted(const BwTree& t) {
  if (t.empty() || t.color() != BwColor::Black || !t.right().empty()) return false;
  const BwTree& l = t.left();
  return (!l.empty() && l.color() == BwColor::Black) ? is_black_rooted(l) : is_white_part(l);
}

bool is_white_part(const BwTree& t) {
  if (t.empty()) return true;
  if (t.color() != BwColor::White) return false;
  return is_white_part(t.left()) && (t.right().empty() || is_black_rooted(t.right()));
}

// ---- BzTree ----------------------------------------------------------------

struct BzTree::Node {
  std::uint64_t size;
  BzTree left;
  BzTree right;
};

BzTree BzTree::node(BzTree left, BzTree right) {
  BzTree t;
  const std::uint64_t s = 1 + left.size() + right.size();
  t.node_ = std::make_shared<const Node>(Node{s, std::move(left), std::move(right)});
  return t;
}

const BzTree& BzTree::left() const noexcept { return node_->left; }
const BzTree& BzTree::right() const noexcept { return node_->right; }
std::uint64_t BzTree::size() const noexcept { return node_ ? node_->size : 0; }

bool operator==(const BzTree& a, const BzTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.empty() || b.empty()) return false;
  return a.size() == b.size() && a.left() == b.left() && a.right() == b.right();
}

namespace {

bool zigzag_free_below(const BzTree& t, bool is_left_child) {
  if (t.empty()) return true;
  if (is_left_child && t.left().empty() && !t.right().empty()) return false;
  return zigzag_free_below(t.left(), true) && zigzag_free_below(t.right(), false);
}

}  // namespace

bool is_zigzag_free(const BzTree& t) { return zigzag_free_below(t, false); }

// ---- MotzkinTree -----------------------------------------------------------

struct MotzkinTree::Node {
  MotzkinKind kind;
  std::uint64_t size;
  std::optional<MotzkinTree> first;   // child (Unary) or left (Binary)
  std::optional<MotzkinTree> second;  // right (Binary)
};

MotzkinTree MotzkinTree::leaf() {
  static const MotzkinTree kLeaf(
      std::make_shared<const Node>(Node{MotzkinKind::Leaf, 1, std::nullopt, std::nullopt}));
  return kLeaf;
}

MotzkinTree MotzkinTree::unary(MotzkinTree child) {
  const std::uint64_t s = 1 + child.size();
  return MotzkinTree(
      std::make_shared<const Node>(Node{MotzkinKind::Unary, s, std::move(child), std::nullopt}));
}

MotzkinTree MotzkinTree::binary(MotzkinTree left, MotzkinTree right) {
  const std::uint64_t s = 1 + left.size() + right.size();
  return MotzkinTree(std::make_shared<const Node>(
      Node{MotzkinKind::Binary, s, std::move(left), std::move(right)}));
}

MotzkinKind MotzkinTree::kind() const noexcept { return node_->kind; }

const MotzkinTree& MotzkinTree::child() const noexcept {
  assert(kind() == MotzkinKind::Unary);
  return *node_->first;
}

const MotzkinTree& MotzkinTree::left() const noexcept {
  assert(kind() == MotzkinKind::Binary);
  return *node_->first;
}

const MotzkinTree& MotzkinTree::right() const noexcept {
  assert(kind() == MotzkinKind::Binary);
  return *node_->second;
}

std::uint64_t MotzkinTree::size() const noexcept { return node_->size; }

bool operator==(const MotzkinTree& a, const MotzkinTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case MotzkinKind::Leaf:
      return true;
    case MotzkinKind::Unary:
      return a.child() == b.child();
    case MotzkinKind::Binary:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---- s-expressions ---------------------------------------------------------

namespace {

void write(const BwTree& t, std::string& out) {
  if (t.empty()) {
    out += "()";
    return;
  }
  out += t.color() == BwColor::Black ? "(B " : "(W ";
  write(t.left(), out);
  if (!t.right().empty()) {
    out += ' ';
    write(t.right(), out);
  }
  out += ')';
}

void write(const BzTree& t, std::string& out) {
  if (t.empty()) {
    out += "()";
    return;
  }
  out += "(* ";
  write(t.left(), out);
  out += ' ';
  write(t.right(), out);
  out += ')';
}

void write(const MotzkinTree& t, std::string& out) {
  switch (t.kind()) {
    case MotzkinKind::Leaf:
      out += 'L';
      return;
    case MotzkinKind::Unary:
      out += "(U ";
      write(t.child(), out);
      out += ')';
      return;
    case MotzkinKind::Binary:
      out += "(N ";
      write(t.left(), out);
      out += ' ';
      write(t.right(), out);
      out += ')';
      return;
  }
}

class SexprReader {
 public:
  explicit SexprReader(std::string_view text) : text_(text) {}

  template <class Tree, class Fn>
  Tree read_all(Fn read_one) {
    Tree t = read_one(*this);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
    ++pos_;
  }

  char take() {
    const char c = peek();
    ++pos_;
    return c;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

BwTree read_bw(SexprReader& r) {
  r.expect('(');
  if (r.peek() == ')') {
    r.take();
    return {};
  }
  const std::size_t at = r.pos();
  const char tag = r.take();
  if (tag != 'B' && tag != 'W') throw ParseError("expected 'B' or 'W'", at);
  BwTree left = read_bw(r);
  if (tag == 'B') {
    r.expect(')');
    return BwTree::black(std::move(left));
  }
  if (r.peek() == ')') {
    r.take();
    return BwTree::white(std::move(left));
  }
  BwTree right = read_bw(r);
  r.expect(')');
  return BwTree::white(std::move(left), std::move(right));
}

BzTree read_bz(SexprReader& r) {
  r.expect('(');
  if (r.peek() == ')') {
    r.take();
    return {};
  }
  r.expect('*');
  BzTree left = read_bz(r);
  BzTree right = read_bz(r);
  r.expect(')');
  return BzTree::node(std::move(left), std::move(right));
}

MotzkinTree read_motzkin(SexprReader& r) {
  if (r.peek() == 'L') {
    r.take();
    return MotzkinTree::leaf();
  }
  r.expect('(');
  const std::size_t at = r.pos();
  const char tag = r.take();
  if (tag == 'U') {
    MotzkinTree c = read_motzkin(r);
    r.expect(')');
    return MotzkinTree::unary(std::move(c));
  }
  if (tag != 'N') throw ParseError("expected 'U' or 'N'", at);
  MotzkinTree l = read_motzkin(r);
  MotzkinTree rt = read_motzkin(r);
  r.expect(')');
  return MotzkinTree::binary(std::move(l), std::move(rt));
}

// ---- dot -------------------------------------------------------------------

class DotWriter {
 public:
  explicit DotWriter(std::string_view name) {
    out_ += "digraph ";
    out_ += name;
    out_ += " {\n";
  }

  int node(std::string_view label) {
    const int id = next_++;
    out_ += "  n" + std::to_string(id) + " [label=\"" + std::string(label) + "\"];\n";
    return id;
  }

  void edge(int from, int to, std::string_view label) {
    out_ += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + " [label=\"" +
            std::string(label) + "\"];\n";
  }

  std::string finish() { return out_ + "}\n"; }

 private:
  std::string out_;
  int next_ = 0;
};

int emit(DotWriter& w, const BwTree& t) {
  const int id = w.node(t.color() == BwColor::Black ? "B" : "W");
  if (!t.left().empty()) w.edge(id, emit(w, t.left()), "L");
  if (!t.right().empty()) w.edge(id, emit(w, t.right()), "R");
  return id;
}

int emit(DotWriter& w, const BzTree& t) {
  const int id = w.node("*");
  if (!t.left().empty()) w.edge(id, emit(w, t.left()), "L");
  if (!t.right().empty()) w.edge(id, emit(w, t.right()), "R");
  return id;
}

int emit(DotWriter& w, const MotzkinTree& t) {
  switch (t.kind()) {
    case MotzkinKind::Leaf:
      return w.node("L");
    case MotzkinKind::Unary: {
      const int id = w.node("U");
      w.edge(id, emit(w, t.child()), "U");
      return id;
    }
    case MotzkinKind::Binary: {
      const int id = w.node("N");
      w.edge(id, emit(w, t.left()), "L");
      w.edge(id, emit(w, t.right()), "R");
      return id;
    }
  }
  return -1;
}

}  // namespace

std::string to_sexpr(const BwTree& t) {
  std::string s;
  write(t, s);
  return s;
}

std::string to_sexpr(const BzTree& t) {
  std::string s;
  write(t, s);
  return s;
}

std::string to_sexpr(const MotzkinTree& t) {
  std::string s;
  write(t, s);
  return s;
}

BwTree parse_bw(std::string_view text) {
  return SexprReader(text).read_all<BwTree>(read_bw);
}

BzTree parse_bz(std::string_view text) {
  return SexprReader(text).read_all<BzTree>(read_bz);
}

MotzkinTree parse_motzkin(std::string_view text) {
  return SexprReader(text).read_all<MotzkinTree>(read_motzkin);
}

std::string to_dot(const BwTree& t, std::string_view name) {
  DotWriter w(name);
  if (!t.empty()) emit(w, t);
  return w.finish();
}

std::string to_dot(const BzTree& t, std::string_view name) {
  DotWriter w(name);
  if (!t.empty()) emit(w, t);
  return w.finish();
}

std::string to_dot(const MotzkinTree& t, std::string_view name) {
  DotWriter w(name);
  emit(w, t);
  return w.finish();
}

// ---- enumeration -----------------------------------------------------------

namespace {

class BwGenerator {
 public:
  const std::vector<BwTree>& black(std::uint64_t n) {
    if (auto it = black_.find(n); it != black_.end()) return it->second;
    std::vector<BwTree> out;
    if (n >= 1) {
      for (const BwTree& l : black(n - 1)) out.push_back(BwTree::black(l));
      for (const BwTree& l : white(n - 1)) out.push_back(BwTree::black(l));
    }
    return black_.emplace(n, std::move(out)).first->second;
  }

  const std::vector<BwTree>& white(std::uint64_t n) {
    if (auto it = white_.find(n); it != white_.end()) return it->second;
    std::vector<BwTree> out;
    if (n == 0) {
      out.emplace_back();
    } else {
      for (const BwTree& l : white(n - 1)) out.push_back(BwTree::white(l));
      for (std::uint64_t k = 0; k + 1 < n; ++k)
        for (const BwTree& l : white(k))
          for (const BwTree& r : black(n - 1 - k)) out.push_back(BwTree::white(l, r));
    }
    return white_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::uint64_t, std::vector<BwTree>> black_;
  std::map<std::uint64_t, std::vector<BwTree>> white_;
};

// BZ1 = *(right BZ1) + BZ2;  BZ2 = * + *(left BZ2) + *(left BZ2, right BZ1).
class BzGenerator {
 public:
  const std::vector<BzTree>& bz1(std::uint64_t n) {
    if (auto it = bz1_.find(n); it != bz1_.end()) return it->second;
    std::vector<BzTree> out;
    if (n >= 2)
      for (const BzTree& r : bz1(n - 1)) out.push_back(BzTree::node({}, r));
    for (const BzTree& t : bz2(n)) out.push_back(t);
    return bz1_.emplace(n, std::move(out)).first->second;
  }

  const std::vector<BzTree>& bz2(std::uint64_t n) {
    if (auto it = bz2_.find(n); it != bz2_.end()) return it->second;
    std::vector<BzTree> out;
    if (n == 1) out.push_back(BzTree::leaf());
    if (n >= 2) {
      for (const BzTree& l : bz2(n - 1)) out.push_back(BzTree::node(l, {}));
      for (std::uint64_t k = 1; k + 1 < n; ++k)
        for (const BzTree& l : bz2(k))
          for (const BzTree& r : bz1(n - 1 - k)) out.push_back(BzTree::node(l, r));
    }
    return bz2_.emplace(n, std::move(out)).first->second;
  }

 private:
  std::map<std::uint64_t, std::vector<BzTree>> bz1_;
  std::map<std::uint64_t, std::vector<BzTree>> bz2_;
};

}  // namespace

std::vector<BwTree> enumerate_bw(std::uint64_t n) { return BwGenerator().black(n); }

std::vector<BzTree> enumerate_bz(std::uint64_t n) { return BzGenerator().bz1(n); }

std::vector<MotzkinTree> enumerate_motzkin(std::uint64_t n) {
  std::vector<std::vector<MotzkinTree>> by_size(n + 1);
  for (std::uint64_t s = 1; s <= n; ++s) {
    auto& out = by_size[s];
    if (s == 1) out.push_back(MotzkinTree::leaf());
    if (s >= 2)
      for (const MotzkinTree& c : by_size[s - 1]) out.push_back(MotzkinTree::unary(c));
    for (std::uint64_t k = 1; k + 1 < s; ++k)
      for (const MotzkinTree& l : by_size[k])
        for (const MotzkinTree& r : by_size[s - 1 - k]) out.push_back(MotzkinTree::binary(l, r));
  }
  return by_size[n];
}

std::vector<BzTree> enumerate_binary_trees(std::uint64_t n) {
  std::vector<std::vector<BzTree>> by_size(n + 1);
  by_size[0].emplace_back();
  for (std::uint64_t s = 1; s <= n; ++s)
    for (std::uint64_t k = 0; k < s; ++k)
      for (const BzTree& l : by_size[k])
        for (const BzTree& r : by_size[s - 1 - k]) by_size[s].push_back(BzTree::node(l, r));
  return by_size[n];
}

}  // namespace lamcount
