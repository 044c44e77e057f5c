#include "lamcount/term.hpp"

#include <cassert>
#include <limits>
#include <vector>

#include "lamcount/error.hpp"

namespace lamcount {

struct Term::Node {
  TermKind kind;
  std::uint32_t index;
  std::uint64_t size;
  Term left;   // body for Abs, function for App
  Term right;  // argument for App
};

Term Term::index(std::uint32_t k) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Index, k, std::uint64_t{k} + 1, Term(nullptr), Term(nullptr)}));
}

Term Term::abs(Term body) {
  const std::uint64_t s = body.natural_size() + 1;
  return Term(std::make_shared<const Node>(
      Node{TermKind::Abs, 0, s, std::move(body), Term(nullptr)}));
}

Term Term::app(Term fun, Term arg) {
  const std::uint64_t s = fun.natural_size() + arg.natural_size() + 1;
  return Term(std::make_shared<const Node>(
      Node{TermKind::App, 0, s, std::move(fun), std::move(arg)}));
}

TermKind Term::kind() const noexcept { return node_->kind; }

std::uint32_t Term::index() const noexcept {
  assert(is_index());
  return node_->index;
}

const Term& Term::body() const noexcept {
  assert(is_abs());
  return node_->left;
}

const Term& Term::fun() const noexcept {
  assert(is_app());
  return node_->left;
}

const Term& Term::arg() const noexcept {
  assert(is_app());
  return node_->right;
}

std::uint64_t Term::natural_size() const noexcept { return node_->size; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.natural_size() != b.natural_size()) return false;
  switch (a.kind()) {
    case TermKind::Index:
      return a.index() == b.index();
    case TermKind::Abs:
      return a.body() == b.body();
    case TermKind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  Term parse() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '\\') {
      ++pos_;
      return Term::abs(parse());
    }
    if (c == '(') {
      ++pos_;
      Term fun = parse();
      expect(' ');
      Term arg = parse();
      expect(')');
      return Term::app(std::move(fun), std::move(arg));
    }
    if (c >= '0' && c <= '9') return parse_index();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Term parse_index() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("index literal overflow", start);
      ++pos_;
    }
    return Term::index(static_cast<std::uint32_t>(value));
  }

  void expect(char c) {
    if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "'", pos_);
    if (text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'",
                       pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Index:
      out += std::to_string(t.index());
      return;
    case TermKind::Abs:
      out += '\\';
      render_into(t.body(), out);
      return;
    case TermKind::App:
      out += '(';
      render_into(t.fun(), out);
      out += ' ';
      render_into(t.arg(), out);
      out += ')';
      return;
  }
}

std::uint64_t max_free_at_depth(const Term& t, std::uint64_t depth) {
  switch (t.kind()) {
    case TermKind::Index:
      return t.index() >= depth ? t.index() - depth + 1 : 0;
    case TermKind::Abs:
      return max_free_at_depth(t.body(), depth + 1);
    case TermKind::App:
      return std::max(max_free_at_depth(t.fun(), depth),
                      max_free_at_depth(t.arg(), depth));
  }
  return 0;
}

bool is_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::Index:
      return true;
    case TermKind::Abs:
      return is_normal(t.body());
    case TermKind::App:
      return !t.fun().is_abs() && is_normal(t.fun()) && is_normal(t.arg());
  }
  return false;
}

bool is_neutral(const Term& t) {
  switch (t.kind()) {
    case TermKind::Index:
      return true;
    case TermKind::Abs:
      return false;
    case TermKind::App:
      return is_neutral(t.fun()) && is_normal(t.arg());
  }
  return false;
}

bool is_neutral_hnf(const Term& t) {
  const Term* head = &t;
  while (head->is_app()) head = &head->fun();
  return head->is_index();
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_all(); }

std::string render_term(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::uint64_t size(const Term& t, SizeModel model) {
  if (model == SizeModel::Natural) return t.natural_size();
  const SizeWeights w = weights(model);
  switch (t.kind()) {
    case TermKind::Index:
      return w.index(t.index());
    case TermKind::Abs:
      return w.abs + size(t.body(), model);
    case TermKind::App:
      return w.app + size(t.fun(), model) + size(t.arg(), model);
  }
  return 0;
}

std::uint64_t max_free_index(const Term& t) { return max_free_at_depth(t, 0); }

Classification classify(const Term& t) {
  Classification c;
  c.is_normal = is_normal(t);
  c.is_neutral = is_neutral(t);
  c.is_neutral_hnf = is_neutral_hnf(t);
  const Term* inner = &t;
  while (inner->is_abs()) inner = &inner->body();
  c.is_hnf = is_neutral_hnf(*inner);
  return c;
}

bool contains_subterm(const Term& t, const Term& pattern) {
  const std::uint64_t psize = pattern.natural_size();
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->natural_size() < psize) continue;
    switch (cur->kind()) {
      case TermKind::Index:
        if (pattern.is_index() && pattern.index() <= cur->index()) return true;
        break;
      case TermKind::Abs:
        if (*cur == pattern) return true;
        stack.push_back(&cur->body());
        break;
      case TermKind::App:
        if (*cur == pattern) return true;
        stack.push_back(&cur->fun());
        stack.push_back(&cur->arg());
        break;
    }
  }
  return false;
}

std::strong_ordering enumeration_order(const Term& a, const Term& b) {
  if (auto c = a.natural_size() <=> b.natural_size(); c != 0) return c;
  if (auto c = static_cast<int>(a.kind()) <=> static_cast<int>(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case TermKind::Index:
      return a.index() <=> b.index();
    case TermKind::Abs:
      return enumeration_order(a.body(), b.body());
    case TermKind::App:
      if (auto c = a.fun().natural_size() <=> b.fun().natural_size(); c != 0) return c;
      if (auto c = enumeration_order(a.fun(), b.fun()); c != 0) return c;
      return enumeration_order(a.arg(), b.arg());
  }
  return std::strong_ordering::equal;
}

}  // namespace lamcount
