#include "lamcount/bijections.hpp"

#include <vector>

#include "lamcount/error.hpp"

namespace lamcount {

namespace {

// The chain of λ and application-argument steps from the root of `t` down to
// its innermost index. Returned outermost first.
std::vector<const Term*> wrapper_chain(const Term& t, const Term*& innermost) {
  std::vector<const Term*> chain;
  const Term* cur = &t;
  while (!cur->is_index()) {
    chain.push_back(cur);
    cur = cur->is_abs() ? &cur->body() : &cur->arg();
  }
  innermost = cur;
  return chain;
}

// Spine element of a black-white tree, root first.
struct BwSpineNode {
  BwColor color;
  BwTree right;
};

std::vector<BwSpineNode> left_spine(const BwTree& b) {
  std::vector<BwSpineNode> spine;
  for (const BwTree* cur = &b; !cur->empty(); cur = &cur->left())
    spine.push_back({cur->color(), cur->right()});
  return spine;
}

BwTree build_from_spine(const std::vector<BwSpineNode>& spine) {
  BwTree t;
  for (auto it = spine.rbegin(); it != spine.rend(); ++it)
    t = it->color == BwColor::Black ? BwTree::black(std::move(t))
                                    : BwTree::white(std::move(t), it->right);
  return t;
}

BwTree bz_to_bw_black(const BzTree& z);

// BzToBw○: z is a left child, so it may not be right-only.
BwTree bz_to_bw_white(const BzTree& z) {
  if (z.left().empty()) {
    if (!z.right().empty()) throw MalformedInput("zigzag: left child with only a right child");
    return {};
  }
  return BwTree::white(bz_to_bw_white(z.left()), bz_to_bw_black(z.right()));
}

// BzToBw•.
BwTree bz_to_bw_black(const BzTree& z) {
  if (z.empty()) return {};
  if (z.left().empty()) return BwTree::black(bz_to_bw_black(z.right()));
  return BwTree::black(BwTree::white(bz_to_bw_white(z.left()), bz_to_bw_black(z.right())));
}

}  // namespace

// ---- λ ↔ black-white -------------------------------------------------------

BwTree lambda_to_bw(const Term& t) {
  const Term* index = nullptr;
  const std::vector<const Term*> chain = wrapper_chain(t, index);
  std::vector<BwSpineNode> spine(index->index() + std::size_t{1},
                                 BwSpineNode{BwColor::Black, {}});
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Term& w = **it;
    spine.push_back({BwColor::White, w.is_app() ? lambda_to_bw(w.fun()) : BwTree()});
  }
  return build_from_spine(spine);
}

Term bw_to_lambda(const BwTree& b) {
  if (b.empty() || b.color() != BwColor::Black)
    throw MalformedInput("black-white tree must have a black root");
  const std::vector<BwSpineNode> spine = left_spine(b);
  std::size_t blacks = 0;
  while (blacks < spine.size() && spine[blacks].color == BwColor::Black) {
    if (!spine[blacks].right.empty()) throw MalformedInput("black node with a right child");
    ++blacks;
  }
  Term t = Term::index(static_cast<std::uint32_t>(blacks - 1));
  for (std::size_t i = blacks; i < spine.size(); ++i) {
    if (spine[i].color != BwColor::White)
      throw MalformedInput("black node as the left child of a white node");
    t = spine[i].right.empty() ? Term::abs(std::move(t))
                               : Term::app(bw_to_lambda(spine[i].right), std::move(t));
  }
  return t;
}

// ---- black-white ↔ zigzag-free ---------------------------------------------

BzTree bw_to_bz(const BwTree& b) {
  if (b.empty()) return {};
  const BwTree& l = b.left();
  if (b.color() == BwColor::Black) {
    if (!b.right().empty()) throw MalformedInput("black node with a right child");
    if (l.empty()) return BzTree::leaf();
    if (l.color() == BwColor::Black) return BzTree::node({}, bw_to_bz(l));
    return bw_to_bz(l);
  }
  if (!b.right().empty() && b.right().color() != BwColor::Black)
    throw MalformedInput("white node with a white right child");
  if (l.empty()) return BzTree::node(BzTree::leaf(), bw_to_bz(b.right()));
  if (l.color() != BwColor::White)
    throw MalformedInput("black node as the left child of a white node");
  return BzTree::node(bw_to_bz(l), bw_to_bz(b.right()));
}

BwTree bz_to_bw(const BzTree& z) { return bz_to_bw_black(z); }

// ---- λ ↔ zigzag-free -------------------------------------------------------

BzTree lambda_to_bz(const Term& t) {
  const Term* index = nullptr;
  const std::vector<const Term*> chain = wrapper_chain(t, index);
  // Each wrapper adds a left leaf under the current designated node; an
  // application also hangs its function's tree to the right of that node.
  // Built bottom-up: outermost wrapper first.
  BzTree below;
  BzTree pending_right;
  for (const Term* w : chain) {
    below = BzTree::node(std::move(below), std::move(pending_right));
    pending_right = w->is_app() ? lambda_to_bz(w->fun()) : BzTree();
  }
  BzTree t_out = BzTree::node(std::move(below), std::move(pending_right));
  for (std::uint32_t i = 0; i < index->index(); ++i) t_out = BzTree::node({}, std::move(t_out));
  return t_out;
}

Term bz_to_lambda(const BzTree& z) {
  if (z.empty()) throw MalformedInput("empty zigzag-free tree");
  const BzTree* cur = &z;
  std::uint32_t k = 0;
  while (cur->left().empty() && !cur->right().empty()) {
    cur = &cur->right();
    ++k;
  }
  Term t = Term::index(k);
  while (!cur->left().empty()) {
    const BzTree& right = cur->right();
    cur = &cur->left();
    t = right.empty() ? Term::abs(std::move(t)) : Term::app(bz_to_lambda(right), std::move(t));
  }
  if (!cur->right().empty())
    throw MalformedInput("zigzag: left child with only a right child");
  return t;
}

// ---- Motzkin ↔ neutral ------------------------------------------------------

Term motzkin_to_neutral(const MotzkinTree& m) {
  std::uint32_t unary = 0;
  const MotzkinTree* cur = &m;
  while (cur->kind() == MotzkinKind::Unary) {
    cur = &cur->child();
    ++unary;
  }
  if (cur->kind() == MotzkinKind::Leaf) return Term::index(unary);
  Term arg = motzkin_to_neutral(cur->right());
  for (std::uint32_t i = 0; i < unary; ++i) arg = Term::abs(std::move(arg));
  return Term::app(motzkin_to_neutral(cur->left()), std::move(arg));
}

MotzkinTree neutral_to_motzkin(const Term& t) {
  if (!classify(t).is_neutral) throw NotNeutral(render_term(t) + " is not a neutral term");
  if (t.is_index()) {
    MotzkinTree m = MotzkinTree::leaf();
    for (std::uint32_t i = 0; i < t.index(); ++i) m = MotzkinTree::unary(std::move(m));
    return m;
  }
  const Term* arg = &t.arg();
  std::uint32_t lambdas = 0;
  while (arg->is_abs()) {
    arg = &arg->body();
    ++lambdas;
  }
  MotzkinTree m = MotzkinTree::binary(neutral_to_motzkin(t.fun()), neutral_to_motzkin(*arg));
  for (std::uint32_t i = 0; i < lambdas; ++i) m = MotzkinTree::unary(std::move(m));
  return m;
}

// ---- neutral hnf ↔ plain ------------------------------------------------------

namespace {

struct Spine {
  Term head;
  std::vector<Term> args;  // leftmost argument first
};

Spine application_spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  return {*cur, std::vector<Term>(args.rbegin(), args.rend())};
}

Term apply_all(Term head, const std::vector<Term>& args, std::size_t from) {
  for (std::size_t i = from; i < args.size(); ++i) head = Term::app(std::move(head), args[i]);
  return head;
}

}  // namespace

Term khnf_shift(const Term& p) {
  const Spine s = application_spine(p);
  if (!s.head.is_index())
    throw MalformedInput(render_term(p) + " is not a neutral head normal form");
  if (s.head.index() > 0) return apply_all(Term::index(s.head.index() - 1), s.args, 0);
  if (s.args.empty()) throw NoImage("the index 0 has no image under the shift");
  return apply_all(Term::abs(s.args.front()), s.args, 1);
}

Term khnf_unshift(const Term& q) {
  const Spine s = application_spine(q);
  if (s.head.is_index()) return apply_all(Term::index(s.head.index() + 1), s.args, 0);
  std::vector<Term> args;
  args.reserve(s.args.size() + 1);
  args.push_back(s.head.body());
  args.insert(args.end(), s.args.begin(), s.args.end());
  return apply_all(Term::index(0), args, 0);
}

}  // namespace lamcount
