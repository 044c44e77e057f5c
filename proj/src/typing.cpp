#include "lamcount/typing.hpp"

#include <cassert>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lamcount/enumeration.hpp"
#include "lamcount/error.hpp"

namespace lamcount {

struct SimpleType::Node {
  std::uint32_t id;
  std::optional<SimpleType> domain;
  std::optional<SimpleType> codomain;
};

SimpleType SimpleType::var(std::uint32_t id) {
  return SimpleType(std::make_shared<const Node>(Node{id, std::nullopt, std::nullopt}));
}

SimpleType SimpleType::arrow(SimpleType domain, SimpleType codomain) {
  return SimpleType(
      std::make_shared<const Node>(Node{0, std::move(domain), std::move(codomain)}));
}

bool SimpleType::is_var() const noexcept { return !node_->domain.has_value(); }

std::uint32_t SimpleType::var_id() const noexcept {
  assert(is_var());
  return node_->id;
}

const SimpleType& SimpleType::domain() const noexcept { return *node_->domain; }
const SimpleType& SimpleType::codomain() const noexcept { return *node_->codomain; }

bool operator==(const SimpleType& a, const SimpleType& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var_id() == b.var_id();
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

namespace {

void render_into(const SimpleType& t, std::string& out, bool parenthesize_arrow) {
  if (t.is_var()) {
    const std::uint32_t id = t.var_id();
    if (id < 26)
      out += static_cast<char>('a' + id);
    else
      out += "t" + std::to_string(id);
    return;
  }
  if (parenthesize_arrow) out += '(';
  render_into(t.domain(), out, true);
  out += " -> ";
  render_into(t.codomain(), out, false);
  if (parenthesize_arrow) out += ')';
}

// Type graph with union-find over variables. Slot i is either an unbound
// variable (parent == i, not an arrow), a bound variable (parent != i), or an
// arrow with two child slots.
class Unifier {
 public:
  using Slot = std::uint32_t;

  Slot fresh() {
    slots_.push_back({static_cast<Slot>(slots_.size()), false, 0, 0});
    return slots_.back().parent;
  }

  Slot arrow(Slot dom, Slot cod) {
    const Slot s = fresh();
    slots_[s].is_arrow = true;
    slots_[s].dom = dom;
    slots_[s].cod = cod;
    return s;
  }

  Slot find(Slot s) {
    while (slots_[s].parent != s) {
      slots_[s].parent = slots_[slots_[s].parent].parent;
      s = slots_[s].parent;
    }
    return s;
  }

  /// Worklist unification without occurs check; infinite types show up as
  /// cycles and are rejected by acyclic().
  void unify(Slot a, Slot b) {
    std::vector<std::pair<Slot, Slot>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (!slots_[x].is_arrow) {
        slots_[x].parent = y;
      } else if (!slots_[y].is_arrow) {
        slots_[y].parent = x;
      } else {
        slots_[x].parent = y;
        work.emplace_back(slots_[x].dom, slots_[y].dom);
        work.emplace_back(slots_[x].cod, slots_[y].cod);
      }
    }
  }

  /// True iff the solved graph has no cycle through arrow children.
  bool acyclic() {
    enum : std::uint8_t { kWhite, kGrey, kBlack };
    std::vector<std::uint8_t> mark(slots_.size(), kWhite);
    std::vector<std::pair<Slot, bool>> stack;  // (slot, children pushed)
    for (Slot root = 0; root < slots_.size(); ++root) {
      if (mark[find(root)] != kWhite) continue;
      stack.emplace_back(find(root), false);
      while (!stack.empty()) {
        auto& [s, expanded] = stack.back();
        if (expanded || mark[s] != kWhite) {
          if (expanded) mark[s] = kBlack;
          stack.pop_back();
          continue;
        }
        expanded = true;
        mark[s] = kGrey;
        if (!slots_[s].is_arrow) continue;
        const Slot s_copy = s;
        for (Slot c : {slots_[s_copy].dom, slots_[s_copy].cod}) {
          const Slot r = find(c);
          if (mark[r] == kGrey) return false;
          if (mark[r] == kWhite) stack.emplace_back(r, false);
        }
      }
    }
    return true;
  }

  /// Resolved type with variables renumbered by first occurrence.
  SimpleType resolve(Slot s, std::unordered_map<Slot, std::uint32_t>& names) {
    s = find(s);
    if (!slots_[s].is_arrow) {
      auto [it, inserted] = names.try_emplace(s, static_cast<std::uint32_t>(names.size()));
      return SimpleType::var(it->second);
    }
    SimpleType dom = resolve(slots_[s].dom, names);
    SimpleType cod = resolve(slots_[s].cod, names);
    return SimpleType::arrow(std::move(dom), std::move(cod));
  }

 private:
  struct Entry {
    Slot parent;
    bool is_arrow;
    Slot dom;
    Slot cod;
  };

  std::vector<Entry> slots_;
};

// Constraint generation down the term; the context holds one slot per binder,
// innermost last, so index k reads context[size - 1 - k].
bool generate(const Term& t, std::vector<Unifier::Slot>& context, Unifier& u,
              Unifier::Slot& out) {
  switch (t.kind()) {
    case TermKind::Index:
      out = context[context.size() - 1 - t.index()];
      return true;
    case TermKind::Abs: {
      const Unifier::Slot param = u.fresh();
      context.push_back(param);
      Unifier::Slot body = 0;
      const bool ok = generate(t.body(), context, u, body);
      context.pop_back();
      if (!ok) return false;
      out = u.arrow(param, body);
      return true;
    }
    case TermKind::App: {
      Unifier::Slot fun = 0;
      Unifier::Slot arg = 0;
      if (!generate(t.fun(), context, u, fun) || !generate(t.arg(), context, u, arg))
        return false;
      const Unifier::Slot result = u.fresh();
      u.unify(fun, u.arrow(arg, result));
      out = result;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string render_type(const SimpleType& t) {
  std::string out;
  render_into(t, out, false);
  return out;
}

std::optional<SimpleType> infer(const Term& t) {
  if (max_free_index(t) != 0)
    throw NotClosed(render_term(t) + " has free indices; only closed terms are typed");
  Unifier u;
  std::vector<Unifier::Slot> context;
  Unifier::Slot root = 0;
  if (!generate(t, context, u, root) || !u.acyclic()) return std::nullopt;
  std::unordered_map<Unifier::Slot, std::uint32_t> names;
  return u.resolve(root, names);
}

TypableCount count_typable(std::uint64_t n) {
  std::uint64_t typable = 0;
  std::uint64_t closed = 0;
  Enumerator e;
  e.for_each_term(n, FreeBound::at_most(0), [&](const Term& t) {
    ++closed;
    if (infer(t)) ++typable;
  });
  return {BigInt(typable), BigInt(closed)};
}

}  // namespace lamcount
