// Abstract syntax of public announcement logic with relativized common
// knowledge.
//
// A Formula is an immutable tree with shared subterms; copying is cheap and
// values are safe to share between threads.  Node kinds:
//
//   atom       p                     name() is the atom
//   top        top
//   neg        ~F                    lhs()
//   conj       F & G                 lhs(), rhs()
//   disj       F | G
//   imp        F -> G
//   iff        F <-> G
//   knows      K a F                 name() is the agent, lhs()
//   everyone   E F                   lhs()
//   announce   [!F] G                lhs() is announced, rhs() is evaluated after
//   rck        C(F | G)              lhs() is the guard, rhs() the body
//   ck         C F                   lhs(); same meaning as C(top | F)
//
// ck is kept as written so reports echo the input; operator== identifies
// C F with C(top | F).  Use identical() for strict tree equality.

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pal {

enum class Op { atom, top, neg, conj, disj, imp, iff, knows, everyone, announce, rck, ck };

class Formula {
 public:
  struct Node;

  Formula() = delete;

  Op op() const;
  const std::string& name() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_binary() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool identical(const Formula& a, const Formula& b);

  // Identity of the shared node, usable as a memo key.
  const Node* node() const { return node_.get(); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  friend Formula make_node(Op, std::string, std::vector<Formula>);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
};

inline Formula make_node(Op op, std::string name, std::vector<Formula> kids) {
  return Formula(std::make_shared<const Formula::Node>(Formula::Node{op, std::move(name), std::move(kids)}));
}

inline Formula atom(std::string name) { return make_node(Op::atom, std::move(name), {}); }
inline Formula top() { return make_node(Op::top, {}, {}); }
inline Formula neg(const Formula& f) { return make_node(Op::neg, {}, {f}); }
inline Formula conj(const Formula& f, const Formula& g) { return make_node(Op::conj, {}, {f, g}); }
inline Formula disj(const Formula& f, const Formula& g) { return make_node(Op::disj, {}, {f, g}); }
inline Formula imp(const Formula& f, const Formula& g) { return make_node(Op::imp, {}, {f, g}); }
inline Formula iff(const Formula& f, const Formula& g) { return make_node(Op::iff, {}, {f, g}); }
inline Formula knows(std::string agent, const Formula& f) { return make_node(Op::knows, std::move(agent), {f}); }
inline Formula everyone(const Formula& f) { return make_node(Op::everyone, {}, {f}); }
inline Formula announce(const Formula& announced, const Formula& after) {
  return make_node(Op::announce, {}, {announced, after});
}
inline Formula rck(const Formula& guard, const Formula& body) { return make_node(Op::rck, {}, {guard, body}); }
inline Formula ck(const Formula& f) { return make_node(Op::ck, {}, {f}); }

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->kids[0]; }
inline const Formula& Formula::rhs() const { return node_->kids[1]; }

inline bool Formula::is_binary() const {
  switch (op()) {
    case Op::conj: case Op::disj: case Op::imp: case Op::iff: case Op::announce: case Op::rck:
      return true;
    default:
      return false;
  }
}

inline bool identical(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.name() != b.name()) return false;
  switch (a.op()) {
    case Op::atom: case Op::top:
      return true;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck:
      return identical(a.lhs(), b.lhs());
    default:
      return identical(a.lhs(), b.lhs()) && identical(a.rhs(), b.rhs());
  }
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  // C F == C(top | F)
  if (a.op() == Op::ck && b.op() == Op::rck)
    return b.lhs().op() == Op::top && a.lhs() == b.rhs();
  if (a.op() == Op::rck && b.op() == Op::ck) return b == a;
  if (a.op() != b.op() || a.name() != b.name()) return false;
  switch (a.op()) {
    case Op::atom: case Op::top:
      return true;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Syntactic queries

namespace detail {

template <typename Fn>
void visit(const Formula& f, Fn&& fn) {
  fn(f);
  switch (f.op()) {
    case Op::atom: case Op::top:
      return;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck:
      visit(f.lhs(), fn);
      return;
    default:
      visit(f.lhs(), fn);
      visit(f.rhs(), fn);
  }
}

}  // namespace detail

inline std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  detail::visit(f, [&](const Formula& g) {
    if (g.op() == Op::atom) out.insert(g.name());
  });
  return out;
}

inline std::set<std::string> agents_of(const Formula& f) {
  std::set<std::string> out;
  detail::visit(f, [&](const Formula& g) {
    if (g.op() == Op::knows) out.insert(g.name());
  });
  return out;
}

// True if the formula contains E or C, which quantify over the whole group.
inline bool uses_group(const Formula& f) {
  bool found = false;
  detail::visit(f, [&](const Formula& g) {
    if (g.op() == Op::everyone || g.op() == Op::rck || g.op() == Op::ck) found = true;
  });
  return found;
}

inline std::size_t node_count(const Formula& f) {
  std::size_t n = 0;
  detail::visit(f, [&](const Formula&) { ++n; });
  return n;
}

// Nesting depth of K, E and C operators.
inline int modal_depth(const Formula& f) {
  switch (f.op()) {
    case Op::atom: case Op::top:
      return 0;
    case Op::neg:
      return modal_depth(f.lhs());
    case Op::knows: case Op::everyone: case Op::ck:
      return 1 + modal_depth(f.lhs());
    case Op::rck:
      return 1 + std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    default:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  }
}

// Nesting depth of [!F] operators.
inline int announcement_depth(const Formula& f) {
  switch (f.op()) {
    case Op::atom: case Op::top:
      return 0;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck:
      return announcement_depth(f.lhs());
    case Op::announce:
      return 1 + std::max(announcement_depth(f.lhs()), announcement_depth(f.rhs()));
    default:
      return std::max(announcement_depth(f.lhs()), announcement_depth(f.rhs()));
  }
}

// Depth of the syntax tree; a lone atom has depth 0.
inline int tree_depth(const Formula& f) {
  switch (f.op()) {
    case Op::atom: case Op::top:
      return 0;
    case Op::neg: case Op::knows: case Op::everyone: case Op::ck:
      return 1 + tree_depth(f.lhs());
    default:
      return 1 + std::max(tree_depth(f.lhs()), tree_depth(f.rhs()));
  }
}

// Replaces every occurrence of atom `target` by `replacement`.  PAL has no
// binders, so the replacement is inserted verbatim.
inline Formula substitute(const Formula& f, const std::string& target, const Formula& replacement) {
  switch (f.op()) {
    case Op::atom:
      return f.name() == target ? replacement : f;
    case Op::top:
      return f;
    case Op::neg:
      return neg(substitute(f.lhs(), target, replacement));
    case Op::knows:
      return knows(f.name(), substitute(f.lhs(), target, replacement));
    case Op::everyone:
      return everyone(substitute(f.lhs(), target, replacement));
    case Op::ck:
      return ck(substitute(f.lhs(), target, replacement));
    default:
      return make_node(f.op(), {},
                       {substitute(f.lhs(), target, replacement), substitute(f.rhs(), target, replacement)});
  }
}

}  // namespace pal
