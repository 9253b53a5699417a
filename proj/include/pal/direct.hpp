// Direct Kripke semantics.  Announcements transform the model: [!F] G is
// evaluated by building the submodel on F's extension and evaluating G
// there.

#pragma once

#include <cstddef>
#include <deque>
#include <string>

#include "pal/formula.hpp"
#include "pal/model.hpp"
#include "pal/syntax.hpp"

namespace pal {

// Throws UnknownSymbol if f mentions an atom or agent m does not declare.
inline void require_signature(const EpistemicModel& m, const Formula& f) {
  for (const auto& a : atoms_of(f))
    if (!m.atom_index(a)) throw UnknownSymbol("atom", a);
  for (const auto& a : agents_of(f))
    if (!m.agent_index(a)) throw UnknownSymbol("agent", a);
}

namespace detail {

inline WorldSet boxed(const Relation& r, WorldSet target, std::size_t n) {
  WorldSet out;
  for (std::size_t w = 0; w < n; ++w)
    if (r.successors(w).subset_of(target)) out = out.with(w);
  return out;
}

inline WorldSet rck_extension(const Relation& group, WorldSet guard, WorldSet body, std::size_t n) {
  const Relation path = tc(restrict_targets(group, guard));
  return boxed(path, body, n);
}

inline WorldSet direct_extension(const EpistemicModel& m, const Formula& f) {
  const WorldSet all = m.all_worlds();
  const std::size_t n = m.world_count();
  switch (f.op()) {
    case Op::atom:
      return m.valuation(f.name());
    case Op::top:
      return all;
    case Op::neg:
      return all - direct_extension(m, f.lhs());
    case Op::conj:
      return direct_extension(m, f.lhs()) & direct_extension(m, f.rhs());
    case Op::disj:
      return direct_extension(m, f.lhs()) | direct_extension(m, f.rhs());
    case Op::imp:
      return (all - direct_extension(m, f.lhs())) | direct_extension(m, f.rhs());
    case Op::iff: {
      const WorldSet a = direct_extension(m, f.lhs());
      const WorldSet b = direct_extension(m, f.rhs());
      return all - WorldSet(a.bits() ^ b.bits());
    }
    case Op::knows:
      return boxed(m.relation(f.name()), direct_extension(m, f.lhs()), n);
    case Op::everyone:
      return boxed(evr(m), direct_extension(m, f.lhs()), n);
    case Op::announce: {
      const WorldSet announced = direct_extension(m, f.lhs());
      if (announced.empty()) return all;
      const WorldSet after = direct_extension(restrict(m, announced), f.rhs());
      return (all - announced) | deposit(after, announced);
    }
    case Op::rck:
      return rck_extension(evr(m), direct_extension(m, f.lhs()), direct_extension(m, f.rhs()), n);
    case Op::ck:
      return rck_extension(evr(m), all, direct_extension(m, f.lhs()), n);
  }
  return {};
}

}  // namespace detail

// The worlds of m where f is true.
inline WorldSet extension(const EpistemicModel& m, const Formula& f) {
  require_signature(m, f);
  return detail::direct_extension(m, f);
}

inline bool eval_direct(const EpistemicModel& m, std::size_t world, const Formula& f) {
  if (world >= m.world_count()) throw ModelError("world index outside the model");
  return extension(m, f).contains(world);
}

inline bool eval_direct(const EpistemicModel& m, const std::string& world, const Formula& f) {
  auto w = m.world_index(world);
  if (!w) throw ModelError("unknown world '" + world + "'");
  return eval_direct(m, *w, f);
}

// The model after f is publicly announced.  Announcing a formula that is
// false everywhere is an error, since a model keeps at least one world.
inline EpistemicModel announce(const EpistemicModel& m, const Formula& f) {
  const WorldSet keep = extension(m, f);
  if (keep.empty()) throw ModelError("announced formula '" + render(f) + "' is false at every world");
  return restrict(m, keep);
}

// Truth at a single world, transcribed clause by clause: knowledge scans
// accessible worlds, announcement builds the updated model, relativized
// common knowledge walks paths breadth-first.  Shares no code with
// extension() beyond the model accessors and restrict(), so the two can be
// checked against each other.
inline bool eval_literal(const EpistemicModel& m, std::size_t w, const Formula& f) {
  const std::size_t n = m.world_count();
  auto for_all_successors = [&](auto&& related, const Formula& body) {
    for (std::size_t v = 0; v < n; ++v)
      if (related(v) && !eval_literal(m, v, body)) return false;
    return true;
  };
  switch (f.op()) {
    case Op::atom:
      return m.valuation(f.name()).contains(w);
    case Op::top:
      return true;
    case Op::neg:
      return !eval_literal(m, w, f.lhs());
    case Op::conj:
      return eval_literal(m, w, f.lhs()) && eval_literal(m, w, f.rhs());
    case Op::disj:
      return eval_literal(m, w, f.lhs()) || eval_literal(m, w, f.rhs());
    case Op::imp:
      return !eval_literal(m, w, f.lhs()) || eval_literal(m, w, f.rhs());
    case Op::iff:
      return eval_literal(m, w, f.lhs()) == eval_literal(m, w, f.rhs());
    case Op::knows: {
      const Relation& r = m.relation(f.name());
      return for_all_successors([&](std::size_t v) { return r.test(w, v); }, f.lhs());
    }
    case Op::everyone:
      return for_all_successors(
          [&](std::size_t v) {
            for (const auto& r : m.relations())
              if (r.test(w, v)) return true;
            return false;
          },
          f.lhs());
    case Op::announce: {
      if (!eval_literal(m, w, f.lhs())) return true;
      std::size_t new_w = 0;
      WorldSet keep;
      for (std::size_t v = 0; v < n; ++v) {
        if (!eval_literal(m, v, f.lhs())) continue;
        if (v == w) new_w = keep.size();
        keep = keep.with(v);
      }
      return eval_literal(restrict(m, keep), new_w, f.rhs());
    }
    case Op::rck:
    case Op::ck: {
      const bool relativized = f.op() == Op::rck;
      const Formula& body = relativized ? f.rhs() : f.lhs();
      std::vector<bool> guard(n, true);
      if (relativized)
        for (std::size_t v = 0; v < n; ++v) guard[v] = eval_literal(m, v, f.lhs());
      // Worlds reachable in one or more group steps that land on guard worlds.
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> queue{w};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
          if (seen[v] || !guard[v]) continue;
          bool step = false;
          for (const auto& r : m.relations()) step = step || r.test(u, v);
          if (!step) continue;
          seen[v] = true;
          queue.push_back(v);
        }
      }
      for (std::size_t v = 0; v < n; ++v)
        if (seen[v] && !eval_literal(m, v, body)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace pal
