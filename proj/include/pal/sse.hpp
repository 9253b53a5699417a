// Domain-passing semantics.  Every formula denotes a predicate of an
// evaluation domain D and a world; the model itself never changes.
//
//   atom p      D w and w in V(p)
//   top         true
//   connectives pointwise over the same (D, w)
//   K_i F       for all v: D v and w R_i v imply F(D, v)
//   E F         K with the union of all agents' relations
//   [!F] G      not F(D, w), or G(D', w) with D' = {z in D | F(D, z)}
//   C(F | G)    for all v: w tc(EVR ∩ {(u, v) | D v and F(D, v)}) v implies G(D, v)
//   C F         C(top | F)
//
// Validity quantifies over every domain and every world inside it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pal/direct.hpp"
#include "pal/formula.hpp"
#include "pal/model.hpp"

namespace pal {

namespace detail {

// Computes {w in W | F(D, w)} for every world of the model, inside or
// outside D.
class SseEvaluator {
 public:
  explicit SseEvaluator(const EpistemicModel& m) : m_(m), all_(m.all_worlds()), n_(m.world_count()), group_(evr(m)) {}

  WorldSet extension(WorldSet d, const Formula& f) const {
    switch (f.op()) {
      case Op::atom:
        return d & m_.valuation(f.name());
      case Op::top:
        return all_;
      case Op::neg:
        return all_ - extension(d, f.lhs());
      case Op::conj:
        return extension(d, f.lhs()) & extension(d, f.rhs());
      case Op::disj:
        return extension(d, f.lhs()) | extension(d, f.rhs());
      case Op::imp:
        return (all_ - extension(d, f.lhs())) | extension(d, f.rhs());
      case Op::iff: {
        const WorldSet a = extension(d, f.lhs());
        const WorldSet b = extension(d, f.rhs());
        return all_ - WorldSet(a.bits() ^ b.bits());
      }
      case Op::knows:
        return know(m_.relation(f.name()), d, extension(d, f.lhs()));
      case Op::everyone:
        return know(group_, d, extension(d, f.lhs()));
      case Op::announce: {
        const WorldSet announced = extension(d, f.lhs());
        const WorldSet narrowed = d & announced;
        return (all_ - announced) | extension(narrowed, f.rhs());
      }
      case Op::rck:
        return common(d, extension(d, f.lhs()), extension(d, f.rhs()));
      case Op::ck:
        return common(d, all_, extension(d, f.lhs()));
    }
    return {};
  }

 private:
  // {w | every v in D with w R v satisfies the body}
  WorldSet know(const Relation& r, WorldSet d, WorldSet body) const {
    WorldSet out;
    for (std::size_t w = 0; w < n_; ++w)
      if ((r.successors(w) & d).subset_of(body)) out = out.with(w);
    return out;
  }

  WorldSet common(WorldSet d, WorldSet guard, WorldSet body) const {
    const Relation path = tc(restrict_targets(group_, d & guard));
    WorldSet out;
    for (std::size_t w = 0; w < n_; ++w)
      if (path.successors(w).subset_of(body)) out = out.with(w);
    return out;
  }

  const EpistemicModel& m_;
  WorldSet all_;
  std::size_t n_;
  Relation group_;
};

}  // namespace detail

// Worlds w of m (inside d or not) where f holds relative to domain d.
inline WorldSet extension_sse(const EpistemicModel& m, EvaluationDomain d, const Formula& f) {
  require_signature(m, f);
  if (!d.subset_of(m.all_worlds())) throw ModelError("evaluation domain is not a subset of the model");
  return detail::SseEvaluator(m).extension(d, f);
}

inline bool eval_sse(const EpistemicModel& m, EvaluationDomain d, std::size_t world, const Formula& f) {
  if (world >= m.world_count()) throw ModelError("world index outside the model");
  return extension_sse(m, d, f).contains(world);
}

// The first (domain, world) pair, in domain-code then world order, where f
// fails with the world inside the domain.
struct SseWitness {
  EvaluationDomain domain;
  std::size_t world;
};

inline std::optional<SseWitness> find_sse_failure(const EpistemicModel& m, const Formula& f) {
  require_signature(m, f);
  const detail::SseEvaluator ev(m);
  const std::uint64_t domains = std::uint64_t{1} << m.world_count();
  for (std::uint64_t code = 1; code < domains; ++code) {
    const WorldSet d(code);
    const WorldSet bad = d - ev.extension(d, f);
    if (!bad.empty()) return SseWitness{d, bad.first()};
  }
  return std::nullopt;
}

// f holds for every domain d of m and every world in d.  The empty domain
// is vacuous.
inline bool vld_in_model(const EpistemicModel& m, const Formula& f) { return !find_sse_failure(m, f); }

// Validity with the domain fixed to all worlds.  Not preserved by
// announcement necessitation; kept to exhibit that failure.
inline bool tvalid_naive(const EpistemicModel& m, const Formula& f) {
  return extension_sse(m, m.all_worlds(), f) == m.all_worlds();
}

}  // namespace pal
