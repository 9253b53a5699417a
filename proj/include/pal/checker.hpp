// Bounded validity and rule checking by model enumeration.
//
// Models are visited by world count (1..max_worlds) and then by enumeration
// index, so "first countermodel" is well defined and does not depend on the
// number of worker threads.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pal/direct.hpp"
#include "pal/enumerate.hpp"
#include "pal/formula.hpp"
#include "pal/model.hpp"
#include "pal/model_json.hpp"
#include "pal/sse.hpp"
#include "pal/syntax.hpp"

namespace pal {

enum class Semantics { direct, sse };

inline const char* to_string(Semantics s) { return s == Semantics::direct ? "direct" : "sse"; }

// What "f is valid in m" means.
//   truth   f true at every world, direct semantics
//   vld     f true at every (domain, world in domain), domain semantics
//   tvalid  f true at every world with the domain fixed to all worlds
enum class Validity { truth, vld, tvalid };

inline const char* to_string(Validity v) {
  switch (v) {
    case Validity::truth:
      return "truth";
    case Validity::vld:
      return "vld";
    case Validity::tvalid:
      return "tvalid";
  }
  return "?";
}

inline Validity validity_for(Semantics s) { return s == Semantics::direct ? Validity::truth : Validity::vld; }

struct Scope {
  std::size_t max_worlds = 2;
  std::vector<std::string> agents{"a", "b"};
  std::vector<std::string> atoms{"p", "q"};
  Frame frame = Frame::s5;
  Semantics semantics = Semantics::direct;
  std::optional<std::uint64_t> model_budget;
  unsigned workers = 1;
};

struct Countermodel {
  EpistemicModel model;
  std::optional<EvaluationDomain> domain;  // set in the domain semantics
  std::size_t world;
  std::uint64_t index;  // enumeration index among models with this many worlds
};

struct Verdict {
  std::uint64_t models_checked = 0;
  bool exhaustive = true;  // false if the budget stopped the search
  std::optional<Countermodel> countermodel;

  bool valid() const { return !countermodel; }
};

// Where f fails in m under the given validity notion, if anywhere.
struct Failure {
  std::optional<EvaluationDomain> domain;
  std::size_t world;
};

inline std::optional<Failure> find_failure(const EpistemicModel& m, const Formula& f, Validity v) {
  switch (v) {
    case Validity::truth: {
      const WorldSet bad = m.all_worlds() - detail::direct_extension(m, f);
      if (bad.empty()) return std::nullopt;
      return Failure{std::nullopt, bad.first()};
    }
    case Validity::vld: {
      auto w = find_sse_failure(m, f);
      if (!w) return std::nullopt;
      return Failure{w->domain, w->world};
    }
    case Validity::tvalid: {
      const WorldSet all = m.all_worlds();
      const WorldSet bad = all - detail::SseEvaluator(m).extension(all, f);
      if (bad.empty()) return std::nullopt;
      return Failure{all, bad.first()};
    }
  }
  return std::nullopt;
}

inline bool valid_in(const EpistemicModel& m, const Formula& f, Validity v) { return !find_failure(m, f, v); }

// Re-evaluates a reported failure from scratch through the clause-literal
// evaluator.  Domain failures are checked both on the restricted model and
// by a fresh domain evaluation.
inline bool refalsifies(const EpistemicModel& m, const Formula& f, const Failure& fail) {
  if (!fail.domain) return !eval_literal(m, fail.world, f);
  const WorldSet d = *fail.domain;
  if (!d.contains(fail.world)) return false;
  if (eval_sse(m, d, fail.world, f)) return false;
  const std::size_t local = WorldSet(d.bits() & ((std::uint64_t{1} << fail.world) - 1)).size();
  return !eval_literal(restrict(m, d), local, f);
}

inline void require_in_scope(const Formula& f, const Scope& s) {
  for (const auto& a : atoms_of(f))
    if (std::find(s.atoms.begin(), s.atoms.end(), a) == s.atoms.end())
      throw ScopeError("atom '" + a + "' is not in the scope's atom list");
  for (const auto& a : agents_of(f))
    if (std::find(s.agents.begin(), s.agents.end(), a) == s.agents.end())
      throw ScopeError("agent '" + a + "' is not in the scope's agent list");
}

inline void require_scope(const Scope& s) {
  if (s.max_worlds < 1) throw ScopeError("max_worlds must be at least 1");
  if (s.agents.empty()) throw ScopeError("the scope needs at least one agent");
}

namespace detail {

// Probe returns the failure for one model, or nothing if the model is fine.
using Probe = std::function<std::optional<Failure>(const EpistemicModel&)>;

struct Hit {
  std::uint64_t index;
  Failure failure;
};

// Smallest index in [0, count) whose model the probe rejects.  Workers take
// interleaved indices; each stops once it passes the best hit seen so far.
inline std::optional<Hit> first_hit(const ModelSpace& space, std::uint64_t count, const Probe& probe,
                                    unsigned workers) {
  if (workers <= 1 || count < 64) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (auto f = probe(space.at(i))) return Hit{i, *f};
    return std::nullopt;
  }
  std::vector<std::optional<Hit>> found(workers);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < count && i < best.load(std::memory_order_relaxed); i += workers) {
        if (auto f = probe(space.at(i))) {
          found[t] = Hit{i, *f};
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::optional<Hit> out;
  for (auto& h : found)
    if (h && (!out || h->index < out->index)) out = h;
  return out;
}

inline Verdict search(const Scope& s, const Probe& probe, const std::function<bool(const EpistemicModel&, const Failure&)>& recheck) {
  require_scope(s);
  Verdict v;
  std::uint64_t left = s.model_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  for (std::size_t n = 1; n <= s.max_worlds; ++n) {
    const ModelSpace space(n, s.agents, s.atoms, s.frame);
    const std::uint64_t count = std::min(space.size(), left);
    if (auto hit = first_hit(space, count, probe, s.workers)) {
      EpistemicModel m = space.at(hit->index);
      if (!recheck(m, hit->failure))
        throw std::logic_error("countermodel did not survive re-evaluation");
      v.models_checked += hit->index + 1;
      v.countermodel = Countermodel{std::move(m), hit->failure.domain, hit->failure.world, hit->index};
      return v;
    }
    v.models_checked += count;
    left -= count;
    if (count < space.size()) {
      v.exhaustive = false;
      return v;
    }
  }
  return v;
}

}  // namespace detail

// Bounded validity of f, with validity read as the scope's semantics
// dictates unless overridden.
inline Verdict check_valid(const Formula& f, const Scope& s, std::optional<Validity> how = std::nullopt) {
  require_in_scope(f, s);
  const Validity v = how.value_or(validity_for(s.semantics));
  return detail::search(
      s, [&](const EpistemicModel& m) { return find_failure(m, f, v); },
      [&](const EpistemicModel& m, const Failure& fail) { return refalsifies(m, f, fail); });
}

// Per-model validity preservation: in every model of the scope where all
// premises are valid, the conclusion is valid too.
inline Verdict check_rule(const std::vector<Formula>& premises, const Formula& conclusion, const Scope& s,
                          std::optional<Validity> how = std::nullopt) {
  for (const auto& p : premises) require_in_scope(p, s);
  require_in_scope(conclusion, s);
  const Validity v = how.value_or(validity_for(s.semantics));
  auto probe = [&](const EpistemicModel& m) -> std::optional<Failure> {
    for (const auto& p : premises)
      if (!valid_in(m, p, v)) return std::nullopt;
    return find_failure(m, conclusion, v);
  };
  auto recheck = [&](const EpistemicModel& m, const Failure& fail) {
    for (const auto& p : premises)
      if (!valid_in(m, p, v)) return false;
    return refalsifies(m, conclusion, fail);
  };
  return detail::search(s, probe, recheck);
}

inline json to_json(const Verdict& v) {
  json out = json::object();
  out["verdict"] = v.valid() ? "valid" : "countermodel";
  out["models_checked"] = v.models_checked;
  out["exhaustive"] = v.exhaustive;
  if (v.countermodel) {
    const auto& c = *v.countermodel;
    out["countermodel"] = to_json(c.model);
    out["world"] = c.model.worlds()[c.world];
    if (c.domain) out["domain"] = c.model.names_of(*c.domain);
    out["index"] = c.index;
  }
  return out;
}

}  // namespace pal
