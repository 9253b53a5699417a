// Three wise men, each with a white or black spot on the forehead; at least
// one spot is white.  a and then b say they don't know their own colour,
// after which c knows their spot is white.
//
// Worlds are named by the colours of a, b and c in that order, e.g. "wbb"
// has a white and b, c black.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pal/checker.hpp"
#include "pal/direct.hpp"
#include "pal/formula.hpp"
#include "pal/model.hpp"
#include "pal/sse.hpp"
#include "pal/syntax.hpp"

namespace pal::wisemen {

inline const std::vector<std::string>& agents() {
  static const std::vector<std::string> v{"a", "b", "c"};
  return v;
}

inline std::string spot(const std::string& agent) { return "ws" + agent; }

namespace detail {

// x can see everyone's spot but their own.
inline EpistemicModel spot_model(bool include_all_black) {
  std::vector<std::string> worlds;
  for (char a : {'w', 'b'})
    for (char b : {'w', 'b'})
      for (char c : {'w', 'b'}) {
        std::string w{a, b, c};
        if (w != "bbb" || include_all_black) worlds.push_back(w);
      }
  ModelBuilder mb(worlds);
  for (std::size_t x = 0; x < 3; ++x) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& u : worlds)
      for (const auto& v : worlds) {
        bool same = true;
        for (std::size_t y = 0; y < 3; ++y)
          if (y != x && u[y] != v[y]) same = false;
        if (same) pairs.emplace_back(u, v);
      }
    mb.agent(agents()[x], pairs);
  }
  for (std::size_t x = 0; x < 3; ++x) {
    std::vector<std::string> white;
    for (const auto& w : worlds)
      if (w[x] == 'w') white.push_back(w);
    mb.atom(spot(agents()[x]), white);
  }
  return mb.build();
}

}  // namespace detail

// The seven colourings with at least one white spot.
inline EpistemicModel canonical_model() { return detail::spot_model(false); }

// All eight colourings; the at-least-one-white premise fails at "bbb".
inline EpistemicModel model_with_all_black() { return detail::spot_model(true); }

// Common knowledge that some spot is white, and for every x != y that y
// would know if x's spot were black.
inline std::vector<Formula> premises() {
  std::vector<Formula> out{ck(disj(disj(atom("wsa"), atom("wsb")), atom("wsc")))};
  for (const auto& x : agents())
    for (const auto& y : agents())
      if (x != y) out.push_back(ck(imp(neg(atom(spot(x))), knows(y, neg(atom(spot(x)))))));
  return out;
}

// The optional companion premises: y would know if x's spot were white.
inline std::vector<Formula> footnote_premises() {
  std::vector<Formula> out;
  for (const auto& x : agents())
    for (const auto& y : agents())
      if (x != y) out.push_back(ck(imp(atom(spot(x)), knows(y, atom(spot(x))))));
  return out;
}

// "x does not know the colour of their spot"
inline Formula ignorance(const std::string& x) {
  return neg(disj(knows(x, atom(spot(x))), knows(x, neg(atom(spot(x))))));
}

inline Formula goal() { return announce(ignorance("a"), announce(ignorance("b"), knows("c", atom("wsc")))); }

struct Report {
  bool premises_ok = false;
  bool goal_ok = false;       // every world, direct semantics
  bool goal_sse_ok = false;   // every world, domain semantics with all worlds live
  std::vector<std::size_t> cascade;
  std::vector<std::string> worlds_after_first;
  std::vector<std::string> worlds_after;
  bool negative_control_ok = false;  // goal fails somewhere once "bbb" is added
  std::string negative_control_world;
  bool footnote = false;
  std::optional<Verdict> consequence;  // premises => goal over a tiny scope

  bool ok() const {
    return premises_ok && goal_ok && goal_sse_ok && negative_control_ok && (!consequence || consequence->valid());
  }
};

struct SolveOptions {
  bool footnote_axioms = false;
  bool consequence_check = true;
  std::size_t consequence_worlds = 2;
};

inline Report solve(const SolveOptions& opt = {}) {
  Report r;
  r.footnote = opt.footnote_axioms;
  const EpistemicModel m = canonical_model();
  std::vector<Formula> prem = premises();
  if (opt.footnote_axioms)
    for (auto& f : footnote_premises()) prem.push_back(f);

  r.premises_ok = true;
  for (const auto& p : prem) r.premises_ok = r.premises_ok && extension(m, p) == m.all_worlds();
  const Formula g = goal();
  r.goal_ok = extension(m, g) == m.all_worlds();
  r.goal_sse_ok = tvalid_naive(m, g);

  const EpistemicModel m1 = announce(m, ignorance("a"));
  const EpistemicModel m2 = announce(m1, ignorance("b"));
  r.cascade = {m.world_count(), m1.world_count(), m2.world_count()};
  r.worlds_after_first = m1.worlds();
  r.worlds_after = m2.worlds();

  const EpistemicModel control = model_with_all_black();
  const WorldSet fails = control.all_worlds() - extension(control, g);
  r.negative_control_ok = !fails.empty();
  if (!fails.empty()) r.negative_control_world = control.worlds()[fails.first()];

  if (opt.consequence_check) {
    Scope s;
    s.max_worlds = opt.consequence_worlds;
    s.agents = agents();
    s.atoms = {"wsa", "wsb", "wsc"};
    s.frame = Frame::s5;
    r.consequence = check_rule(prem, g, s);
  }
  return r;
}

inline json to_json(const Report& r) {
  json out = json::object();
  out["premises_ok"] = r.premises_ok;
  out["goal_ok"] = r.goal_ok;
  out["goal_sse_ok"] = r.goal_sse_ok;
  out["cascade"] = r.cascade;
  out["worlds_after_first"] = r.worlds_after_first;
  out["worlds_after"] = r.worlds_after;
  out["negative_control_ok"] = r.negative_control_ok;
  out["negative_control_world"] = r.negative_control_world;
  out["footnote_axioms"] = r.footnote;
  if (r.consequence) out["consequence"] = pal::to_json(*r.consequence);
  return out;
}

}  // namespace pal::wisemen
