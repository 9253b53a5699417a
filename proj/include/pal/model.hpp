// Finite multi-agent epistemic models <W, {R_i}, V>.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pal/error.hpp"
#include "pal/relation.hpp"
#include "pal/world_set.hpp"

namespace pal {

class EpistemicModel {
 public:
  // Validates every invariant; throws ModelError.
  EpistemicModel(std::vector<std::string> worlds, std::vector<std::string> agents,
                 std::vector<Relation> relations, std::vector<std::string> atoms,
                 std::vector<WorldSet> valuation)
      : worlds_(std::move(worlds)),
        agents_(std::move(agents)),
        relations_(std::move(relations)),
        atoms_(std::move(atoms)),
        valuation_(std::move(valuation)) {
    if (worlds_.empty()) throw ModelError("a model needs at least one world");
    if (worlds_.size() > kMaxWorlds) throw ModelError("a model may have at most 64 worlds");
    require_unique(worlds_, "world");
    require_unique(agents_, "agent");
    require_unique(atoms_, "atom");
    if (relations_.size() != agents_.size()) throw ModelError("every agent needs exactly one relation");
    for (const auto& r : relations_)
      if (r.universe() != worlds_.size()) throw ModelError("relation universe differs from the world set");
    if (valuation_.size() != atoms_.size()) throw ModelError("every atom needs exactly one valuation");
    for (auto v : valuation_)
      if (!v.subset_of(all_worlds())) throw ModelError("valuation mentions a world outside the model");
  }

  // Skips validation; for callers that derive the parts from a valid model.
  struct Trusted {};
  EpistemicModel(Trusted, std::vector<std::string> worlds, std::vector<std::string> agents,
                 std::vector<Relation> relations, std::vector<std::string> atoms,
                 std::vector<WorldSet> valuation)
      : worlds_(std::move(worlds)),
        agents_(std::move(agents)),
        relations_(std::move(relations)),
        atoms_(std::move(atoms)),
        valuation_(std::move(valuation)) {}

  std::size_t world_count() const { return worlds_.size(); }
  WorldSet all_worlds() const { return WorldSet::full(worlds_.size()); }

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  std::optional<std::size_t> world_index(std::string_view id) const { return index_of(worlds_, id); }
  std::optional<std::size_t> agent_index(std::string_view name) const { return index_of(agents_, name); }
  std::optional<std::size_t> atom_index(std::string_view name) const { return index_of(atoms_, name); }

  const Relation& relation(std::size_t agent) const { return relations_.at(agent); }
  const Relation& relation(std::string_view agent) const {
    auto i = agent_index(agent);
    if (!i) throw UnknownSymbol("agent", std::string(agent));
    return relations_[*i];
  }
  const std::vector<Relation>& relations() const { return relations_; }

  WorldSet valuation(std::size_t atom) const { return valuation_.at(atom); }
  WorldSet valuation(std::string_view atom) const {
    auto i = atom_index(atom);
    if (!i) throw UnknownSymbol("atom", std::string(atom));
    return valuation_[*i];
  }
  const std::vector<WorldSet>& valuations() const { return valuation_; }

  // Resolves world ids; throws ModelError on an unknown id.
  WorldSet worlds_named(const std::vector<std::string>& ids) const {
    WorldSet out;
    for (const auto& id : ids) {
      auto i = world_index(id);
      if (!i) throw ModelError("unknown world '" + id + "'");
      out = out.with(*i);
    }
    return out;
  }

  std::vector<std::string> names_of(WorldSet s) const {
    std::vector<std::string> out;
    for (std::size_t w : s) out.push_back(worlds_.at(w));
    return out;
  }

  friend bool operator==(const EpistemicModel&, const EpistemicModel&) = default;

 private:
  static void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string_view> seen;
    for (const auto& n : names) {
      if (n.empty()) throw ModelError(std::string("empty ") + what + " name");
      if (!seen.insert(n).second) throw ModelError(std::string("duplicate ") + what + " '" + n + "'");
    }
  }

  static std::optional<std::size_t> index_of(const std::vector<std::string>& v, std::string_view name) {
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  std::vector<std::string> worlds_;
  std::vector<std::string> agents_;
  std::vector<Relation> relations_;
  std::vector<std::string> atoms_;
  std::vector<WorldSet> valuation_;
};

// Builds a model from world ids; convenient for hand-written fixtures.
class ModelBuilder {
 public:
  explicit ModelBuilder(std::vector<std::string> worlds) : worlds_(std::move(worlds)) {}

  ModelBuilder& agent(std::string name, const std::vector<std::pair<std::string, std::string>>& pairs) {
    Relation r(worlds_.size());
    for (const auto& [from, to] : pairs) r.set(index(from), index(to));
    agents_.push_back(std::move(name));
    relations_.push_back(std::move(r));
    return *this;
  }

  ModelBuilder& agent(std::string name, std::initializer_list<std::pair<std::string, std::string>> pairs) {
    return agent(std::move(name), std::vector<std::pair<std::string, std::string>>(pairs));
  }

  ModelBuilder& agent(std::string name, Relation r) {
    agents_.push_back(std::move(name));
    relations_.push_back(std::move(r));
    return *this;
  }

  // Relation linking all worlds inside each block (an equivalence).
  ModelBuilder& agent_partition(std::string name, const std::vector<std::vector<std::string>>& blocks) {
    Relation r(worlds_.size());
    for (const auto& block : blocks)
      for (const auto& x : block)
        for (const auto& y : block) r.set(index(x), index(y));
    return agent(std::move(name), std::move(r));
  }

  ModelBuilder& atom(std::string name, const std::vector<std::string>& true_at) {
    WorldSet s;
    for (const auto& w : true_at) s = s.with(index(w));
    atoms_.push_back(std::move(name));
    valuation_.push_back(s);
    return *this;
  }

  EpistemicModel build() const { return EpistemicModel(worlds_, agents_, relations_, atoms_, valuation_); }

 private:
  std::size_t index(const std::string& id) const {
    auto it = std::find(worlds_.begin(), worlds_.end(), id);
    if (it == worlds_.end()) throw ModelError("unknown world '" + id + "'");
    return static_cast<std::size_t>(it - worlds_.begin());
  }

  std::vector<std::string> worlds_;
  std::vector<std::string> agents_;
  std::vector<Relation> relations_;
  std::vector<std::string> atoms_;
  std::vector<WorldSet> valuation_;
};

// Union of every agent's relation, folded left in agent order.
inline Relation evr(const EpistemicModel& m) {
  Relation out(m.world_count());
  for (const auto& r : m.relations()) out = union_rel(out, r);
  return out;
}

struct FrameFlags {
  bool reflexive = false;
  bool transitive = false;
  bool euclidean = false;

  bool s5() const { return reflexive && transitive && euclidean; }
  friend bool operator==(const FrameFlags&, const FrameFlags&) = default;
};

inline FrameFlags classify(const Relation& r) { return {is_reflexive(r), is_transitive(r), is_euclidean(r)}; }

// One entry per agent, in agent order.
inline std::vector<FrameFlags> classify_frame(const EpistemicModel& m) {
  std::vector<FrameFlags> out;
  for (const auto& r : m.relations()) out.push_back(classify(r));
  return out;
}

inline bool is_s5(const EpistemicModel& m) {
  auto flags = classify_frame(m);
  return std::all_of(flags.begin(), flags.end(), [](const FrameFlags& f) { return f.s5(); });
}

// Submodel on the worlds of d: W' = d, R'_i = R_i ∩ (d × d), V'(p) = V(p) ∩ d.
// Worlds keep their ids and relative order.
inline EpistemicModel restrict(const EpistemicModel& m, EvaluationDomain d) {
  if (!d.subset_of(m.all_worlds())) throw ModelError("restriction domain is not a subset of the model");
  if (d.empty()) throw ModelError("cannot restrict a model to an empty domain");
  std::vector<Relation> rels;
  rels.reserve(m.relations().size());
  for (const auto& r : m.relations()) rels.push_back(restrict_rel(r, d));
  std::vector<WorldSet> val;
  val.reserve(m.valuations().size());
  for (auto v : m.valuations()) val.push_back(extract(v, d));
  return EpistemicModel(EpistemicModel::Trusted{}, m.names_of(d), m.agents(), std::move(rels), m.atoms(),
                        std::move(val));
}

}  // namespace pal
