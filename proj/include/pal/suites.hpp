// Experiment suites: the axiom and rule table, uniform-substitution
// failures with the naive-validity necessitation demo, and the
// cross-semantics faithfulness sweep.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pal/checker.hpp"
#include "pal/generate.hpp"

namespace pal {

// expected: "valid", "countermodel", or "report" when no outcome is claimed.
struct SuiteItem {
  std::string name;
  std::string form;
  Semantics semantics = Semantics::direct;
  Frame frame = Frame::s5;
  Verdict verdict;
  double millis = 0;
  std::string expected = "report";
  std::string note;

  std::string outcome() const { return verdict.valid() ? "valid" : "countermodel"; }
  bool as_expected() const { return expected == "report" || expected == outcome(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  json extra = json::object();

  bool ok() const {
    for (const auto& i : items)
      if (!i.as_expected()) return false;
    return true;
  }
};

inline json to_json(const SuiteItem& i) {
  json out = json::object();
  out["name"] = i.name;
  out["form"] = i.form;
  out["semantics"] = to_string(i.semantics);
  out["frame"] = to_string(i.frame);
  out["verdict"] = i.outcome();
  if (i.verdict.countermodel) {
    const auto& c = *i.verdict.countermodel;
    out["countermodel"] = to_json(c.model);
    out["world"] = c.model.worlds()[c.world];
    if (c.domain) out["domain"] = c.model.names_of(*c.domain);
  }
  out["models_checked"] = i.verdict.models_checked;
  out["millis"] = i.millis;
  out["expected"] = i.expected;
  if (!i.note.empty()) out["note"] = i.note;
  return out;
}

inline json to_json(const SuiteReport& r) {
  json items = json::array();
  for (const auto& i : r.items) items.push_back(to_json(i));
  return items;
}

namespace detail {

template <class F>
double timed(F&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  run();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Renames agent `from` to `to` throughout.
inline Formula rename_agent(const Formula& f, const std::string& from, const std::string& to) {
  switch (f.op()) {
    case Op::atom:
    case Op::top:
      return f;
    case Op::knows:
      return knows(f.name() == from ? to : f.name(), rename_agent(f.lhs(), from, to));
    case Op::neg:
    case Op::everyone:
    case Op::ck:
      return make_node(f.op(), {}, {rename_agent(f.lhs(), from, to)});
    default:
      return make_node(f.op(), {}, {rename_agent(f.lhs(), from, to), rename_agent(f.rhs(), from, to)});
  }
}

// Atoms of the formulas, in the order p, q, r, then any others sorted.
inline std::vector<std::string> occurring_atoms(const std::vector<Formula>& fs) {
  std::set<std::string> seen;
  for (const auto& f : fs)
    for (const auto& a : atoms_of(f)) seen.insert(a);
  std::vector<std::string> out;
  for (const char* a : {"p", "q", "r"})
    if (seen.erase(a)) out.emplace_back(a);
  out.insert(out.end(), seen.begin(), seen.end());
  return out;
}

}  // namespace detail

struct AxiomEntry {
  std::string name;
  std::vector<std::string> premises;  // empty for an axiom
  std::string conclusion;
  bool frame_dependent = false;       // needs S5; refuted under K
  bool variant = false;               // alternative published form; no outcome claimed
};

// Metavariables instantiated as p, q, r; the single-agent operator uses a.
inline std::vector<AxiomEntry> axiom_table() {
  return {
      {"tautology: top", {}, "top"},
      {"tautology: excluded middle", {}, "p | ~p"},
      {"tautology: Peirce", {}, "((p -> q) -> p) -> p"},
      {"K", {}, "K a (p -> q) -> K a p -> K a q"},
      {"modus ponens", {"p -> q", "p"}, "q"},
      {"necessitation", {"p"}, "K a p"},
      {"T", {}, "K a p -> p", true},
      {"4", {}, "K a p -> K a K a p", true},
      {"5", {}, "~K a p -> K a ~K a p", true},
      {"atomic permanence", {}, "[!p] q <-> (p -> q)"},
      {"conjunction", {}, "[!p] (q & r) <-> [!p] q & [!p] r"},
      {"partial functionality", {}, "[!p] ~q <-> (p -> ~[!p] q)"},
      {"action-knowledge (nested form)", {}, "[!p] K a q <-> (p -> K a (p -> K a (p -> [!p] q)))", true},
      {"action-knowledge (single K form)", {}, "[!p] K a q <-> (p -> K a (p -> [!p] q))", false, true},
      {"announcement and RCK", {}, "[!p] C(r | q) <-> (p -> C(p & [!p] r | [!p] q))"},
      {"announcement and RCK (unguarded form)", {}, "[!p] C(q | r) <-> (p -> C([!p] q | [!p] r))", false, true},
      {"C-normality", {}, "C(r | p -> q) -> C(r | p) -> C(r | q)"},
      {"mix (left to right)", {}, "C(q | p) -> E (q -> p & C(q | p))"},
      {"mix (right to left)", {}, "E (q -> p & C(q | p)) -> C(q | p)"},
      {"mix, alternative form (left to right)", {}, "C(r | p) -> E (r -> p & C(r | q))", false, true},
      {"mix, alternative form (right to left)", {}, "E (r -> p & C(r | q)) -> C(r | p)", false, true},
      {"induction", {}, "E (q -> p) & C(q | p -> E (q -> p)) -> C(q | p)"},
      {"induction (converse)", {}, "C(q | p) -> E (q -> p) & C(q | p -> E (q -> p))"},
      {"announcement necessitation", {"p"}, "[!q] p"},
      {"RCK necessitation", {"p"}, "C(q | p)"},
  };
}

// Runs every entry under each requested frame and both semantics.  Items
// enumerate over the atoms they mention; agents come from the scope and the
// single-agent operator uses the scope's first agent.
inline SuiteReport run_axiom_suite(const Scope& s, std::vector<Frame> frames = {Frame::k, Frame::s5}) {
  require_scope(s);
  SuiteReport report{"axioms", {}, json::object()};
  for (const auto& e : axiom_table()) {
    std::vector<Formula> premises;
    for (const auto& p : e.premises) premises.push_back(detail::rename_agent(parse(p), "a", s.agents.front()));
    const Formula conclusion = detail::rename_agent(parse(e.conclusion), "a", s.agents.front());
    std::vector<Formula> all = premises;
    all.push_back(conclusion);
    std::string form;
    for (const auto& p : premises) form += render(p) + ", ";
    form = premises.empty() ? render(conclusion) : form.substr(0, form.size() - 2) + " / " + render(conclusion);

    for (Frame frame : frames) {
      for (Semantics sem : {Semantics::direct, Semantics::sse}) {
        Scope sc = s;
        sc.frame = frame;
        sc.semantics = sem;
        sc.atoms = detail::occurring_atoms(all);
        SuiteItem item;
        item.name = e.name;
        item.form = form;
        item.semantics = sem;
        item.frame = frame;
        item.millis = detail::timed([&] {
          item.verdict = premises.empty() ? check_valid(conclusion, sc) : check_rule(premises, conclusion, sc);
        });
        if (e.variant)
          item.expected = "report";
        else if (e.frame_dependent && frame == Frame::k)
          item.expected = "countermodel";
        else
          item.expected = "valid";
        report.items.push_back(std::move(item));
      }
    }
  }
  return report;
}

// The six principles that hold for atoms but not for arbitrary formulas.
inline std::vector<std::string> substitution_principles() {
  return {
      "p -> ~[!p] ~p",
      "p -> ~[!p] ~K a p",
      "p -> ~[!p] (p & ~K a p)",
      "p & ~K a p -> ~[!p & ~K a p] (p & ~K a p)",
      "K a p -> ~[!p] ~K a p",
      "K a p -> ~[!p] (p & ~K a p)",
  };
}

inline Formula moore(const std::string& q, const std::string& agent) { return conj(atom(q), neg(knows(agent, atom(q)))); }

struct SubstitutionOptions {
  bool search = true;            // try further substitutions when no Moore instance is refuted
  std::size_t pool_nodes = 5;    // size bound for searched substitutions
};

// For each principle: the atomic form, the Moore instance p := q & ~K x q
// for each scope agent x, and (optionally) the first formula from a
// size-ordered pool whose instance is refuted.  Then the necessitation
// demo: a rule that preserves vld but not tvalid.
inline SuiteReport run_substitution_suite(const Scope& s, SubstitutionOptions opt = {}) {
  require_scope(s);
  SuiteReport report{"substitution", {}, json::object()};
  Scope sc = s;
  sc.atoms = {"p", "q"};
  const std::string first_agent = s.agents.front();
  // Two shapes known to work on larger models go first, then everything
  // small.
  std::vector<Formula> pool;
  if (opt.search) {
    for (const auto& agent : s.agents) {
      pool.push_back(disj(moore("q", agent), atom("p")));
      pool.push_back(neg(disj(atom("p"), knows(agent, atom("q")))));
    }
    for (auto& f : formulas_by_size({"p", "q"}, s.agents, opt.pool_nodes)) pool.push_back(std::move(f));
  }
  int number = 0;
  for (const auto& text : substitution_principles()) {
    ++number;
    const Formula principle = detail::rename_agent(parse(text), "a", first_agent);
    const std::string tag = "item " + std::to_string(number);
    for (Semantics sem : {Semantics::direct, Semantics::sse}) {
      sc.semantics = sem;
      SuiteItem atomic{tag + " atomic", render(principle), sem, sc.frame};
      atomic.millis = detail::timed([&] { atomic.verdict = check_valid(principle, sc); });
      atomic.expected = "valid";
      report.items.push_back(std::move(atomic));

      bool refuted = false;
      for (const auto& agent : s.agents) {
        const Formula inst = substitute(principle, "p", moore("q", agent));
        SuiteItem item{tag + " moore " + agent, render(inst), sem, sc.frame};
        item.millis = detail::timed([&] { item.verdict = check_valid(inst, sc); });
        // Own-agent instance is the canonical witness.
        item.expected = agent == first_agent ? "countermodel" : "report";
        item.note = "p := " + render(moore("q", agent));
        refuted = refuted || !item.verdict.valid();
        report.items.push_back(std::move(item));
      }
      if (refuted || !opt.search) continue;

      SuiteItem found{tag + " searched", render(principle), sem, sc.frame};
      found.expected = "countermodel";
      found.millis = detail::timed([&] {
        std::size_t tried = 0;
        for (const auto& g : pool) {
          ++tried;
          const Formula inst = substitute(principle, "p", g);
          Verdict v = check_valid(inst, sc);
          if (!v.valid()) {
            found.form = render(inst);
            found.note = "p := " + render(g) + " (candidate " + std::to_string(tried) + ")";
            found.verdict = std::move(v);
            return;
          }
        }
        found.note = "no refuting substitution among " + std::to_string(pool.size()) + " candidates";
      });
      report.items.push_back(std::move(found));
    }
  }

  // Necessitation for announcements: from psi infer [!phi] psi, read with
  // tvalid (domain fixed to all worlds) and with vld.
  Scope demo = s;
  demo.agents = {first_agent};
  demo.atoms = {"p"};
  demo.semantics = Semantics::sse;
  const std::vector<Formula> small = formulas_by_size({"p"}, {first_agent}, 3);
  SuiteItem naive{"announcement necessitation under tvalid", "", Semantics::sse, demo.frame};
  naive.expected = "countermodel";
  std::optional<std::pair<Formula, Formula>> witness;
  naive.millis = detail::timed([&] {
    for (const auto& phi : small)
      for (const auto& psi : small) {
        Verdict v = check_rule({psi}, announce(phi, psi), demo, Validity::tvalid);
        if (!v.valid()) {
          witness.emplace(phi, psi);
          naive.verdict = std::move(v);
          return;
        }
      }
  });
  if (witness) {
    naive.form = render(witness->second) + " / " + render(announce(witness->first, witness->second));
    SuiteItem proper{"announcement necessitation under vld", naive.form, Semantics::sse, demo.frame};
    proper.expected = "valid";
    proper.millis = detail::timed(
        [&] { proper.verdict = check_rule({witness->second}, announce(witness->first, witness->second), demo); });
    report.items.push_back(std::move(naive));
    report.items.push_back(std::move(proper));
  } else {
    naive.note = "no witness among " + std::to_string(small.size() * small.size()) + " pairs";
    report.items.push_back(std::move(naive));
  }
  return report;
}

struct FaithfulnessOptions {
  std::size_t max_worlds = 2;
  std::vector<std::string> agents{"a", "b"};
  std::vector<std::string> atoms{"p", "q"};
  Frame frame = Frame::k;
  std::size_t formulas = 500;
  int max_depth = 3;
  std::uint64_t seed = 1;
  std::size_t random_worlds = 3;
  std::size_t random_cases = 10000;
  unsigned workers = 1;
};

struct Discrepancy {
  EpistemicModel model;
  EvaluationDomain domain;
  std::size_t world;
  Formula formula;
};

struct FaithfulnessReport {
  std::uint64_t exhaustive_cases = 0;
  std::uint64_t random_cases = 0;
  std::uint64_t discrepancies = 0;
  std::optional<Discrepancy> first;
  double millis = 0;

  bool ok() const { return discrepancies == 0; }
};

namespace detail {

// Compares both semantics for f on (m, d) at every world of d.  Returns the
// number of worlds compared and the set where they disagree.
inline std::pair<std::uint64_t, WorldSet> compare_on(const EpistemicModel& m, WorldSet d, const Formula& f) {
  const WorldSet sse = SseEvaluator(m).extension(d, f) & d;
  const WorldSet direct = deposit(direct_extension(restrict(m, d), f), d);
  return {d.size(), WorldSet(sse.bits() ^ direct.bits())};
}

}  // namespace detail

inline FaithfulnessReport run_faithfulness(const FaithfulnessOptions& opt) {
  FaithfulnessReport rep;
  GeneratorOptions g;
  g.atoms = opt.atoms;
  g.agents = opt.agents;
  g.max_depth = opt.max_depth;
  const std::vector<Formula> formulas = FormulaGenerator(g, opt.seed).take(opt.formulas);

  rep.millis = detail::timed([&] {
    const unsigned workers = std::max(1u, opt.workers);
    std::mutex mu;
    auto note = [&](std::uint64_t cases, std::uint64_t bad, std::optional<Discrepancy> d) {
      std::lock_guard<std::mutex> lock(mu);
      rep.exhaustive_cases += cases;
      rep.discrepancies += bad;
      if (d && !rep.first) rep.first = std::move(d);
    };

    for (std::size_t n = 1; n <= opt.max_worlds; ++n) {
      const ModelSpace space(n, opt.agents, opt.atoms, opt.frame);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          std::uint64_t cases = 0, bad = 0;
          std::optional<Discrepancy> firstd;
          for (std::uint64_t i = t; i < space.size(); i += workers) {
            const EpistemicModel m = space.at(i);
            const std::uint64_t domains = std::uint64_t{1} << n;
            for (std::uint64_t code = 1; code < domains; ++code)
              for (const auto& f : formulas) {
                auto [count, diff] = detail::compare_on(m, WorldSet(code), f);
                cases += count;
                bad += diff.size();
                if (!diff.empty() && !firstd) firstd = Discrepancy{m, WorldSet(code), diff.first(), f};
              }
          }
          note(cases, bad, std::move(firstd));
        });
      }
      for (auto& th : pool) th.join();
    }

    // Random (model, domain, world, formula) cases at a fixed larger size.
    if (opt.random_cases > 0) {
      const ModelSpace space(opt.random_worlds, opt.agents, opt.atoms, opt.frame);
      std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<std::uint64_t> model_pick(0, space.size() - 1);
      std::uniform_int_distribution<std::uint64_t> domain_pick(1, (std::uint64_t{1} << opt.random_worlds) - 1);
      std::uniform_int_distribution<std::size_t> formula_pick(0, formulas.size() - 1);
      for (std::size_t k = 0; k < opt.random_cases; ++k) {
        const EpistemicModel m = space.at(model_pick(rng));
        const WorldSet d(domain_pick(rng));
        const auto members = d.members();
        const std::size_t w = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        const Formula& f = formulas[formula_pick(rng)];
        auto [count, diff] = detail::compare_on(m, d, f);
        (void)count;
        ++rep.random_cases;
        if (diff.contains(w)) {
          ++rep.discrepancies;
          if (!rep.first) rep.first = Discrepancy{m, d, w, f};
        }
      }
    }
  });
  return rep;
}

inline json to_json(const FaithfulnessReport& r) {
  json out = json::object();
  out["exhaustive_cases"] = r.exhaustive_cases;
  out["random_cases"] = r.random_cases;
  out["discrepancies"] = r.discrepancies;
  if (r.first) {
    out["first_discrepancy"] = {{"model", to_json(r.first->model)},
                                {"domain", r.first->model.names_of(r.first->domain)},
                                {"world", r.first->model.worlds()[r.first->world]},
                                {"formula", render(r.first->formula)}};
  }
  out["millis"] = r.millis;
  return out;
}

}  // namespace pal
