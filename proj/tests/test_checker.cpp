#include <gtest/gtest.h>

#include "pal/checker.hpp"
#include "pal/suites.hpp"
#include "pal/syntax.hpp"

using namespace pal;

namespace {

Scope scope(std::size_t n, Frame frame, Semantics sem = Semantics::direct, std::vector<std::string> agents = {"a"},
            std::vector<std::string> atoms = {"p"}) {
  Scope s;
  s.max_worlds = n;
  s.frame = frame;
  s.semantics = sem;
  s.agents = std::move(agents);
  s.atoms = std::move(atoms);
  return s;
}

}  // namespace

TEST(CheckValid, TIsValidUnderS5) {
  const Verdict v = check_valid(parse("K a p -> p"), scope(3, Frame::s5));
  EXPECT_TRUE(v.valid());
  EXPECT_TRUE(v.exhaustive);
  // 1 + 2*2 + 5*8 models with one agent and one atom.
  EXPECT_EQ(v.models_checked, 2u + 2u * 4u + 5u * 8u);
}

TEST(CheckValid, TFailsUnderK) {
  const Verdict v = check_valid(parse("K a p -> p"), scope(2, Frame::k));
  ASSERT_FALSE(v.valid());
  const auto& c = *v.countermodel;
  // Smallest countermodel: one world, no arrows, p false.
  EXPECT_EQ(c.model.world_count(), 1u);
  EXPECT_TRUE(c.model.relation("a").empty());
  EXPECT_TRUE(c.model.valuation("p").empty());
  EXPECT_EQ(c.world, 0u);
  EXPECT_FALSE(c.domain.has_value());
  EXPECT_FALSE(eval_literal(c.model, c.world, parse("K a p -> p")));
}

TEST(CheckValid, SseCountermodelCarriesADomain) {
  const Verdict v = check_valid(parse("K a p -> p"), scope(2, Frame::k, Semantics::sse));
  ASSERT_FALSE(v.valid());
  ASSERT_TRUE(v.countermodel->domain.has_value());
  EXPECT_TRUE(v.countermodel->domain->contains(v.countermodel->world));
  EXPECT_FALSE(eval_sse(v.countermodel->model, *v.countermodel->domain, v.countermodel->world, parse("K a p -> p")));
}

TEST(CheckValid, Top) {
  for (Frame fr : {Frame::k, Frame::s5})
    for (Semantics sem : {Semantics::direct, Semantics::sse}) EXPECT_TRUE(check_valid(top(), scope(2, fr, sem)).valid());
}

TEST(CheckRule, Necessitation) {
  EXPECT_TRUE(check_rule({atom("p")}, parse("K a p"), scope(3, Frame::k)).valid());
  EXPECT_TRUE(check_rule({atom("p")}, parse("K a p"), scope(3, Frame::k, Semantics::sse)).valid());
}

TEST(CheckRule, ModusPonens) {
  const Scope s = scope(2, Frame::k, Semantics::direct, {"a"}, {"p", "q"});
  EXPECT_TRUE(check_rule({parse("p -> q"), atom("p")}, atom("q"), s).valid());
  EXPECT_FALSE(check_rule({parse("p -> q")}, atom("q"), s).valid());
}

TEST(CheckRule, AnnouncementNecessitationUnderTvalid) {
  const Scope s = scope(2, Frame::s5, Semantics::sse);
  const Verdict naive = check_rule({parse("~K a p")}, parse("[!p] ~K a p"), s, Validity::tvalid);
  ASSERT_FALSE(naive.valid());
  EXPECT_EQ(naive.countermodel->model.world_count(), 2u);
  EXPECT_TRUE(check_rule({parse("~K a p")}, parse("[!p] ~K a p"), s).valid());
}

TEST(Checker, Deterministic) {
  const Scope s = scope(2, Frame::k, Semantics::direct, {"a", "b"}, {"p", "q"});
  const Formula f = parse("K a p -> K b p");
  const Verdict x = check_valid(f, s);
  const Verdict y = check_valid(f, s);
  ASSERT_FALSE(x.valid());
  EXPECT_EQ(x.countermodel->index, y.countermodel->index);
  EXPECT_EQ(x.countermodel->model, y.countermodel->model);
  EXPECT_EQ(to_json(x).dump(), to_json(y).dump());
}

TEST(Checker, WorkersAgree) {
  Scope one = scope(3, Frame::k, Semantics::direct, {"a", "b"}, {"p"});
  Scope four = one;
  four.workers = 4;
  for (const char* t : {"K a p -> K b p", "C p -> p", "E p -> K a K b p", "[!p] K a p", "top", "K a K a p -> K a p"}) {
    for (Semantics sem : {Semantics::direct, Semantics::sse}) {
      one.semantics = four.semantics = sem;
      const Verdict x = check_valid(parse(t), one);
      const Verdict y = check_valid(parse(t), four);
      ASSERT_EQ(x.valid(), y.valid()) << t;
      EXPECT_EQ(x.models_checked, y.models_checked) << t;
      if (!x.valid()) {
        EXPECT_EQ(x.countermodel->index, y.countermodel->index) << t;
        EXPECT_EQ(x.countermodel->world, y.countermodel->world) << t;
      }
    }
  }
}

TEST(Checker, LargerScopesOnlyFindMore) {
  for (const char* t : {"K a p -> p", "K a K a p -> K a p", "~K a p -> K a ~K a p", "K a p -> K a K a p"}) {
    bool refuted = false;
    for (std::size_t n = 1; n <= 3; ++n) {
      const Verdict v = check_valid(parse(t), scope(n, Frame::k));
      if (refuted) EXPECT_FALSE(v.valid()) << t << " at " << n;
      refuted = refuted || !v.valid();
      if (!v.valid()) EXPECT_LE(v.countermodel->model.world_count(), n);
    }
  }
}

TEST(Checker, ScopeErrors) {
  EXPECT_THROW(check_valid(parse("q"), scope(1, Frame::k)), ScopeError);
  EXPECT_THROW(check_valid(parse("K b p"), scope(1, Frame::k)), ScopeError);
  EXPECT_THROW(check_valid(parse("p"), scope(0, Frame::k)), ScopeError);
  EXPECT_THROW(check_rule({parse("q")}, parse("p"), scope(1, Frame::k)), ScopeError);
  Scope none = scope(1, Frame::k);
  none.agents.clear();
  EXPECT_THROW(check_valid(parse("p"), none), ScopeError);
}

TEST(Checker, BudgetStopsTheSearch) {
  Scope s = scope(3, Frame::k);
  s.model_budget = 5;
  const Verdict v = check_valid(parse("K a p | ~K a p"), s);
  EXPECT_TRUE(v.valid());
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.models_checked, 5u);
  s.model_budget = 10000;
  const Verdict all = check_valid(parse("K a p | ~K a p"), s);
  EXPECT_TRUE(all.exhaustive);
}

TEST(Checker, SemanticsAgreeOnTheAxiomTable) {
  Scope s;
  s.max_worlds = 2;
  s.atoms = {"p", "q", "r"};
  const SuiteReport r = run_axiom_suite(s);
  for (std::size_t i = 0; i + 1 < r.items.size(); i += 2) {
    ASSERT_EQ(r.items[i].semantics, Semantics::direct);
    ASSERT_EQ(r.items[i + 1].semantics, Semantics::sse);
    EXPECT_EQ(r.items[i].outcome(), r.items[i + 1].outcome()) << r.items[i].name;
  }
}

TEST(Checker, VerdictJson) {
  const Verdict v = check_valid(parse("K a p -> p"), scope(2, Frame::k));
  const json j = to_json(v);
  EXPECT_EQ(j["verdict"], "countermodel");
  EXPECT_EQ(j["world"], "w1");
  EXPECT_EQ(model_from_json(j["countermodel"]), v.countermodel->model);
  const json ok = to_json(check_valid(top(), scope(1, Frame::k)));
  EXPECT_EQ(ok["verdict"], "valid");
  EXPECT_FALSE(ok.contains("countermodel"));
}
