#include <gtest/gtest.h>

#include <random>

#include "pal/direct.hpp"
#include "pal/enumerate.hpp"
#include "pal/generate.hpp"
#include "pal/syntax.hpp"

using namespace pal;

namespace {

// w1, w2; a relates everything; p holds at w1 only.
EpistemicModel m() {
  return ModelBuilder({"w1", "w2"})
      .agent("a", {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}})
      .atom("p", {"w1"})
      .build();
}

std::vector<Formula> sample_formulas(std::size_t count, std::uint64_t seed, std::vector<std::string> agents = {"a", "b"},
                                     int depth = 3) {
  GeneratorOptions o;
  o.atoms = {"p", "q"};
  o.agents = std::move(agents);
  o.max_depth = depth;
  return FormulaGenerator(o, seed).take(count);
}

}  // namespace

TEST(Extension, Examples) {
  const EpistemicModel mm = m();
  EXPECT_EQ(extension(mm, top()), mm.all_worlds());
  EXPECT_EQ(extension(mm, atom("p")), WorldSet::single(0));
  EXPECT_EQ(extension(mm, neg(atom("p"))), WorldSet::single(1));
}

TEST(Extension, UnknownSymbols) {
  EXPECT_THROW(extension(m(), atom("zz")), UnknownSymbol);
  EXPECT_THROW(extension(m(), knows("b", atom("p"))), UnknownSymbol);
  try {
    extension(m(), parse("K b p"));
  } catch (const UnknownSymbol& e) {
    EXPECT_EQ(e.kind(), "agent");
    EXPECT_EQ(e.name(), "b");
  }
}

TEST(EvalDirect, Examples) {
  const EpistemicModel mm = m();
  EXPECT_FALSE(eval_direct(mm, "w1", parse("K a p")));
  EXPECT_TRUE(eval_direct(mm, "w1", parse("[!p] K a p")));
  EXPECT_TRUE(eval_direct(mm, "w2", parse("[!p] K a p")));
  const EpistemicModel all_p = ModelBuilder({"w1", "w2"})
                                   .agent("a", {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}})
                                   .atom("p", {"w1", "w2"})
                                   .build();
  EXPECT_TRUE(eval_direct(all_p, "w1", parse("C p")));
  EXPECT_THROW(eval_direct(mm, "w9", top()), ModelError);
  EXPECT_THROW(eval_direct(mm, 7, top()), ModelError);
}

TEST(EvalDirect, Connectives) {
  const EpistemicModel mm = ModelBuilder({"w1", "w2", "w3", "w4"})
                                .agent("a", {})
                                .atom("p", {"w1", "w2"})
                                .atom("q", {"w1", "w3"})
                                .build();
  EXPECT_EQ(extension(mm, parse("p & q")), WorldSet(0b0001));
  EXPECT_EQ(extension(mm, parse("p | q")), WorldSet(0b0111));
  EXPECT_EQ(extension(mm, parse("p -> q")), WorldSet(0b1101));
  EXPECT_EQ(extension(mm, parse("p <-> q")), WorldSet(0b1001));
  // No successors: every box is true, every announcement too where false.
  EXPECT_EQ(extension(mm, parse("K a ~top")), mm.all_worlds());
  EXPECT_EQ(extension(mm, parse("C ~top")), mm.all_worlds());
}

TEST(Announce, Examples) {
  const EpistemicModel mm = m();
  EXPECT_EQ(announce(mm, top()), mm);
  const EpistemicModel after = announce(mm, atom("p"));
  EXPECT_EQ(after.worlds(), std::vector<std::string>{"w1"});
  EXPECT_EQ(after.relation("a"), Relation::universal(1));
  EXPECT_EQ(after.valuation("p"), WorldSet::single(0));
  EXPECT_THROW(announce(mm, neg(top())), ModelError);
}

TEST(Announce, ShrinksToTheExtension) {
  const ModelSpace space(3, {"a", "b"}, {"p", "q"}, Frame::k);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  for (const auto& f : sample_formulas(100, 2)) {
    const EpistemicModel mm = space.at(pick(rng));
    const WorldSet ext = extension(mm, f);
    if (ext.empty()) continue;
    EXPECT_EQ(announce(mm, f).worlds(), mm.names_of(ext));
  }
}

// Announcement clause and everything else against the clause-literal evaluator.
TEST(EvalDirect, AgreesWithLiteralEvaluator) {
  const ModelSpace space(3, {"a", "b"}, {"p", "q"}, Frame::k);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  const auto formulas = sample_formulas(400, 3, {"a", "b"}, 4);
  for (const auto& f : formulas) {
    for (int k = 0; k < 10; ++k) {
      const EpistemicModel mm = space.at(pick(rng));
      const WorldSet ext = extension(mm, f);
      for (std::size_t w = 0; w < 3; ++w) ASSERT_EQ(ext.contains(w), eval_literal(mm, w, f)) << render(f);
    }
  }
}

TEST(EvalDirect, AnnouncementClause) {
  const ModelSpace space(3, {"a", "b"}, {"p", "q"}, Frame::s5);
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  const auto phis = sample_formulas(60, 4);
  const auto psis = sample_formulas(60, 5);
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const EpistemicModel mm = space.at(pick(rng));
    const Formula f = announce(phis[i], psis[i]);
    const WorldSet ext = extension(mm, phis[i]);
    for (std::size_t w = 0; w < 3; ++w) {
      bool want = !ext.contains(w);
      if (!want) {
        const EpistemicModel after = announce(mm, phis[i]);
        want = eval_direct(after, mm.worlds()[w], psis[i]);
      }
      ASSERT_EQ(eval_direct(mm, w, f), want) << render(f);
    }
  }
}

TEST(EvalDirect, CommonKnowledgeIsRelativizedToTop) {
  const ModelSpace space(3, {"a", "b"}, {"p", "q"}, Frame::k);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  for (const auto& f : sample_formulas(300, 6)) {
    const EpistemicModel mm = space.at(pick(rng));
    ASSERT_EQ(extension(mm, ck(f)), extension(mm, rck(top(), f)));
  }
}

// RCK guard is read in the current model: C(p | q) after [!r] sees the
// updated model's p-worlds.
TEST(EvalDirect, RelativizedGuardUsesTheCurrentModel) {
  // w1 -a- w2 -a- w3, p everywhere, q false at w3, r false at w2.
  const EpistemicModel mm = ModelBuilder({"w1", "w2", "w3"})
                                .agent("a", {{"w1", "w2"}, {"w2", "w1"}, {"w2", "w3"}, {"w3", "w2"}})
                                .atom("p", {"w1", "w2", "w3"})
                                .atom("q", {"w1", "w2"})
                                .atom("r", {"w1", "w3"})
                                .build();
  EXPECT_FALSE(eval_direct(mm, "w1", parse("C(p | q)")));
  // Announcing r cuts the path through w2.
  EXPECT_TRUE(eval_direct(mm, "w1", parse("[!r] C(p | q)")));
}

TEST(EvalDirect, EveryoneIsTheConjunctionOfKnows) {
  std::vector<Formula> bodies;
  for (const char* s : {"p", "~p", "K a p", "K b ~p", "E p", "C p", "[!p] K a p", "top", "~top"})
    bodies.push_back(parse(s));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& mm : enumerate_models(n, {"a", "b"}, {"p"}, Frame::k)) {
      for (const auto& f : bodies)
        ASSERT_EQ(extension(mm, everyone(f)), extension(mm, conj(knows("a", f), knows("b", f))));
    }
  }
}

TEST(EvalDirect, S5ValidatesTFourFive) {
  const auto fs = sample_formulas(40, 13, {"a", "b"}, 2);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& mm : enumerate_models(n, {"a", "b"}, {"p", "q"}, Frame::s5)) {
      for (const auto& f : fs) {
        const Formula ka = knows("a", f);
        ASSERT_EQ(extension(mm, imp(ka, f)), mm.all_worlds());
        ASSERT_EQ(extension(mm, imp(ka, knows("a", ka))), mm.all_worlds());
        ASSERT_EQ(extension(mm, imp(neg(ka), knows("a", neg(ka)))), mm.all_worlds());
      }
    }
}
