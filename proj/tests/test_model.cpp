#include <gtest/gtest.h>

#include <random>

#include "pal/enumerate.hpp"
#include "pal/model.hpp"
#include "pal/model_json.hpp"
#include "pal/relation.hpp"

using namespace pal;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Worlds are 0-based here: w1 is 0.
Relation rel(std::size_t n, Pairs pairs) { return Relation::from_pairs(n, pairs); }

EpistemicModel two_world_model() {
  return ModelBuilder({"w1", "w2"})
      .agent("a", {{"w1", "w2"}, {"w2", "w1"}, {"w1", "w1"}, {"w2", "w2"}})
      .atom("p", {"w1"})
      .build();
}

}  // namespace

TEST(Relation, UnionExamples) {
  EXPECT_EQ(union_rel(rel(2, {}), rel(2, {{0, 1}})), rel(2, {{0, 1}}));
  EXPECT_EQ(union_rel(rel(2, {{0, 0}}), rel(2, {{0, 0}})), rel(2, {{0, 0}}));
  EXPECT_EQ(union_rel(rel(2, {{0, 1}}), rel(2, {{1, 0}})), rel(2, {{0, 1}, {1, 0}}));
}

TEST(Relation, IntersectionExamples) {
  EXPECT_EQ(intersection_rel(rel(2, {{0, 1}}), rel(2, {})), rel(2, {}));
  EXPECT_EQ(intersection_rel(rel(2, {{0, 1}, {1, 1}}), rel(2, {{1, 1}})), rel(2, {{1, 1}}));
  const Relation r = rel(3, {{0, 1}, {2, 2}});
  EXPECT_EQ(intersection_rel(r, r), r);
}

TEST(Relation, SubExamples) {
  const Relation r = rel(2, {{0, 1}, {1, 1}});
  EXPECT_TRUE(sub_rel(rel(2, {}), r));
  EXPECT_TRUE(sub_rel(r, r));
  EXPECT_FALSE(sub_rel(rel(2, {{0, 1}}), rel(2, {{1, 0}})));
}

TEST(Relation, UniverseMismatchIsAnError) {
  EXPECT_THROW(union_rel(Relation(2), Relation(3)), ModelError);
  EXPECT_THROW(intersection_rel(Relation(2), Relation(3)), ModelError);
  EXPECT_THROW(sub_rel(Relation(2), Relation(3)), ModelError);
}

TEST(Relation, AlgebraLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> code(0, (1u << 9) - 1);
  for (int i = 0; i < 300; ++i) {
    const Relation a = Relation::from_code(3, code(rng));
    const Relation b = Relation::from_code(3, code(rng));
    const Relation c = Relation::from_code(3, code(rng));
    EXPECT_EQ(union_rel(a, b), union_rel(b, a));
    EXPECT_EQ(intersection_rel(a, b), intersection_rel(b, a));
    EXPECT_EQ(union_rel(union_rel(a, b), c), union_rel(a, union_rel(b, c)));
    EXPECT_EQ(intersection_rel(intersection_rel(a, b), c), intersection_rel(a, intersection_rel(b, c)));
    EXPECT_EQ(union_rel(a, intersection_rel(a, b)), a);
    EXPECT_EQ(intersection_rel(a, union_rel(a, b)), a);
    EXPECT_TRUE(sub_rel(intersection_rel(a, b), a));
    EXPECT_TRUE(sub_rel(a, union_rel(a, b)));
  }
}

TEST(Relation, CodeRoundTrip) {
  for (std::uint64_t c = 0; c < 512; ++c) EXPECT_EQ(Relation::from_code(3, c).code(), c);
  // bit k is the pair (k / n, k % n)
  EXPECT_EQ(Relation::from_code(3, 1u << 5), rel(3, {{1, 2}}));
}

TEST(TransitiveClosure, Examples) {
  EXPECT_EQ(tc(rel(3, {{0, 1}, {1, 2}})), rel(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(tc(rel(3, {})), rel(3, {}));
  EXPECT_EQ(tc(rel(3, {{0, 0}})), rel(3, {{0, 0}}));
}

TEST(TransitiveClosure, OracleExamples) {
  EXPECT_EQ(tc_oracle(rel(2, {{0, 1}, {1, 0}})), rel(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(tc_oracle(rel(2, {})), rel(2, {}));
  EXPECT_EQ(tc_oracle(rel(2, {{0, 1}})), rel(2, {{0, 1}}));
  EXPECT_THROW(tc_oracle(Relation(5)), ModelError);
}

TEST(TransitiveClosure, MatchesOracleOnEveryRelationUpToThreeWorlds) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
      const Relation r = Relation::from_code(n, c);
      ASSERT_EQ(tc(r), tc_oracle(r)) << "n=" << n << " code=" << c;
    }
}

TEST(TransitiveClosure, MatchesOracleOnRandomFourWorldRelations) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> code(0, (1u << 16) - 1);
  for (int i = 0; i < 40; ++i) {
    const Relation r = Relation::from_code(4, code(rng));
    ASSERT_EQ(tc(r), tc_oracle(r)) << r.code();
  }
}

TEST(TransitiveClosure, LeastTransitiveSuperset) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::uint64_t> code(0, (std::uint64_t{1} << 25) - 1);
  for (int i = 0; i < 200; ++i) {
    const Relation r = Relation::from_code(5, code(rng));
    const Relation t = tc(r);
    EXPECT_TRUE(is_transitive(t));
    EXPECT_TRUE(sub_rel(r, t));
    // Any transitive superset sampled contains it.
    const Relation s = tc(union_rel(r, Relation::from_code(5, code(rng))));
    EXPECT_TRUE(sub_rel(t, s));
  }
}

TEST(Frame, ClassifyExamples) {
  EXPECT_EQ(classify(Relation::universal(2)), (FrameFlags{true, true, true}));
  EXPECT_EQ(classify(Relation(1)), (FrameFlags{false, true, true}));
  EXPECT_EQ(classify(rel(2, {{0, 1}})), (FrameFlags{false, true, false}));
}

TEST(Evr, Examples) {
  const auto one = ModelBuilder({"w1", "w2"}).agent("a", {{"w1", "w2"}}).build();
  EXPECT_EQ(evr(one), rel(2, {{0, 1}}));
  const auto two = ModelBuilder({"w1", "w2"}).agent("a", {{"w1", "w2"}}).agent("b", {{"w2", "w1"}}).build();
  EXPECT_EQ(evr(two), rel(2, {{0, 1}, {1, 0}}));
  const auto three = ModelBuilder({"w1", "w2"}).agent("a", {}).agent("b", {}).agent("c", {}).build();
  EXPECT_EQ(evr(three), rel(2, {}));
}

TEST(Model, ValidationErrors) {
  EXPECT_THROW(ModelBuilder({}).build(), ModelError);
  EXPECT_THROW(ModelBuilder({"w1", "w1"}).build(), ModelError);
  EXPECT_THROW(ModelBuilder({"w1"}).agent("a", {{"w1", "w9"}}), ModelError);
  EXPECT_THROW(ModelBuilder({"w1"}).atom("p", {"w9"}), ModelError);
  EXPECT_THROW(ModelBuilder({"w1"}).agent("a", {}).agent("a", {}).build(), ModelError);
  EXPECT_THROW(EpistemicModel({"w1"}, {"a"}, {Relation(2)}, {}, {}), ModelError);
  EXPECT_THROW(EpistemicModel({"w1"}, {}, {}, {"p"}, {WorldSet(2)}), ModelError);
  // Two agents may share the same relation.
  EXPECT_NO_THROW(ModelBuilder({"w1"}).agent("a", {}).agent("b", {}).build());
}

TEST(Restrict, Examples) {
  const EpistemicModel m = two_world_model();
  EXPECT_EQ(restrict(m, m.all_worlds()), m);
  const EpistemicModel r = restrict(m, WorldSet::single(0));
  EXPECT_EQ(r.worlds(), std::vector<std::string>{"w1"});
  EXPECT_EQ(r.relation("a"), rel(1, {{0, 0}}));
  EXPECT_EQ(r.valuation("p"), WorldSet::single(0));
  EXPECT_EQ(r.agents(), m.agents());

  const auto blank = ModelBuilder({"w1", "w2"}).atom("p", {}).build();
  EXPECT_TRUE(restrict(blank, WorldSet::single(1)).valuation("p").empty());
  EXPECT_THROW(restrict(m, WorldSet()), ModelError);
  EXPECT_THROW(restrict(m, WorldSet::single(5)), ModelError);
}

TEST(Restrict, Composition) {
  const ModelSpace space(4, {"a", "b"}, {"p"}, Frame::k);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const EpistemicModel m = space.at(pick(rng));
    for (std::uint64_t d1 = 1; d1 < 16; ++d1)
      for (std::uint64_t d2 = 1; d2 < 16; ++d2) {
        const WorldSet both(d1 & d2);
        if (both.empty()) continue;
        // d2 is read against the restricted model's own indices.
        const EpistemicModel first = restrict(m, WorldSet(d1));
        const WorldSet d2_local = extract(both, WorldSet(d1));
        ASSERT_EQ(restrict(first, d2_local), restrict(m, both));
      }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_models(1, {"a"}, {"p"}, Frame::k).size(), 4u);
  EXPECT_EQ(enumerate_models(2, {"a"}, {}, Frame::s5).size(), 2u);
  EXPECT_EQ(enumerate_models(3, {"a"}, {}, Frame::s5).size(), 5u);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t agents = 1; agents <= 2; ++agents)
      for (std::size_t atoms = 0; atoms <= 2; ++atoms) {
        std::vector<std::string> ag{"a", "b"}, at{"p", "q"};
        ag.resize(agents);
        at.resize(atoms);
        const std::uint64_t closed = std::uint64_t{1} << (agents * n * n + atoms * n);
        EXPECT_EQ(enumerate_models(n, ag, at, Frame::k).size(), closed);
      }
}

TEST(Enumerate, BellNumbers) {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(bell_number(n), bell[n]);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(equivalence_relations(n).size(), bell[n]);
}

TEST(Enumerate, S5ModelsAreS5AndDistinct) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto rels = equivalence_relations(n);
    for (std::size_t i = 0; i < rels.size(); ++i) {
      EXPECT_TRUE(classify(rels[i]).s5());
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(rels[i] == rels[j]);
    }
  }
  for (const auto& m : enumerate_models(3, {"a", "b"}, {"p"}, Frame::s5)) EXPECT_TRUE(is_s5(m));
}

TEST(Enumerate, OrderFollowsTheBitEncoding) {
  const ModelSpace space(2, {"a", "b"}, {"p", "q"}, Frame::k);
  // index = ((R_a * 16 + R_b) * 4 + V(p)) * 4 + V(q)
  const std::uint64_t ra = 9, rb = 6, vp = 2, vq = 1;
  const EpistemicModel m = space.at(((ra * 16 + rb) * 4 + vp) * 4 + vq);
  EXPECT_EQ(m.worlds(), (std::vector<std::string>{"w1", "w2"}));
  EXPECT_EQ(m.relation("a").code(), ra);
  EXPECT_EQ(m.relation("b").code(), rb);
  EXPECT_EQ(m.valuation("p"), WorldSet(vp));
  EXPECT_EQ(m.valuation("q"), WorldSet(vq));
  EXPECT_EQ(m.relation("a"), rel(2, {{0, 0}, {1, 1}}));

  // S5: partitions in restricted-growth order, {w1,w2} together first.
  const ModelSpace s5(2, {"a"}, {}, Frame::s5);
  EXPECT_EQ(s5.at(0).relation("a"), Relation::universal(2));
  EXPECT_EQ(s5.at(1).relation("a"), Relation::identity(2));
}

TEST(Enumerate, IteratorVisitsEveryIndexOnce) {
  const ModelSpace space(2, {"a"}, {"p"}, Frame::k);
  std::uint64_t count = 0;
  for (auto it = space.begin(); it != space.end(); ++it) {
    EXPECT_EQ(*it, space.at(it.index()));
    ++count;
  }
  EXPECT_EQ(count, space.size());
}

TEST(ModelJson, RoundTrip) {
  const EpistemicModel m = two_world_model();
  const EpistemicModel back = model_from_json(to_json(m));
  EXPECT_EQ(back, m);
  const std::string text = R"({"worlds": ["x", "y"], "agents": {"b": [["y", "x"]]}, "valuation": {"q": ["y"]}})";
  const EpistemicModel parsed = parse_model(text);
  EXPECT_EQ(parsed.worlds(), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(parsed.relation("b").test(1, 0));
  EXPECT_EQ(parsed.valuation("q"), WorldSet::single(1));
}

TEST(ModelJson, Errors) {
  EXPECT_THROW(parse_model("{"), ModelError);
  EXPECT_THROW(parse_model(R"({"worlds": ["w1"], "extra": 1})"), ModelError);
  EXPECT_THROW(parse_model(R"({"agents": {}})"), ModelError);
  EXPECT_THROW(parse_model(R"({"worlds": []})"), ModelError);
  EXPECT_THROW(parse_model(R"({"worlds": ["w1"], "agents": {"a": [["w1", "w2"]]}})"), ModelError);
  EXPECT_THROW(parse_model(R"({"worlds": ["w1"], "valuation": {"p": ["w2"]}})"), ModelError);
  EXPECT_THROW(parse_model(R"({"worlds": ["w1", "w1"]})"), ModelError);
  EXPECT_THROW(load_model("/nonexistent/model.json"), ModelError);
}
