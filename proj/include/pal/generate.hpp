// Formula generators for property tests and substitution search.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pal/formula.hpp"

namespace pal {

struct GeneratorOptions {
  std::vector<std::string> atoms{"p", "q"};
  std::vector<std::string> agents{"a", "b"};
  int max_depth = 3;  // tree depth; a leaf has depth 0
  bool announcements = true;
  bool common_knowledge = true;
};

// Seeded random formulas over every constructor.  The same seed and options
// give the same sequence.
class FormulaGenerator {
 public:
  FormulaGenerator(GeneratorOptions opts, std::uint64_t seed) : opts_(std::move(opts)), rng_(seed) {}

  Formula next() { return grow(pick(0, opts_.max_depth)); }

  std::vector<Formula> take(std::size_t count) {
    std::vector<Formula> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  const std::string& any(const std::vector<std::string>& v) { return v[static_cast<std::size_t>(pick(0, static_cast<int>(v.size()) - 1))]; }

  Formula leaf() {
    // top roughly one leaf in eight
    if (opts_.atoms.empty() || pick(0, 7) == 0) return top();
    return atom(any(opts_.atoms));
  }

  // A formula of exactly the given depth.
  Formula grow(int depth) {
    if (depth == 0) return leaf();
    std::vector<Op> ops{Op::neg, Op::conj, Op::disj, Op::imp, Op::iff, Op::everyone};
    if (!opts_.agents.empty()) ops.push_back(Op::knows);
    if (opts_.announcements) ops.push_back(Op::announce);
    if (opts_.common_knowledge) {
      ops.push_back(Op::rck);
      ops.push_back(Op::ck);
    }
    const Op op = ops[static_cast<std::size_t>(pick(0, static_cast<int>(ops.size()) - 1))];
    auto sub = [&] { return grow(depth - 1); };
    auto any_sub = [&] { return grow(pick(0, depth - 1)); };
    // One child carries the full depth, the other is anywhere below it.
    auto pair = [&](auto make) {
      if (pick(0, 1) == 0) {
        Formula l = sub();
        return make(l, any_sub());
      }
      Formula l = any_sub();
      return make(l, sub());
    };
    switch (op) {
      case Op::neg:
        return neg(sub());
      case Op::everyone:
        return everyone(sub());
      case Op::ck:
        return ck(sub());
      case Op::knows: {
        const std::string& ag = any(opts_.agents);
        return knows(ag, sub());
      }
      case Op::conj:
        return pair([](const Formula& l, const Formula& r) { return conj(l, r); });
      case Op::disj:
        return pair([](const Formula& l, const Formula& r) { return disj(l, r); });
      case Op::imp:
        return pair([](const Formula& l, const Formula& r) { return imp(l, r); });
      case Op::iff:
        return pair([](const Formula& l, const Formula& r) { return iff(l, r); });
      case Op::announce:
        return pair([](const Formula& l, const Formula& r) { return announce(l, r); });
      case Op::rck:
        return pair([](const Formula& l, const Formula& r) { return rck(l, r); });
      default:
        return leaf();
    }
  }

  GeneratorOptions opts_;
  std::mt19937_64 rng_;
};

// Every formula built from the atoms with ~, &, |, K and announcement, up to
// max_nodes nodes, smallest first.  Used as the candidate list when
// searching for a substitution instance that breaks a principle.
inline std::vector<Formula> formulas_by_size(const std::vector<std::string>& atoms,
                                             const std::vector<std::string>& agents, std::size_t max_nodes) {
  std::vector<std::vector<Formula>> by(max_nodes + 1);
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    auto& out = by[n];
    if (n == 1)
      for (const auto& p : atoms) out.push_back(atom(p));
    if (n >= 2) {
      for (const auto& f : by[n - 1]) out.push_back(neg(f));
      for (const auto& ag : agents)
        for (const auto& f : by[n - 1]) out.push_back(knows(ag, f));
    }
    for (std::size_t l = 1; l + 2 <= n; ++l) {
      const std::size_t r = n - 1 - l;
      for (const auto& x : by[l])
        for (const auto& y : by[r]) {
          out.push_back(conj(x, y));
          out.push_back(disj(x, y));
          out.push_back(announce(x, y));
        }
    }
  }
  std::vector<Formula> all;
  for (auto& layer : by) all.insert(all.end(), layer.begin(), layer.end());
  return all;
}

}  // namespace pal
