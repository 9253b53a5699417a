// Binary relations over a fixed, indexed world universe, stored as one
// successor bitmask per world.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pal/error.hpp"
#include "pal/world_set.hpp"

namespace pal {

class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t universe) : n_(universe), rows_(universe, 0) {
    if (universe > kMaxWorlds) throw ModelError("relation universe exceeds 64 worlds");
  }

  static Relation universal(std::size_t n) {
    Relation r(n);
    for (auto& row : r.rows_) row = WorldSet::full(n).bits();
    return r;
  }

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.rows_[i] = WorldSet::single(i).bits();
    return r;
  }

  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Relation r(n);
    for (auto [x, y] : pairs) r.set(x, y);
    return r;
  }

  // Bit k of `code` stands for the pair (k / n, k % n).
  static Relation from_code(std::size_t n, std::uint64_t code) {
    if (n * n > 64) throw ModelError("relation code needs n*n <= 64");
    Relation r(n);
    for (std::size_t k = 0; k < n * n; ++k)
      if ((code >> k) & 1U) r.rows_[k / n] |= std::uint64_t{1} << (k % n);
    return r;
  }

  std::uint64_t code() const {
    if (n_ * n_ > 64) throw ModelError("relation code needs n*n <= 64");
    std::uint64_t c = 0;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (test(x, y)) c |= std::uint64_t{1} << (x * n_ + y);
    return c;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1U; }
  void set(std::size_t x, std::size_t y) {
    if (x >= n_ || y >= n_) throw ModelError("relation pair outside its universe");
    rows_[x] |= std::uint64_t{1} << y;
  }

  WorldSet successors(std::size_t x) const { return WorldSet(rows_[x]); }
  void set_successors(std::size_t x, WorldSet s) { rows_[x] = (s & WorldSet::full(n_)).bits(); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y : successors(x)) out.emplace_back(x, y);
    return out;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (std::size_t x = 0; x < n_; ++x) c += successors(x).size();
    return c;
  }

  bool empty() const { return pair_count() == 0; }

  friend bool operator==(const Relation& a, const Relation& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

namespace detail {

inline void require_same_universe(const Relation& r, const Relation& q) {
  if (r.universe() != q.universe()) throw ModelError("relations over different world universes");
}

}  // namespace detail

inline Relation union_rel(const Relation& r, const Relation& q) {
  detail::require_same_universe(r, q);
  Relation out(r.universe());
  for (std::size_t x = 0; x < r.universe(); ++x) out.set_successors(x, r.successors(x) | q.successors(x));
  return out;
}

inline Relation intersection_rel(const Relation& r, const Relation& q) {
  detail::require_same_universe(r, q);
  Relation out(r.universe());
  for (std::size_t x = 0; x < r.universe(); ++x) out.set_successors(x, r.successors(x) & q.successors(x));
  return out;
}

// r is contained in q.
inline bool sub_rel(const Relation& r, const Relation& q) {
  detail::require_same_universe(r, q);
  for (std::size_t x = 0; x < r.universe(); ++x)
    if (!r.successors(x).subset_of(q.successors(x))) return false;
  return true;
}

// Keeps the pairs whose target lies in `targets`: r ∩ (W × targets).
inline Relation restrict_targets(const Relation& r, WorldSet targets) {
  Relation out(r.universe());
  for (std::size_t x = 0; x < r.universe(); ++x) out.set_successors(x, r.successors(x) & targets);
  return out;
}

// The restriction of r to `keep`, re-indexed onto 0..|keep|-1.
inline Relation restrict_rel(const Relation& r, WorldSet keep) {
  Relation out(keep.size());
  std::size_t i = 0;
  for (std::size_t x : keep) out.set_successors(i++, extract(r.successors(x), keep));
  return out;
}

inline bool is_reflexive(const Relation& r) {
  for (std::size_t x = 0; x < r.universe(); ++x)
    if (!r.test(x, x)) return false;
  return true;
}

inline bool is_transitive(const Relation& r) {
  for (std::size_t x = 0; x < r.universe(); ++x)
    for (std::size_t y : r.successors(x))
      if (!r.successors(y).subset_of(r.successors(x))) return false;
  return true;
}

// xRy and xRz imply yRz.
inline bool is_euclidean(const Relation& r) {
  for (std::size_t x = 0; x < r.universe(); ++x)
    for (std::size_t y : r.successors(x))
      if (!r.successors(x).subset_of(r.successors(y))) return false;
  return true;
}

// Least transitive relation containing r (Warshall).  Not reflexive.
inline Relation tc(const Relation& r) {
  Relation out = r;
  const std::size_t n = r.universe();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (out.test(i, k)) out.set_successors(i, out.successors(i) | out.successors(k));
  return out;
}

// Transitive closure read off its second-order definition: (x, y) is in the
// closure iff Q x y for every transitive Q containing r.  Enumerates all
// 2^(n*n) relations, so only small universes are accepted.
inline Relation tc_oracle(const Relation& r) {
  const std::size_t n = r.universe();
  if (n > 4) throw ModelError("tc_oracle supports at most 4 worlds");
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  std::uint64_t meet = count - 1;
  const std::uint64_t base = r.code();
  for (std::uint64_t code = 0; code < count; ++code) {
    if ((base & ~code) != 0) continue;
    if (!is_transitive(Relation::from_code(n, code))) continue;
    meet &= code;
  }
  return Relation::from_code(n, meet);
}

}  // namespace pal
