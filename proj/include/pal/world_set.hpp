#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace pal {

// Models are limited to 64 worlds so that a set of worlds fits in one word.
inline constexpr std::size_t kMaxWorlds = 64;

// Set of world indices in a model's fixed world order.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet full(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr WorldSet single(std::size_t w) { return WorldSet(std::uint64_t{1} << w); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t w) const { return (bits_ >> w) & 1U; }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  // Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr WorldSet with(std::size_t w) const { return WorldSet(bits_ | (std::uint64_t{1} << w)); }
  constexpr WorldSet without(std::size_t w) const { return WorldSet(bits_ & ~(std::uint64_t{1} << w)); }

  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return WorldSet(a.bits_ | b.bits_); }
  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(WorldSet a, WorldSet b) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Scatters the low bits of `packed` onto the members of `mask`, in order.
// Maps a set over a restricted model back to the indices of the original.
constexpr WorldSet deposit(WorldSet packed, WorldSet mask) {
  std::uint64_t out = 0;
  std::uint64_t src = packed.bits();
  for (std::uint64_t m = mask.bits(); m != 0; m &= m - 1, src >>= 1)
    if (src & 1U) out |= m & (~m + 1);
  return WorldSet(out);
}

// Inverse of deposit: gathers the members of `s` that lie in `mask` into
// consecutive low bits.
constexpr WorldSet extract(WorldSet s, WorldSet mask) {
  std::uint64_t out = 0;
  std::size_t k = 0;
  for (std::uint64_t m = mask.bits(); m != 0; m &= m - 1, ++k)
    if (s.bits() & m & (~m + 1)) out |= std::uint64_t{1} << k;
  return WorldSet(out);
}

// The set of worlds an evaluation is relativized to.  May be empty.
using EvaluationDomain = WorldSet;

}  // namespace pal
