// Deterministic enumeration of all models over a fixed signature.
//
// Worlds are labelled w1..wn.  A model's index is a mixed-radix number whose
// digits are, most significant first, one relation per agent (declared
// order) and then one valuation per atom (declared order).
//
//   frame k:  relation digit is the n*n-bit relation code, bit k standing
//             for the pair (w_{k/n+1}, w_{k%n+1})
//   frame s5: relation digit indexes the set partitions of the worlds in
//             restricted-growth-string order
//   valuation digit: bit j set iff the atom holds at w_{j+1}

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "pal/model.hpp"

namespace pal {

enum class Frame { k, s5 };

inline const char* to_string(Frame f) { return f == Frame::k ? "K" : "S5"; }

inline std::vector<std::string> world_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

// Restricted growth strings of length n in lexicographic order: a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]).  Each one names a set partition.
inline std::vector<std::vector<int>> restricted_growth_strings(std::size_t n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int max_so_far) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= max_so_far + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(max_so_far, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

// Equivalence relations on n worlds, one per set partition, in RGS order.
inline std::vector<Relation> equivalence_relations(std::size_t n) {
  std::vector<Relation> out;
  for (const auto& rgs : restricted_growth_strings(n)) {
    Relation r(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rgs[x] == rgs[y]) r.set(x, y);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// All models with exactly n worlds over the given agents and atoms.
class ModelSpace {
 public:
  ModelSpace(std::size_t n, std::vector<std::string> agents, std::vector<std::string> atoms, Frame frame)
      : n_(n), agents_(std::move(agents)), atoms_(std::move(atoms)), frame_(frame), worlds_(world_names(n)) {
    if (n == 0) throw ScopeError("model enumeration needs at least one world");
    if (frame == Frame::s5) {
      equivalences_ = equivalence_relations(n);
      rel_radix_ = equivalences_.size();
    } else {
      if (n * n >= 64) throw ScopeError("K-frame enumeration supports at most 7 worlds");
      rel_radix_ = std::uint64_t{1} << (n * n);
    }
    val_radix_ = std::uint64_t{1} << n;
    size_ = 1;
    auto mul = [&](std::uint64_t f) {
      if (size_ > (std::uint64_t{1} << 62) / f) throw ScopeError("model space too large to index");
      size_ *= f;
    };
    for (std::size_t i = 0; i < agents_.size(); ++i) mul(rel_radix_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) mul(val_radix_);
  }

  std::size_t worlds() const { return n_; }
  Frame frame() const { return frame_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t relations_per_agent() const { return rel_radix_; }

  EpistemicModel at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("model index out of range");
    std::vector<WorldSet> val(atoms_.size());
    for (std::size_t i = atoms_.size(); i-- > 0;) {
      val[i] = WorldSet(index % val_radix_);
      index /= val_radix_;
    }
    std::vector<Relation> rels(agents_.size());
    for (std::size_t i = agents_.size(); i-- > 0;) {
      const std::uint64_t digit = index % rel_radix_;
      index /= rel_radix_;
      rels[i] = frame_ == Frame::s5 ? equivalences_[digit] : Relation::from_code(n_, digit);
    }
    return EpistemicModel(EpistemicModel::Trusted{}, worlds_, agents_, std::move(rels), atoms_, std::move(val));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EpistemicModel;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = EpistemicModel;

    iterator(const ModelSpace* s, std::uint64_t i) : space_(s), i_(i) {}
    EpistemicModel operator*() const { return space_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    std::uint64_t index() const { return i_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const ModelSpace* space_;
    std::uint64_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  std::size_t n_;
  std::vector<std::string> agents_;
  std::vector<std::string> atoms_;
  Frame frame_;
  std::vector<std::string> worlds_;
  std::vector<Relation> equivalences_;
  std::uint64_t rel_radix_ = 0;
  std::uint64_t val_radix_ = 0;
  std::uint64_t size_ = 0;
};

// Stream of every model with exactly n worlds, in index order.
inline ModelSpace enumerate_models(std::size_t n, std::vector<std::string> agents, std::vector<std::string> atoms,
                                   Frame frame) {
  return ModelSpace(n, std::move(agents), std::move(atoms), frame);
}

}  // namespace pal
