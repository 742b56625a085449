#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

namespace isogame {

inline constexpr int kMaxVertices = 32;

// Vertex set as a single machine word. All engine state (dominated sets,
// white sets, played sets) lives in these, so the game search is pure bit
// algebra. Vertices are 0-indexed and capped at 32.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(uint32_t bits) { return VertexSet(bits); }
  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
  // {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static constexpr VertexSet of(std::initializer_list<int> vs) {
    uint32_t b = 0;
    for (int v : vs) b |= 1u << v;
    return VertexSet(b);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  // lowest-index member; sets are always iterated and tie-broken this way
  constexpr int lowest() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr void add(int v) { bits_ |= 1u << v; }
  constexpr void remove(int v) { bits_ &= ~(1u << v); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1u << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1u << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  // set difference
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  // iterates members in increasing index order
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr explicit iterator(uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    return s + "}";
  }

 private:
  constexpr explicit VertexSet(uint32_t bits) : bits_(bits) {}
  uint32_t bits_ = 0;
};

}  // namespace isogame
