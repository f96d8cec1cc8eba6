#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquebound {

using Vertex = std::size_t;

/// Fixed-universe bitset over vertices [0, n). Used for adjacency rows and
/// candidate sets in the clique recursions.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  /// Clears every member <= v.
  void reset_through(Vertex v) {
    const std::size_t last = v >> 6;
    for (std::size_t w = 0; w < last && w < words_.size(); ++w) words_[w] = 0;
    if (last < words_.size())
      words_[last] &= (v & 63) == 63 ? 0 : ~std::uint64_t{0} << ((v & 63) + 1);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Lowest member, or universe() when empty.
  Vertex first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
  }

  /// Lowest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const {
    ++v;
    if (v >= universe_) return universe_;
    std::size_t w = v >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (bits) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w == words_.size()) return universe_;
      bits = words_[w];
    }
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// |this & other| without materializing the intersection.
  std::size_t intersection_count(const VertexSet &other) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return c;
  }

  bool is_subset_of(const VertexSet &other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  VertexSet &operator&=(const VertexSet &o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet &operator-=(const VertexSet &o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  friend bool operator==(const VertexSet &, const VertexSet &) = default;

  static VertexSet of(std::size_t universe, const std::vector<Vertex> &members) {
    VertexSet s(universe);
    for (auto v : members) s.set(v);
    return s;
  }

private:
  void trim() {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace cliquebound
