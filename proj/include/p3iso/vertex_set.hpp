#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace p3iso {

/// Internal vertex label, 0-based. External I/O uses 1-based labels.
using Vertex = std::uint32_t;

/// A subset of the vertices 0..order-1 of some graph.
///
/// Orders up to 64 live in a single inline word; larger orders spill to the
/// heap. All binary operations require both operands to share the same order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t order)
      : order_(order), words_(word_count(order), 0) {}
  VertexSet(std::size_t order, std::initializer_list<Vertex> members)
      : VertexSet(order) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t order) {
    VertexSet s(order);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet from_range(std::size_t order, const Range& members) {
    VertexSet s(order);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t order() const { return order_; }

  bool contains(Vertex v) const {
    return v < order_ && ((words_[v >> 6] >> (v & 63)) & 1ULL) != 0;
  }
  void insert(Vertex v) {
    assert(v < order_);
    words_[v >> 6] |= 1ULL << (v & 63);
  }
  void erase(Vertex v) {
    assert(v < order_);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(o.order_ == order_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(o.order_ == order_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(o.order_ == order_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement relative to 0..order-1.
  VertexSet complement() const {
    VertexSet s(order_);
    for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    assert(o.order_ == order_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    assert(o.order_ == order_);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(o.order_ == order_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  /// Smallest member, if any.
  std::optional<Vertex> first() const { return next_from(0); }
  /// Smallest member >= from, if any.
  std::optional<Vertex> next_from(Vertex from) const {
    if (from >= order_) return std::nullopt;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~0ULL << (from & 63));
    while (true) {
      if (word != 0)
        return static_cast<Vertex>((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      if (++w >= words_.size()) return std::nullopt;
      word = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(static_cast<Vertex>((w << 6) + static_cast<std::size_t>(std::countr_zero(word))));
        word &= word - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// Lexicographic comparison of the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto va = a.to_vector(), vb = b.to_vector();
    return va < vb;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.order_ == b.order_ && a.words_ == b.words_;
  }

  /// Raw word access for the n <= 64 fast paths.
  std::uint64_t word(std::size_t i = 0) const { return words_[i]; }

 private:
  static std::size_t word_count(std::size_t order) { return (order + 63) / 64 == 0 ? 1 : (order + 63) / 64; }
  void trim() {
    if (order_ % 64 != 0) words_.back() &= (1ULL << (order_ % 64)) - 1;
    if (order_ == 0) words_.back() = 0;
  }

  std::size_t order_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_ = {0};
};

}  // namespace p3iso
