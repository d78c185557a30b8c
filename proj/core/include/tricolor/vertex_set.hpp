#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "tricolor/types.hpp"

namespace tricolor {

// Bitset-backed subset of {0, ..., universe-1}. Iteration is in ascending
// vertex order. Binary operations require equal universes.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    iterator& operator++() {
      advance(pos_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    friend class VertexSet;
    iterator(const VertexSet* set, std::size_t start) : set_(set) { advance(start); }
    void advance(std::size_t from);

    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_words(std::size_t universe, std::vector<std::uint64_t> words);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  std::size_t intersection_size(const VertexSet& o) const;

  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  iterator begin() const { return iterator(this, 0); }
  iterator end() const {
    iterator it;
    it.set_ = this;
    it.pos_ = universe_;
    return it;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void recount();

  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

// popcount(a & b) over raw word spans of equal length.
inline std::size_t and_count(std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace tricolor
