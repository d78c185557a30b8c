#include "tricolor/vertex_set.hpp"

#include <cassert>

#include "tricolor/errors.hpp"

namespace tricolor {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  s.size_ = universe;
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::vector<std::uint64_t> words) {
  assert(words.size() == word_count(universe));
  VertexSet s;
  s.universe_ = universe;
  s.words_ = std::move(words);
  s.recount();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw VertexOutOfRange(v, universe_);
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
  size_ = 0;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  return and_count(words_, o.words_);
}

std::optional<Vertex> VertexSet::first() const {
  auto it = begin();
  if (it == end()) return std::nullopt;
  return *it;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v : *this) out.push_back(v);
  return out;
}

void VertexSet::recount() {
  size_ = 0;
  for (auto w : words_) size_ += std::popcount(w);
}

void VertexSet::iterator::advance(std::size_t from) {
  const std::size_t n = set_->universe_;
  if (from >= n) {
    pos_ = n;
    return;
  }
  std::size_t wi = from >> 6;
  std::uint64_t w = set_->words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (w == 0) {
    if (++wi >= set_->words_.size()) {
      pos_ = n;
      return;
    }
    w = set_->words_[wi];
  }
  pos_ = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
}

}  // namespace tricolor
