#include "cliquedyn/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> row) {
  VertexSet s(universe);
  std::copy_n(row.begin(), std::min(row.size(), s.words_.size()), s.words_.begin());
  if (universe % kWordBits != 0 && !s.words_.empty())
    s.words_.back() &= (Word{1} << (universe % kWordBits)) - 1;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % kWordBits != 0 && !s.words_.empty())
    s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
  return s;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_)
    throw DomainError("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  bits::set(words_, v);
}

void VertexSet::erase(std::size_t v) {
  if (v < universe_) bits::reset(words_, v);
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  bits::for_each(words_, [&](std::size_t v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::first() const {
  std::size_t v = bits::next(words_, 0);
  return v < universe_ ? v : universe_;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}
VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& o) const {
  // Walk both member lists in step without materializing them.
  std::size_t a = bits::next(words_, 0);
  std::size_t b = bits::next(o.words_, 0);
  const std::size_t end_a = words_.size() * kWordBits;
  const std::size_t end_b = o.words_.size() * kWordBits;
  while (a < end_a && b < end_b) {
    if (a != b) return a <=> b;
    a = bits::next(words_, a + 1);
    b = bits::next(o.words_, b + 1);
  }
  if (a < end_a) return std::strong_ordering::greater;
  if (b < end_b) return std::strong_ordering::less;
  return universe_ <=> o.universe_;
}

}  // namespace cliquedyn
