#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cliquedyn {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

// Word-parallel helpers shared by the hot loops. All spans must be of equal
// length; bits beyond the universe are kept zero by every producer.
namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}
inline void set(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}
inline void reset(std::span<Word> w, std::size_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// Index of the lowest set bit at or after `from`, or `npos` (== size*64).
inline std::size_t next(std::span<const Word> w, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= w.size()) return w.size() * kWordBits;
  Word cur = w[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++wi == w.size()) return w.size() * kWordBits;
    cur = w[wi];
  }
}

/// Calls f(i) for every set bit, in increasing order.
template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    Word cur = w[wi];
    while (cur) {
      f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      cur &= cur - 1;
    }
  }
}

}  // namespace bits

/// A subset of {0, ..., universe-1}, stored as one bit row.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);
  VertexSet(std::size_t universe, std::span<const std::size_t> members);

  static VertexSet full(std::size_t universe);
  /// Adopts a raw bit row; bits at or beyond `universe` are cleared.
  static VertexSet from_words(std::size_t universe, std::span<const Word> row);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return bits::count(words_); }
  bool empty() const { return !bits::any(words_); }

  bool contains(std::size_t v) const {
    return v < universe_ && bits::test(words_, v);
  }
  void insert(std::size_t v);
  void erase(std::size_t v);

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::vector<std::size_t> members() const;
  /// Smallest member, or universe() when empty.
  std::size_t first() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const {
    return bits::intersects(words_, other.words_);
  }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;
  /// Lexicographic order of the sorted member lists.
  std::strong_ordering operator<=>(const VertexSet& o) const;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace cliquedyn
