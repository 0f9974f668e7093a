#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

#ifndef HAMSYM_MAX_VERTICES
#define HAMSYM_MAX_VERTICES 64
#endif

namespace hamsym {

inline constexpr int kMaxVertices = HAMSYM_MAX_VERTICES;
static_assert(kMaxVertices == 64 || kMaxVertices == 128,
              "HAMSYM_MAX_VERTICES must be 64 or 128");

// Fixed-width set of vertex indices, one bit per vertex.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur != 0) return w * 64 + std::countr_zero(cur);
      if (++w >= kWords) return -1;
      cur = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t cur = words_[w];
      while (cur != 0) {
        f(w * 64 + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  // Removes every member of o.
  VertexSet& subtract(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet minus(VertexSet a, const VertexSet& b) { return a.subtract(b); }

  int count_and(const VertexSet& o) const {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }
  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

  std::uint64_t word(int w) const { return words_[w]; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace hamsym
