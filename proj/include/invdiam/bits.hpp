#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "invdiam/error.hpp"

namespace invdiam {

namespace detail {

// Fixed-length bit vector packed into 64-bit words. Bits past size() are
// always zero so word-wise comparisons and popcounts stay exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  void complement() noexcept {
    for (Word& w : words_) w = ~w;
    trim();
  }
  void xor_with(const BitVector& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  }
  void and_with(const BitVector& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void or_with(const BitVector& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  void and_not(const BitVector& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  bool intersects(const BitVector& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  // Calls f(i) for every set bit in increasing order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(w * kWordBits + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Bit i is character i.
  std::string to_string() const {
    std::string s(size_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  // Only valid for size() <= 64.
  std::uint64_t to_u64() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace detail

struct OrientationTag {};
struct EdgeMaskTag {};

// Bit vector indexed by the edge indices of a host graph. The tag keeps
// orientations and edge sets from being mixed up: an Orientation XOR an
// EdgeMask is an Orientation, two Orientations only combine via
// disagreement().
template <class Tag>
class EdgeBits {
 public:
  EdgeBits() = default;
  explicit EdgeBits(std::size_t edge_count) : bits_(edge_count) {}

  static EdgeBits zeros(std::size_t edge_count) { return EdgeBits(edge_count); }
  static EdgeBits ones(std::size_t edge_count) {
    EdgeBits b(edge_count);
    b.bits_.complement();
    return b;
  }
  static EdgeBits from_u64(std::size_t edge_count, std::uint64_t value) {
    EdgeBits b(edge_count);
    for (std::size_t i = 0; i < edge_count && i < 64; ++i) {
      if ((value >> i) & 1U) b.set(i);
    }
    return b;
  }
  static EdgeBits from_indices(std::size_t edge_count, const std::vector<std::size_t>& idx) {
    EdgeBits b(edge_count);
    for (std::size_t i : idx) {
      if (i >= edge_count) throw Error("edge index " + std::to_string(i) + " out of range");
      b.set(i);
    }
    return b;
  }
  // Parses a string over {0,1}; character i is bit i.
  static EdgeBits from_string(std::string_view s) {
    EdgeBits b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        b.set(i);
      } else if (s[i] != '0') {
        throw Error(std::string("invalid bit character '") + s[i] + "'");
      }
    }
    return b;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool test(std::size_t i) const { return bits_.test(i); }
  void set(std::size_t i, bool v = true) { bits_.set(i, v); }
  void flip(std::size_t i) { bits_.flip(i); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool any() const noexcept { return bits_.any(); }
  bool none() const noexcept { return bits_.none(); }
  bool intersects(const EdgeBits& o) const { return bits_.intersects(o.bits_); }
  std::vector<std::size_t> indices() const { return bits_.indices(); }
  std::string to_string() const { return bits_.to_string(); }
  std::uint64_t to_u64() const noexcept { return bits_.to_u64(); }
  template <class F>
  void for_each_set(F&& f) const {
    bits_.for_each_set(std::forward<F>(f));
  }

  EdgeBits complemented() const {
    EdgeBits r = *this;
    r.bits_.complement();
    return r;
  }

  EdgeBits& operator^=(const EdgeBits<EdgeMaskTag>& m) {
    check_same_size(m.size());
    bits_.xor_with(m.raw());
    return *this;
  }

  // Only meaningful for masks; restricted at compile time.
  EdgeBits& operator&=(const EdgeBits& o) requires std::is_same_v<Tag, EdgeMaskTag> {
    check_same_size(o.size());
    bits_.and_with(o.bits_);
    return *this;
  }
  EdgeBits& operator|=(const EdgeBits& o) requires std::is_same_v<Tag, EdgeMaskTag> {
    check_same_size(o.size());
    bits_.or_with(o.bits_);
    return *this;
  }
  EdgeBits& subtract(const EdgeBits& o) requires std::is_same_v<Tag, EdgeMaskTag> {
    check_same_size(o.size());
    bits_.and_not(o.bits_);
    return *this;
  }

  const detail::BitVector& raw() const noexcept { return bits_; }

  friend bool operator==(const EdgeBits&, const EdgeBits&) = default;

 private:
  template <class>
  friend class EdgeBits;

  void check_same_size(std::size_t other) const {
    if (other != size()) {
      throw Error("edge bit vectors of different lengths (" + std::to_string(size()) + " vs " +
                  std::to_string(other) + ")");
    }
  }

  detail::BitVector bits_;
};

using Orientation = EdgeBits<OrientationTag>;
using EdgeMask = EdgeBits<EdgeMaskTag>;

inline Orientation operator^(Orientation o, const EdgeMask& m) { return o ^= m; }
inline EdgeMask operator^(EdgeMask a, const EdgeMask& b) { return a ^= b; }
inline EdgeMask operator&(EdgeMask a, const EdgeMask& b) { return a &= b; }
inline EdgeMask operator|(EdgeMask a, const EdgeMask& b) { return a |= b; }

// Edges on which two orientations disagree.
inline EdgeMask disagreement(const Orientation& a, const Orientation& b) {
  if (a.size() != b.size()) throw Error("orientations belong to different host graphs");
  EdgeMask m(a.size());
  // Both raw vectors have identical word layout.
  const auto& wa = a.raw().words();
  const auto& wb = b.raw().words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    auto diff = wa[w] ^ wb[w];
    while (diff) {
      const int bit = std::countr_zero(diff);
      m.set(w * detail::BitVector::kWordBits + static_cast<std::size_t>(bit));
      diff &= diff - 1;
    }
  }
  return m;
}

inline Orientation converse(const Orientation& o) { return o.complemented(); }

}  // namespace invdiam
