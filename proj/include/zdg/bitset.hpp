#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdg {

/// Fixed-capacity bitset with word-parallel set algebra.
///
/// Capacity is chosen at construction and rounded up to a multiple of 64.
/// Binary operations require both operands to share the same capacity.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    b.set_all();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept {
    words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }
  void set_all() noexcept {
    for (auto& w : words_) w = ~word_type{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t intersection_count(const Bitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this := this \ o
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset difference(Bitset a, const Bitset& b) noexcept {
    return a.subtract(b);
  }
  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  /// Lowest set index at or after `from`, or npos.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t wi = from / kWordBits;
    word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i != npos; i = next(i + 1)) out.push_back(i);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

 private:
  void trim() noexcept {
    if (std::size_t r = size_ % kWordBits; r != 0 && !words_.empty())
      words_.back() &= (word_type{1} << r) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace zdg
