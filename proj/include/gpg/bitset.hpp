#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gpg {

// Fixed-length bitset sized at runtime. The graph and power-graph kernels
// need word-level AND/popcount without temporaries, which is why this is not
// std::vector<bool>.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  std::size_t and_count(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }

  // True when the intersection has more than `limit` members; stops early.
  bool and_count_exceeds(const Bitset& other, std::size_t limit) const noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      c += std::popcount(words_[k] & other.words_[k]);
      if (c > limit) return true;
    }
    return false;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  bool none() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) f(k * 64 + std::countr_zero(w));
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gpg
