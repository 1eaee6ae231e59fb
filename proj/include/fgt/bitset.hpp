#ifndef FGT_BITSET_HPP_
#define FGT_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fgt {

/// Fixed-length bitset sized at runtime; the membership substrate for subgroups.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bits& operator&=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }

  std::size_t intersection_count(const Bits& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return c;
  }

  bool is_subset_of(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool all() const noexcept { return count() == n_; }

  friend bool operator==(const Bits& a, const Bits& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const Bits& a, const Bits& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t x = a.words_[i] ^ b.words_[i];
      if (x == 0) continue;
      // Lowest differing index decides; whoever holds it has the smaller list.
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(x));
      return (a.words_[i] >> bit) & 1u;
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(word));
        f(static_cast<std::uint16_t>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint16_t> to_vector() const {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for_each([&](std::uint16_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

}  // namespace fgt

#endif  // FGT_BITSET_HPP_
