#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsetlin {

// Fixed-width bit vector packed into 64-bit words. Bits beyond size()
// are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_bits_; }
  std::size_t num_words() const { return words_.size(); }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    if (v)
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::uint64_t* data() { return words_.data(); }
  const std::uint64_t* data() const { return words_.data(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool operator==(const BitVector& o) const = default;

 private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// A document as term-presence bits, with an optional class ordinal.
struct BitDocument {
  BitVector bits;
  std::optional<int> label;
};

}  // namespace tsetlin
