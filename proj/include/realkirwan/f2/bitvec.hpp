#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace realkirwan::f2 {

/// Dense vector over the two-element field, packed 64 entries per word.
class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  /// Index of the lowest set bit at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  /// Copies `len` bits starting at `from` into a new vector.
  BitVec slice(std::size_t from, std::size_t len) const;
  /// Writes `src` into this vector starting at bit `offset`, XOR-ing.
  void xor_at(std::size_t offset, const BitVec& src);

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const BitVec&) const = default;
  std::strong_ordering operator<=>(const BitVec&) const = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace realkirwan::f2
