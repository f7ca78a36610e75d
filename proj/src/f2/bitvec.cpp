#include "realkirwan/f2/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace realkirwan::f2 {

BitVec& BitVec::operator^=(const BitVec& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= nbits_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) {
      const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return i < nbits_ ? i : npos;
    }
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

BitVec BitVec::slice(std::size_t from, std::size_t len) const {
  BitVec out(len);
  for (std::size_t i = find_next(from); i != npos && i < from + len; i = find_next(i + 1)) out.set(i - from);
  return out;
}

void BitVec::xor_at(std::size_t offset, const BitVec& src) {
  for (std::size_t i = src.find_first(); i != npos; i = src.find_next(i + 1)) flip(offset + i);
}

}  // namespace realkirwan::f2
