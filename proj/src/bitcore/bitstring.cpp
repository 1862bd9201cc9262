#include "parbb/bitstring.hpp"

#include "parbb/errors.hpp"

namespace parbb {

BitString::BitString(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, Word{0}) {
  if (n == 0) throw DomainError("bit string length must be at least 1");
}

BitString BitString::ones(std::size_t n) {
  BitString x(n);
  x.flip_all();
  return x;
}

BitString BitString::from_string(std::string_view text) {
  BitString x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      x.set(i, true);
    else if (text[i] != '0')
      throw DomainError("bit string literal may only contain '0' and '1'");
  }
  return x;
}

void BitString::flip_all() noexcept {
  for (auto& w : words_) w = ~w;
  clear_padding();
}

void BitString::clear_padding() noexcept {
  const std::size_t tail = n_ % kWordBits;
  if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitString::leading_ones() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) {
    const auto run = static_cast<std::size_t>(std::countr_one(w));
    total += run;
    if (run < kWordBits) break;
  }
  return total < n_ ? total : n_;
}

std::size_t BitString::leading_zeros() const noexcept {
  std::size_t total = 0;
  for (const Word w : words_) {
    const auto run = static_cast<std::size_t>(std::countr_zero(w));
    total += run;
    if (run < kWordBits) break;
  }
  return total < n_ ? total : n_;
}

std::string BitString::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out[i] = '1';
  return out;
}

std::size_t BitString::hash() const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ n_;
  for (const Word w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t BitString::to_index() const {
  if (n_ > kWordBits) throw CapacityError("to_index requires n <= 64");
  return words_[0];
}

BitString BitString::from_index(std::size_t n, std::uint64_t index) {
  if (n > kWordBits) throw CapacityError("from_index requires n <= 64");
  BitString x(n);
  x.words_[0] = index;
  x.clear_padding();
  return x;
}

BitString complement(const BitString& x) {
  BitString y = x;
  y.flip_all();
  return y;
}

std::size_t hamming_distance(const BitString& x, const BitString& y) {
  if (x.size() != y.size())
    throw DimensionError("hamming_distance: lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " differ");
  const auto a = x.words();
  const auto b = y.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

}  // namespace parbb
