#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parbb {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64. Padding bits above n in the
/// last word are always zero, so word-wise equality, popcount and XOR are
/// exact without masking at the call site.
class BitString {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// All-zero string of length n. Throws DomainError for n == 0.
  explicit BitString(std::size_t n);

  static BitString zeros(std::size_t n) { return BitString(n); }
  static BitString ones(std::size_t n);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitString from_string(std::string_view text);

  /// Uniform sample from {0,1}^n.
  template <class URBG>
  static BitString random(std::size_t n, URBG& gen) {
    BitString x(n);
    for (auto& w : x.words_) w = static_cast<Word>(gen());
    x.clear_padding();
    return x;
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  bool operator[](std::size_t i) const noexcept { return test(i); }
  void set(std::size_t i, bool value) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void flip_all() noexcept;

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return n_ - count_ones(); }
  std::size_t leading_ones() const noexcept;
  std::size_t leading_zeros() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  /// Interprets bits 0..n-1 as a little-endian integer; requires n <= 64.
  std::uint64_t to_index() const;
  static BitString from_index(std::size_t n, std::uint64_t index);

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  void clear_padding() noexcept;

  std::size_t n_;
  std::vector<Word> words_;
};

/// Every bit inverted.
BitString complement(const BitString& x);

/// |{i : x_i != y_i}|. Throws DimensionError on length mismatch.
std::size_t hamming_distance(const BitString& x, const BitString& y);

struct BitStringHash {
  std::size_t operator()(const BitString& x) const noexcept { return x.hash(); }
};

}  // namespace parbb
