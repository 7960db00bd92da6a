#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freeinv {

using Letter = std::uint32_t;

// A free monomial x_{i1} x_{i2} ... x_{in} over an alphabet of size d.
//
// Letters are zero-based in code (x1 is letter 0) and one-based in text.
// The word is packed as its big-endian base-d code, so for a fixed degree
// the code is the position of the word in the lexicographic listing of
// all d^n words, which is also its index in a dense HomogeneousSlice.
// Words compare by degree first and then lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t alphabet_size);
  Word(std::size_t alphabet_size, std::span<const Letter> letters);
  static Word from_code(std::size_t alphabet_size, int degree, std::uint64_t code);
  static Word letter(std::size_t alphabet_size, Letter i);

  std::size_t alphabet_size() const { return alphabet_; }
  int degree() const { return degree_; }
  std::uint64_t code() const { return code_; }
  bool empty() const { return degree_ == 0; }

  std::vector<Letter> letters() const;
  Letter operator[](int position) const;

  Word concat(const Word& other) const;
  // Prefix of the first k letters and the matching suffix.
  Word prefix(int k) const;
  Word suffix_from(int k) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::uint64_t code_ = 0;
  std::uint32_t alphabet_ = 0;
  int degree_ = 0;
};

// d^n, throwing std::overflow_error when the word space does not fit a code.
std::uint64_t word_count(std::size_t alphabet_size, int degree);

}  // namespace freeinv
