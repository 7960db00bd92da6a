#include "freeinv/word.hpp"

#include <limits>
#include <stdexcept>

namespace freeinv {

std::uint64_t word_count(std::size_t alphabet_size, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::uint64_t n = 1;
  for (int k = 0; k < degree; ++k) {
    if (alphabet_size != 0 && n > std::numeric_limits<std::uint64_t>::max() / alphabet_size)
      throw std::overflow_error("word space d^n does not fit in 64 bits");
    n *= alphabet_size;
  }
  return n;
}

Word::Word(std::size_t alphabet_size) : alphabet_(static_cast<std::uint32_t>(alphabet_size)) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be at least 1");
}

Word::Word(std::size_t alphabet_size, std::span<const Letter> letters) : Word(alphabet_size) {
  word_count(alphabet_size, static_cast<int>(letters.size()));
  for (Letter l : letters) {
    if (l >= alphabet_size)
      throw std::out_of_range("letter x" + std::to_string(l + 1) + " outside alphabet of size " +
                              std::to_string(alphabet_size));
    code_ = code_ * alphabet_ + l;
  }
  degree_ = static_cast<int>(letters.size());
}

Word Word::from_code(std::size_t alphabet_size, int degree, std::uint64_t code) {
  Word w(alphabet_size);
  if (code >= word_count(alphabet_size, degree)) throw std::out_of_range("word code out of range");
  w.degree_ = degree;
  w.code_ = code;
  return w;
}

Word Word::letter(std::size_t alphabet_size, Letter i) {
  const Letter l[1] = {i};
  return Word(alphabet_size, l);
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out(degree_);
  std::uint64_t c = code_;
  for (int k = degree_ - 1; k >= 0; --k) {
    out[k] = static_cast<Letter>(c % alphabet_);
    c /= alphabet_;
  }
  return out;
}

Letter Word::operator[](int position) const {
  if (position < 0 || position >= degree_) throw std::out_of_range("word position");
  std::uint64_t c = code_ / word_count(alphabet_, degree_ - 1 - position);
  return static_cast<Letter>(c % alphabet_);
}

Word Word::concat(const Word& other) const {
  if (alphabet_ != other.alphabet_) throw std::invalid_argument("alphabet mismatch in concat");
  Word w(alphabet_);
  w.degree_ = degree_ + other.degree_;
  w.code_ = code_ * word_count(alphabet_, other.degree_) + other.code_;
  word_count(alphabet_, w.degree_);
  return w;
}

Word Word::prefix(int k) const {
  if (k < 0 || k > degree_) throw std::out_of_range("prefix length");
  return from_code(alphabet_, k, code_ / word_count(alphabet_, degree_ - k));
}

Word Word::suffix_from(int k) const {
  if (k < 0 || k > degree_) throw std::out_of_range("suffix start");
  const int len = degree_ - k;
  return from_code(alphabet_, len, code_ % word_count(alphabet_, len));
}

std::string Word::to_string(char var) const {
  if (degree_ == 0) return "1";
  std::string s;
  for (Letter l : letters()) {
    if (!s.empty()) s += '*';
    s += var;
    s += std::to_string(l + 1);
  }
  return s;
}

}  // namespace freeinv
