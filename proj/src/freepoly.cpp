#include "freeinv/freepoly.hpp"

#include <algorithm>
#include <cmath>

namespace freeinv {

namespace {

void check_alphabet(const FreePoly& p, const FreePoly& q) {
  if (p.alphabet_size() != q.alphabet_size()) throw AlphabetMismatch(p.alphabet_size(), q.alphabet_size());
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().word == t.word)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return std::abs(t.coeff) < kDropTolerance; });
  return out;
}

}  // namespace

AlphabetMismatch::AlphabetMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("alphabet mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

HomogeneousSlice::HomogeneousSlice(std::size_t d, int n)
    : degree(n), alphabet_size(d), coeffs(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(word_count(d, n)))) {}

HomogeneousSlice::HomogeneousSlice(std::size_t d, int n, Eigen::VectorXcd c)
    : degree(n), alphabet_size(d), coeffs(std::move(c)) {
  if (static_cast<std::uint64_t>(coeffs.size()) != word_count(d, n))
    throw std::invalid_argument("slice length must be d^n");
}

FreePoly::FreePoly(std::size_t alphabet_size) : alphabet_(alphabet_size) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be at least 1");
}

FreePoly::FreePoly(std::size_t alphabet_size, std::vector<Term> terms) : FreePoly(alphabet_size) {
  for (const auto& t : terms)
    if (t.word.alphabet_size() != alphabet_size) throw AlphabetMismatch(t.word.alphabet_size(), alphabet_size);
  terms_ = canonicalize(std::move(terms));
}

FreePoly FreePoly::constant(std::size_t d, Complex c) { return FreePoly(d, {{Word(d), c}}); }

FreePoly FreePoly::monomial(const Word& w, Complex c) { return FreePoly(w.alphabet_size(), {{w, c}}); }

FreePoly FreePoly::variable(std::size_t d, Letter i) { return monomial(Word::letter(d, i)); }

FreePoly FreePoly::from_slice(const HomogeneousSlice& s) {
  std::vector<Term> terms;
  for (Eigen::Index k = 0; k < s.coeffs.size(); ++k)
    if (std::abs(s.coeffs[k]) >= kDropTolerance)
      terms.push_back({Word::from_code(s.alphabet_size, s.degree, static_cast<std::uint64_t>(k)), s.coeffs[k]});
  return FreePoly(s.alphabet_size, std::move(terms));
}

int FreePoly::degree() const { return terms_.empty() ? kZeroDegree : terms_.back().word.degree(); }

int FreePoly::min_degree() const { return terms_.empty() ? kZeroDegree : terms_.front().word.degree(); }

bool FreePoly::is_homogeneous() const { return degree() == min_degree(); }

Complex FreePoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.word < key; });
  return (it != terms_.end() && it->word == w) ? it->coeff : Complex{};
}

std::vector<int> FreePoly::degrees() const {
  std::vector<int> out;
  for (const auto& t : terms_)
    if (out.empty() || out.back() != t.word.degree()) out.push_back(t.word.degree());
  return out;
}

FreePoly FreePoly::homogeneous_part(int n) const {
  FreePoly out(alphabet_);
  for (const auto& t : terms_)
    if (t.word.degree() == n) out.terms_.push_back(t);
  return out;
}

FreePoly FreePoly::operator-() const { return scale(*this, -1.0); }

FreePoly& FreePoly::operator+=(const FreePoly& q) { return *this = add(*this, q); }
FreePoly& FreePoly::operator-=(const FreePoly& q) { return *this = sub(*this, q); }
FreePoly& FreePoly::operator*=(Complex s) { return *this = scale(*this, s); }

bool operator==(const FreePoly& a, const FreePoly& b) {
  if (a.alphabet_ != b.alphabet_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].word != b.terms_[k].word || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  return true;
}

FreePoly add(const FreePoly& p, const FreePoly& q) {
  check_alphabet(p, q);
  std::vector<Term> terms = p.terms();
  terms.insert(terms.end(), q.terms().begin(), q.terms().end());
  return FreePoly(p.alphabet_size(), std::move(terms));
}

FreePoly sub(const FreePoly& p, const FreePoly& q) { return add(p, scale(q, -1.0)); }

FreePoly scale(const FreePoly& p, Complex s) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) t.coeff *= s;
  return FreePoly(p.alphabet_size(), std::move(terms));
}

FreePoly mul(const FreePoly& p, const FreePoly& q) {
  check_alphabet(p, q);
  std::vector<Term> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) terms.push_back({a.word.concat(b.word), a.coeff * b.coeff});
  return FreePoly(p.alphabet_size(), std::move(terms));
}

HomogeneousSlice homogeneous_component(const FreePoly& p, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  HomogeneousSlice s(p.alphabet_size(), n);
  for (const auto& t : p.terms())
    if (t.word.degree() == n) s.coeffs[static_cast<Eigen::Index>(t.word.code())] = t.coeff;
  return s;
}

Complex inner_product(const FreePoly& p, const FreePoly& q) {
  check_alphabet(p, q);
  Complex acc{};
  auto i = p.terms().begin();
  auto j = q.terms().begin();
  while (i != p.terms().end() && j != q.terms().end()) {
    if (i->word < j->word) {
      ++i;
    } else if (j->word < i->word) {
      ++j;
    } else {
      acc += i->coeff * std::conj(j->coeff);
      ++i;
      ++j;
    }
  }
  return acc;
}

double norm(const FreePoly& p) {
  double s = 0.0;
  for (const auto& t : p.terms()) s += std::norm(t.coeff);
  return std::sqrt(s);
}

double max_abs_coeff(const FreePoly& p) {
  double m = 0.0;
  for (const auto& t : p.terms()) m = std::max(m, std::abs(t.coeff));
  return m;
}

}  // namespace freeinv
