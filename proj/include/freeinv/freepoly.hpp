#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "freeinv/word.hpp"

namespace freeinv {

using Complex = std::complex<double>;

// Coefficients below this magnitude are dropped after every arithmetic step.
inline constexpr double kDropTolerance = 1e-14;
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(std::size_t a, std::size_t b);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Term {
  Word word;
  Complex coeff;
};

// Degree-n part of H^2_d as a dense vector of d^n coefficients in lexicographic word order.
struct HomogeneousSlice {
  int degree = 0;
  std::size_t alphabet_size = 1;
  Eigen::VectorXcd coeffs;

  HomogeneousSlice() = default;
  HomogeneousSlice(std::size_t alphabet_size, int degree);
  HomogeneousSlice(std::size_t alphabet_size, int degree, Eigen::VectorXcd coeffs);
};

// An element of C<x_1..x_d>: a finite sparse sum of words, stored sorted by the
// graded-lexicographic word order with no coefficient below kDropTolerance.
class FreePoly {
 public:
  explicit FreePoly(std::size_t alphabet_size);
  FreePoly(std::size_t alphabet_size, std::vector<Term> terms);

  static FreePoly constant(std::size_t alphabet_size, Complex c);
  static FreePoly monomial(const Word& w, Complex c = 1.0);
  // x_{i+1}; the letter index is zero-based.
  static FreePoly variable(std::size_t alphabet_size, Letter i);
  static FreePoly from_slice(const HomogeneousSlice& slice);

  std::size_t alphabet_size() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  Complex coeff(const Word& w) const;
  // Sorted list of degrees that carry at least one term.
  std::vector<int> degrees() const;
  FreePoly homogeneous_part(int n) const;

  FreePoly operator-() const;
  FreePoly& operator+=(const FreePoly& q);
  FreePoly& operator-=(const FreePoly& q);
  FreePoly& operator*=(Complex s);

  friend bool operator==(const FreePoly& a, const FreePoly& b);

 private:
  std::size_t alphabet_;
  std::vector<Term> terms_;
};

FreePoly add(const FreePoly& p, const FreePoly& q);
FreePoly sub(const FreePoly& p, const FreePoly& q);
FreePoly mul(const FreePoly& p, const FreePoly& q);
FreePoly scale(const FreePoly& p, Complex s);

inline FreePoly operator+(const FreePoly& p, const FreePoly& q) { return add(p, q); }
inline FreePoly operator-(const FreePoly& p, const FreePoly& q) { return sub(p, q); }
inline FreePoly operator*(const FreePoly& p, const FreePoly& q) { return mul(p, q); }
inline FreePoly operator*(Complex s, const FreePoly& p) { return scale(p, s); }
inline FreePoly operator*(const FreePoly& p, Complex s) { return scale(p, s); }

HomogeneousSlice homogeneous_component(const FreePoly& p, int n);

// <p, q> = sum_w p_w conj(q_w).
Complex inner_product(const FreePoly& p, const FreePoly& q);
double norm(const FreePoly& p);
double max_abs_coeff(const FreePoly& p);

// Text form, see README for the grammar. `var` selects the variable prefix
// (`x` for polynomials in the letters, `u` for polynomials over a basis).
FreePoly parse(std::string_view text, std::size_t alphabet_size, char var = 'x');
// Parses with the alphabet sized to the largest variable index that occurs (at least 1).
FreePoly parse_infer(std::string_view text, char var = 'x');
std::string format(const FreePoly& p, char var = 'x');
std::string format_complex(Complex c);

}  // namespace freeinv
