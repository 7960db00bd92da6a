#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "freeinv/group.hpp"

namespace freeinv {

class CountingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational function num(z)/den(z) with complex coefficients, lowest degree first.
struct RationalSeries {
  std::vector<Complex> num;
  std::vector<Complex> den;

  // Taylor coefficients 0..n by long division; requires den[0] != 0.
  std::vector<Complex> expand(int n) const;
};

struct CountReport {
  int max_degree = 0;
  std::vector<std::int64_t> f;  // invariant dimensions per degree
  std::vector<std::int64_t> g;  // generator counts per degree
  RationalSeries closed_form;   // g(z)
};

// f_n = (1/|G|) sum_classes #C chi^n, rounded; throws unless within 1e-6 of a nonnegative integer.
std::vector<std::int64_t> f_coefficients(const Character& chi, int max_degree);

// g_n = f_n - sum_{k=1}^{n-1} g_k f_{n-k}, the inverse of f = 1/(1-g).
std::vector<std::int64_t> g_from_f(std::span<const std::int64_t> f);

// g(z) = 1 - |G| prod_s (1 - chi_s z) / sum_t #C_t prod_{s != t} (1 - chi_s z),
// over one common denominator normalized to den(0) = 1 with negligible top
// coefficients trimmed. Repeated character values are kept as they are.
RationalSeries closed_form(const Character& chi);

// f, g and the closed form, with the closed form's expansion checked against g to 1e-8.
CountReport count(const Character& chi, int max_degree);

}  // namespace freeinv
