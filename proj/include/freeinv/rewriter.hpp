#pragma once

#include <string>

#include "freeinv/basis.hpp"

namespace freeinv {

inline constexpr double kDefaultRewriteTol = 1e-9;

// A free polynomial in the basis letters u_1..u_|Lambda|, tied to one basis.
struct HatPoly {
  FreePoly poly{1};
  std::string basis_fingerprint;
};

struct RewriteResult {
  HatPoly hat;
  double residual_norm = 0.0;
};

class RewriteError : public std::runtime_error {
 public:
  RewriteError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Sum of deg u_lambda over the letters of a hat word.
int weighted_degree(const Word& hat_word, const SuperorthoBasis& basis);

// Coefficients p_hat_w = <p_n, u_w> for every basis word of weighted degree n,
// obtained by peeling one basis element off the front of p_n at a time.
// Throws RewriteError when the residual p - expand(p_hat) exceeds
// tol * max(1, |p|) (p not invariant) or when deg p > basis.max_degree().
RewriteResult rewrite(const FreePoly& p, const SuperorthoBasis& basis, double tol = kDefaultRewriteTol);

// p_hat(u_1, ..., u_|Lambda|) expanded back into the letters x_1..x_d.
FreePoly expand(const HatPoly& hat, const SuperorthoBasis& basis);

}  // namespace freeinv
