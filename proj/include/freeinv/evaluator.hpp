#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeinv/basis.hpp"
#include "freeinv/rewriter.hpp"

namespace freeinv {

// A tuple of square matrices of one size.
class OperatorTuple {
 public:
  OperatorTuple() = default;
  explicit OperatorTuple(std::vector<Matrix> entries);
  static OperatorTuple zeros(std::size_t count, Eigen::Index m);

  std::size_t size() const { return entries_.size(); }
  Eigen::Index matrix_size() const { return m_; }
  const Matrix& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Matrix>& entries() const { return entries_; }

 private:
  std::vector<Matrix> entries_;
  Eigen::Index m_ = 0;
};

struct RowBallCertificate {
  double max_eigenvalue = 0.0;  // of sum X_i X_i^*
  double margin = 0.0;          // 1 - max_eigenvalue
  bool strict = false;          // margin > 0
};

// sum_i X_i X_i^*.
Matrix row_gram(const OperatorTuple& x);
RowBallCertificate certify_row_ball(const OperatorTuple& x);

// p(X): x_i -> X_i, the empty word -> identity.
Matrix eval(const FreePoly& p, const OperatorTuple& x);

// d complex Gaussian m x m matrices scaled so that sum X_i X_i^* has top
// eigenvalue exactly 1 - margin. Deterministic in (seed).
OperatorTuple sample_row_contraction(std::size_t d, Eigen::Index m, double margin, std::uint64_t seed);

// Phi(X) = (u_lambda(X)) over elements of degree <= max_degree.
OperatorTuple basis_image(const SuperorthoBasis& basis, const OperatorTuple& x, int max_degree);

struct RowBallReport {
  // Smallest eigenvalue of sum X_i X_i^* - sum_{deg u <= N} u(X) u(X)^*.
  double psd_gap = 0.0;
  // Same with the degree-N complement terms sum_i w_i(X) w_i(X)^* added on the left, when available.
  std::optional<double> psd_gap_with_complement;
  std::vector<std::string> violations;
  bool passed = true;
};

RowBallReport check_partial_row_ball(const SuperorthoBasis& basis, const OperatorTuple& x, int max_degree,
                                     double tol = 1e-10);

// X1 = [[0,U1,U2],[I,0,0],[0,0,0]], X2 = [[0,U3,U4],[0,0,0],[I,0,0]].
OperatorTuple even_dilation(const OperatorTuple& u);

// Creation operators on the span of words of degree <= level (graded-lex order):
// L_i e_w = e_{x_i w} when |w| < level, 0 otherwise.
OperatorTuple truncated_fock_shifts(std::size_t d, int level);

// p(L) at the truncated shifts, assembled entrywise: p(L) e_v = sum_w p_w e_{wv}
// restricted to |wv| <= level. Equals eval(p, truncated_fock_shifts(d, level)).
Matrix fock_evaluation(const FreePoly& p, int level);

struct SupNormReport {
  double sup_p_est = 0.0;     // max ||p(X)|| over samples and the truncated Fock point
  double sup_hat_est = 0.0;   // max ||p_hat(U)|| over samples
  double fock_lower = 0.0;    // ||p(L)|| at the truncated Fock shifts
  double fock_upper = 0.0;    // sum_n ||p_n||, an upper bound for sup ||p(X)|| on the row ball
  double max_factor_error = 0.0;  // max ||p(X) - p_hat(Phi(X))||
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> violations;
  bool passed = true;
};

SupNormReport sup_norm_experiment(const FreePoly& p, const HatPoly& hat, const SuperorthoBasis& basis, int trials,
                                  const std::vector<int>& sizes, std::uint64_t seed, double tol = 1e-10);

struct DilationReport {
  double max_block_error = 0.0;    // top-left blocks of X_i X_j against U_k
  double max_gram_error = 0.0;     // sum X_i X_i^* against diag(sum U U^*, I, I)
  double max_closure_excess = 0.0; // top eigenvalue of sum X_i X_i^* minus 1
  double max_corner_error = 0.0;   // top-left block of p(X) against p_hat(U)
  double max_norm_excess = 0.0;    // ||p_hat(U)|| - ||p(X)||, should be <= 0
  int trials = 0;
  std::vector<std::string> violations;
  bool passed = true;
};

// Runs the block dilation on sampled U in C^4. The basis must be the four
// quadratic monomials x1x1, x1x2, x2x1, x2x2 in that order.
DilationReport check_even_dilation(const FreePoly& p, const HatPoly& hat, const SuperorthoBasis& basis, int trials,
                                   const std::vector<int>& sizes, std::uint64_t seed);

// Per-trial seed derived from (seed, stream) so trials are order independent.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace freeinv
