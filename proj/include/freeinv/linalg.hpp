#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace freeinv {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Raised when a matrix that must be an orthogonal projector has spectrum away from {0, 1}.
class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Splits the space on which a Hermitian projector acts into its range and the
// orthogonal complement, each returned as a matrix with orthonormal columns.
// The rank is read off the trace and the range is found by pivoted Gram-Schmidt
// on the projector's columns. Throws SpectrumError unless every eigenvalue lies
// outside (0.1, 0.9) and the range columns are fixed to `fixed_tol`.
struct ProjectorSplit {
  Matrix range;
  Matrix complement;
};
ProjectorSplit split_projector(const Matrix& projector, double fixed_tol = 1e-8, bool want_complement = true);

// Orthonormal basis of span(u) that depends only on the subspace: pivoted
// Gram-Schmidt over the projector columns in index order, each vector rotated
// so its first nonzero coordinate is positive real, then ordered by the
// position of that coordinate (earlier first) and its magnitude (larger first).
Matrix canonical_basis(const Matrix& u);

// Orthogonal projector onto the column span of an orthonormal u.
inline Matrix projector(const Matrix& u) { return u * u.adjoint(); }

// Frobenius distance between the projectors onto span(u) and span(v).
double projection_distance(const Matrix& u, const Matrix& v);

double min_hermitian_eigenvalue(const Matrix& h);
double max_hermitian_eigenvalue(const Matrix& h);
double operator_norm(const Matrix& a);
double max_abs(const Matrix& a);

}  // namespace freeinv
