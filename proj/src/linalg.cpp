#include "freeinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace freeinv {

namespace {

// Pivoted Gram-Schmidt over the columns of a projector P. `column(j)` returns
// P e_j and `diag` holds P_jj; since each chosen q lies in range(P), the
// residual norm of column j after k steps is P_jj - sum |q_i(j)|^2.
template <typename ColumnFn>
Matrix pivoted_range(Eigen::Index n, Eigen::Index rank, Eigen::VectorXd residual, ColumnFn column,
                     double tie_tol) {
  Matrix q(n, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const double top = residual.maxCoeff();
    if (top < 1e-10) throw SpectrumError("projector rank is lower than its trace");
    Eigen::Index pivot = 0;
    while (residual[pivot] < top - tie_tol) ++pivot;
    Vector v = column(pivot);
    for (int pass = 0; pass < 2; ++pass) {
      if (k > 0) v -= q.leftCols(k) * (q.leftCols(k).adjoint() * v);
    }
    v /= v.norm();
    q.col(k) = v;
    residual -= v.cwiseAbs2();
  }
  return q;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ProjectorSplit split_projector(const Matrix& p, double fixed_tol, bool want_complement) {
  const Eigen::Index n = p.rows();
  if (p.cols() != n) throw std::invalid_argument("projector must be square");
  const double trace = p.trace().real();
  const double rounded = std::round(trace);
  if (std::abs(trace - rounded) > 1e-6)
    throw SpectrumError("projector trace " + std::to_string(trace) + " is not an integer");
  const auto rank = static_cast<Eigen::Index>(rounded);

  ProjectorSplit out;
  out.range = pivoted_range(n, rank, p.diagonal().real(), [&](Eigen::Index j) { return Vector(p.col(j)); }, 0.0);

  // Eigenvalue certificate: the chosen directions are fixed, and the PSD
  // remainder has trace below 0.1, so no eigenvalue lies in (0.1, 0.9).
  if (rank > 0 && max_abs(p * out.range - out.range) > fixed_tol)
    throw SpectrumError("range vectors are not fixed by the projector");
  const double captured = (out.range.adjoint() * p * out.range).trace().real();
  if (trace - captured > 0.1) throw SpectrumError("projector has eigenvalues strictly between 0.1 and 0.9");

  if (want_complement) {
    if (rank == 0) {
      out.complement = Matrix::Identity(n, n);
    } else {
      Eigen::HouseholderQR<Matrix> qr(out.range);
      Matrix tail = Matrix::Zero(n, n - rank);
      tail.bottomRows(n - rank).setIdentity();
      out.complement = qr.householderQ() * tail;
    }
  }
  return out;
}

Matrix canonical_basis(const Matrix& u) {
  const Eigen::Index n = u.rows();
  const Eigen::Index r = u.cols();
  Matrix q = pivoted_range(n, r, u.rowwise().squaredNorm(),
                           [&](Eigen::Index j) { return Vector(u * u.row(j).adjoint()); }, 1e-9);
  struct Key {
    Eigen::Index col, lead;
    double mag;
  };
  std::vector<Key> keys;
  for (Eigen::Index k = 0; k < r; ++k) {
    Eigen::Index lead = 0;
    while (lead < n && std::abs(q(lead, k)) <= 1e-9) ++lead;
    if (lead == n) lead = 0;
    const auto c = q(lead, k);
    q.col(k) *= std::conj(c) / std::abs(c);
    keys.push_back({k, lead, std::abs(c)});
  }
  std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.lead != b.lead) return a.lead < b.lead;
    return a.mag > b.mag + 1e-12;
  });
  Matrix out(n, r);
  for (Eigen::Index k = 0; k < r; ++k) out.col(k) = q.col(keys[k].col);
  return out;
}

double projection_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows()) throw std::invalid_argument("projection_distance: ambient dimensions differ");
  return (projector(u) - projector(v)).norm();
}

double min_hermitian_eigenvalue(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_hermitian_eigenvalue(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() <= 16 && a.cols() <= 16) return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
  return Eigen::BDCSVD<Matrix>(a).singularValues()(0);
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace freeinv
