#include "freeinv/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace freeinv {

OperatorTuple::OperatorTuple(std::vector<Matrix> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("operator tuple is empty");
  m_ = entries_.front().rows();
  for (const auto& e : entries_)
    if (e.rows() != m_ || e.cols() != m_) throw std::invalid_argument("tuple matrices must be square and of equal size");
}

OperatorTuple OperatorTuple::zeros(std::size_t count, Eigen::Index m) {
  return OperatorTuple(std::vector<Matrix>(count, Matrix::Zero(m, m)));
}

Matrix row_gram(const OperatorTuple& x) {
  Matrix s = Matrix::Zero(x.matrix_size(), x.matrix_size());
  for (const auto& e : x.entries()) s += e * e.adjoint();
  return s;
}

RowBallCertificate certify_row_ball(const OperatorTuple& x) {
  RowBallCertificate c;
  c.max_eigenvalue = max_hermitian_eigenvalue(row_gram(x));
  c.margin = 1.0 - c.max_eigenvalue;
  c.strict = c.margin > 0.0;
  return c;
}

Matrix eval(const FreePoly& p, const OperatorTuple& x) {
  if (p.alphabet_size() != x.size())
    throw std::invalid_argument("polynomial has " + std::to_string(p.alphabet_size()) + " letters but the tuple has " +
                                std::to_string(x.size()) + " entries");
  const Eigen::Index m = x.matrix_size();
  Matrix out = Matrix::Zero(m, m);
  // Terms are sorted, so consecutive words share long prefixes; keep the
  // running products of the previous word's prefixes.
  std::vector<Matrix> prefix{Matrix::Identity(m, m)};
  std::vector<Letter> prev;
  for (const auto& t : p.terms()) {
    const auto letters = t.word.letters();
    std::size_t common = 0;
    while (common < prev.size() && common < letters.size() && prev[common] == letters[common]) ++common;
    prefix.resize(common + 1);
    for (std::size_t k = common; k < letters.size(); ++k) prefix.push_back(prefix.back() * x[letters[k]]);
    out += t.coeff * prefix.back();
    prev = letters;
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

OperatorTuple sample_row_contraction(std::size_t d, Eigen::Index m, double margin, std::uint64_t seed) {
  if (!(margin > 0.0 && margin < 1.0)) throw std::invalid_argument("margin must lie in (0, 1)");
  if (d == 0 || m <= 0) throw std::invalid_argument("need d >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<Matrix> mats(d, Matrix(m, m));
  for (auto& a : mats)
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index i = 0; i < m; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
  const double top = max_hermitian_eigenvalue(row_gram(OperatorTuple(mats)));
  const double s = std::sqrt((1.0 - margin) / top);
  for (auto& a : mats) a *= s;
  return OperatorTuple(std::move(mats));
}

OperatorTuple basis_image(const SuperorthoBasis& basis, const OperatorTuple& x, int max_degree) {
  std::vector<Matrix> out;
  for (const auto& e : basis.elements())
    if (e.degree <= max_degree) out.push_back(eval(e.poly, x));
  if (out.empty()) return {};
  return OperatorTuple(std::move(out));
}

RowBallReport check_partial_row_ball(const SuperorthoBasis& basis, const OperatorTuple& x, int max_degree, double tol) {
  if (max_degree > basis.max_degree()) throw std::invalid_argument("max_degree exceeds the basis");
  RowBallReport r;
  const Eigen::Index m = x.matrix_size();
  const Matrix rhs = row_gram(x);
  Matrix lhs = Matrix::Zero(m, m);
  for (const auto& e : basis.elements()) {
    if (e.degree > max_degree) continue;
    const Matrix u = eval(e.poly, x);
    lhs += u * u.adjoint();
  }
  r.psd_gap = min_hermitian_eigenvalue(rhs - lhs);
  if (r.psd_gap < -tol) r.violations.push_back("sum u(X)u(X)^* exceeds sum X X^* by " + std::to_string(-r.psd_gap));

  if (basis.has_complements() && word_count(basis.alphabet_size(), max_degree) <= 4096) {
    const Matrix c = basis.complement_matrix(max_degree);
    // w_i(X) = sum_v C(v, i) X^v over the degree-N words v.
    Matrix w_sum = Matrix::Zero(m, m);
    std::vector<Matrix> mono;
    const auto dn = word_count(basis.alphabet_size(), max_degree);
    for (std::uint64_t v = 0; v < dn; ++v)
      mono.push_back(eval(FreePoly::monomial(Word::from_code(basis.alphabet_size(), max_degree, v)), x));
    for (Eigen::Index i = 0; i < c.cols(); ++i) {
      Matrix w = Matrix::Zero(m, m);
      for (std::uint64_t v = 0; v < dn; ++v)
        if (c(static_cast<Eigen::Index>(v), i) != Complex{}) w += c(static_cast<Eigen::Index>(v), i) * mono[v];
      w_sum += w * w.adjoint();
    }
    r.psd_gap_with_complement = min_hermitian_eigenvalue(rhs - lhs - w_sum);
    if (*r.psd_gap_with_complement < -tol)
      r.violations.push_back("basis terms plus complement terms exceed sum X X^* by " +
                             std::to_string(-*r.psd_gap_with_complement));
  }
  r.passed = r.violations.empty();
  return r;
}

OperatorTuple even_dilation(const OperatorTuple& u) {
  if (u.size() != 4) throw std::invalid_argument("even dilation needs exactly 4 matrices");
  if (certify_row_ball(u).max_eigenvalue >= 1.0) throw std::invalid_argument("U is not a strict row contraction");
  const Eigen::Index m = u.matrix_size();
  const Matrix id = Matrix::Identity(m, m);
  Matrix x1 = Matrix::Zero(3 * m, 3 * m), x2 = Matrix::Zero(3 * m, 3 * m);
  x1.block(0, m, m, m) = u[0];
  x1.block(0, 2 * m, m, m) = u[1];
  x1.block(m, 0, m, m) = id;
  x2.block(0, m, m, m) = u[2];
  x2.block(0, 2 * m, m, m) = u[3];
  x2.block(2 * m, 0, m, m) = id;
  return OperatorTuple({x1, x2});
}

OperatorTuple truncated_fock_shifts(std::size_t d, int level) {
  if (level < 1) throw std::invalid_argument("Fock truncation level must be >= 1");
  if (d == 0) throw std::invalid_argument("need d >= 1");
  std::vector<std::uint64_t> offset{0};
  for (int k = 0; k <= level; ++k) offset.push_back(offset.back() + word_count(d, k));
  const auto dim = static_cast<Eigen::Index>(offset.back());
  std::vector<Matrix> shifts(d, Matrix::Zero(dim, dim));
  for (int k = 0; k < level; ++k) {
    const auto count = word_count(d, k);
    for (std::uint64_t w = 0; w < count; ++w)
      for (std::size_t i = 0; i < d; ++i) {
        // x_i w has code i * d^k + w at degree k+1.
        const auto target = offset[k + 1] + i * count + w;
        shifts[i](static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(offset[k] + w)) = 1.0;
      }
  }
  return OperatorTuple(std::move(shifts));
}

Matrix fock_evaluation(const FreePoly& p, int level) {
  if (level < std::max(p.degree(), 0)) throw std::invalid_argument("Fock level below the polynomial degree");
  const std::size_t d = p.alphabet_size();
  std::vector<std::uint64_t> offset{0};
  for (int k = 0; k <= level; ++k) offset.push_back(offset.back() + word_count(d, k));
  const auto dim = static_cast<Eigen::Index>(offset.back());
  Matrix out = Matrix::Zero(dim, dim);
  // L^w e_v = e_{wv}, and wv has code code(w) * d^|v| + code(v).
  for (const auto& t : p.terms()) {
    const int a = t.word.degree();
    for (int k = 0; a + k <= level; ++k) {
      const auto count = word_count(d, k);
      const auto base = offset[a + k] + t.word.code() * count;
      for (std::uint64_t v = 0; v < count; ++v)
        out(static_cast<Eigen::Index>(base + v), static_cast<Eigen::Index>(offset[k] + v)) += t.coeff;
    }
  }
  return out;
}

SupNormReport sup_norm_experiment(const FreePoly& p, const HatPoly& hat, const SuperorthoBasis& basis, int trials,
                                  const std::vector<int>& sizes, std::uint64_t seed, double tol) {
  if (sizes.empty()) throw std::invalid_argument("need at least one matrix size");
  SupNormReport r;
  r.trials = trials;
  r.seed = seed;
  for (int n : p.degrees()) r.fock_upper += norm(p.homogeneous_part(n));
  const int deg = std::max(p.degree(), 1);
  if (word_count(p.alphabet_size(), deg) <= 1024) {
    r.fock_lower = operator_norm(fock_evaluation(p, deg));
    r.sup_p_est = r.fock_lower;
  }
  const std::size_t letters = hat.poly.alphabet_size();
  for (int t = 0; t < trials; ++t) {
    const auto m = static_cast<Eigen::Index>(sizes[t % sizes.size()]);
    std::mt19937_64 rng(trial_seed(seed, 2 * static_cast<std::uint64_t>(t)));
    const double margin = std::uniform_real_distribution<double>(1e-3, 0.5)(rng);
    const OperatorTuple x = sample_row_contraction(p.alphabet_size(), m, margin, rng());
    const Matrix px = eval(p, x);
    r.sup_p_est = std::max(r.sup_p_est, operator_norm(px));
    const OperatorTuple phi = basis_image(basis, x, basis.max_degree());
    if (phi.size() > 0 && phi.size() >= letters) {
      std::vector<Matrix> used(phi.entries().begin(), phi.entries().begin() + static_cast<std::ptrdiff_t>(letters));
      r.max_factor_error = std::max(r.max_factor_error, max_abs(px - eval(hat.poly, OperatorTuple(used))));
    } else if (hat.poly.degree() <= 0) {
      r.max_factor_error = std::max(r.max_factor_error, max_abs(px - hat.poly.coeff(Word(letters)) * Matrix::Identity(m, m)));
    }
    const OperatorTuple u = sample_row_contraction(letters, m, margin, trial_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
    r.sup_hat_est = std::max(r.sup_hat_est, operator_norm(eval(hat.poly, u)));
  }
  if (r.sup_hat_est > r.fock_upper + tol)
    r.violations.push_back("sampled |p_hat(U)| exceeds the Fock upper bound on sup |p(X)|");
  if (r.sup_p_est > r.fock_upper + tol) r.violations.push_back("sampled |p(X)| exceeds the Fock upper bound");
  if (r.max_factor_error > 1e-10 * std::max(1.0, r.fock_upper)) r.violations.push_back("p(X) != p_hat(Phi(X))");
  r.passed = r.violations.empty();
  return r;
}

DilationReport check_even_dilation(const FreePoly& p, const HatPoly& hat, const SuperorthoBasis& basis, int trials,
                                   const std::vector<int>& sizes, std::uint64_t seed) {
  if (basis.alphabet_size() != 2 || basis.size() < 4 || hat.poly.alphabet_size() > 4)
    throw std::invalid_argument("even dilation needs the quadratic basis on two letters");
  for (int k = 0; k < 4; ++k) {
    const auto& e = basis.element(k + 1);
    const FreePoly expected = FreePoly::monomial(Word::from_code(2, 2, static_cast<std::uint64_t>(k)));
    if (e.degree != 2 || norm(e.poly - expected) > 1e-12)
      throw std::invalid_argument("basis is not (x1x1, x1x2, x2x1, x2x2)");
  }
  if (sizes.empty()) throw std::invalid_argument("need at least one matrix size");
  DilationReport r;
  r.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const auto m = static_cast<Eigen::Index>(sizes[t % sizes.size()]);
    std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    const double margin = std::uniform_real_distribution<double>(1e-3, 0.5)(rng);
    const OperatorTuple u = sample_row_contraction(4, m, margin, rng());
    const OperatorTuple x = even_dilation(u);
    // X_a X_b top-left block is U_{2a+b} (zero-based letters).
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        r.max_block_error =
            std::max(r.max_block_error, max_abs(Matrix((x[a] * x[b]).topLeftCorner(m, m)) - u[2 * a + b]));
    Matrix expect = Matrix::Identity(3 * m, 3 * m);
    expect.topLeftCorner(m, m) = row_gram(u);
    const Matrix gram = row_gram(x);
    r.max_gram_error = std::max(r.max_gram_error, max_abs(gram - expect));
    r.max_closure_excess = std::max(r.max_closure_excess, max_hermitian_eigenvalue(gram) - 1.0);

    const Matrix px = eval(p, x);
    std::vector<Matrix> letters(u.entries().begin(), u.entries().begin() + static_cast<std::ptrdiff_t>(hat.poly.alphabet_size()));
    const Matrix hu = eval(hat.poly, OperatorTuple(letters));
    r.max_corner_error = std::max(r.max_corner_error, max_abs(Matrix(px.topLeftCorner(m, m)) - hu));
    r.max_norm_excess = std::max(r.max_norm_excess, operator_norm(hu) - operator_norm(px));
  }
  if (r.max_block_error > 1e-12) r.violations.push_back("top-left blocks of X_i X_j differ from U_k");
  if (r.max_gram_error > 1e-12) r.violations.push_back("sum X_i X_i^* differs from diag(sum U U^*, I, I)");
  if (r.max_closure_excess > 1e-12) r.violations.push_back("dilated pair leaves the closed row ball");
  if (r.max_corner_error > 1e-10) r.violations.push_back("top-left block of p(X) differs from p_hat(U)");
  if (r.max_norm_excess > 1e-10) r.violations.push_back("|p_hat(U)| exceeds |p(X)|");
  r.passed = r.violations.empty();
  return r;
}

}  // namespace freeinv
