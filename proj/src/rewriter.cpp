#include "freeinv/rewriter.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace freeinv {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

int weighted_degree(const Word& hat_word, const SuperorthoBasis& basis) {
  int n = 0;
  for (Letter l : hat_word.letters()) n += basis.element(static_cast<int>(l) + 1).degree;
  return n;
}

RewriteResult rewrite(const FreePoly& p, const SuperorthoBasis& basis, double tol) {
  const std::size_t d = basis.alphabet_size();
  if (p.alphabet_size() != d) throw AlphabetMismatch(p.alphabet_size(), d);
  if (!p.is_zero() && p.degree() > basis.max_degree())
    throw RewriteError("polynomial degree " + std::to_string(p.degree()) + " exceeds basis max_degree " +
                           std::to_string(basis.max_degree()),
                       -1.0);
  const std::size_t letters = std::max<std::size_t>(basis.size(), 1);

  std::vector<Term> terms;
  for (int n : p.degrees()) {
    const Vector pn = homogeneous_component(p, n).coeffs;
    const double floor = 1e-15 * std::max(1.0, pn.norm());
    std::vector<Letter> word;
    // y holds <p_n, u_w . (word of remaining degree)> as a vector over the remaining words.
    std::function<void(const Vector&, int)> peel = [&](const Vector& y, int rem) {
      if (rem == 0) {
        terms.push_back({Word(letters, word), y[0]});
        return;
      }
      for (const auto& e : basis.elements()) {
        if (e.degree > rem) break;
        const auto tail = static_cast<Eigen::Index>(word_count(d, rem - e.degree));
        Eigen::Map<const RowMajor> block(y.data(), e.coeffs.size(), tail);
        const Vector z = (e.coeffs.adjoint() * block).transpose();
        if (z.cwiseAbs().maxCoeff() <= floor) continue;
        word.push_back(static_cast<Letter>(e.index - 1));
        peel(z, rem - e.degree);
        word.pop_back();
      }
    };
    peel(pn, n);
  }

  RewriteResult out;
  out.hat.poly = FreePoly(letters, std::move(terms));
  out.hat.basis_fingerprint = basis.fingerprint();
  out.residual_norm = norm(p - expand(out.hat, basis));
  if (out.residual_norm > tol * std::max(1.0, norm(p)))
    throw RewriteError("polynomial is not invariant: rewrite residual " + std::to_string(out.residual_norm),
                       out.residual_norm);
  return out;
}

FreePoly expand(const HatPoly& hat, const SuperorthoBasis& basis) {
  if (hat.basis_fingerprint != basis.fingerprint()) throw std::invalid_argument("hat polynomial refers to a different basis");
  const std::size_t d = basis.alphabet_size();
  std::map<int, Vector> by_degree;
  for (const auto& t : hat.poly.terms()) {
    std::vector<int> indices;
    for (Letter l : t.word.letters()) indices.push_back(static_cast<int>(l) + 1);
    const Vector v = uword_coeffs(basis, indices);
    const int n = weighted_degree(t.word, basis);
    auto [it, fresh] = by_degree.try_emplace(n, Vector::Zero(v.size()));
    it->second += t.coeff * v;
  }
  FreePoly out(d);
  for (const auto& [n, v] : by_degree) out += FreePoly::from_slice(HomogeneousSlice(d, n, v));
  return out;
}

}  // namespace freeinv
