#include "freeinv/basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Sparse>

namespace freeinv {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Columns y of the (c_prev * d)-dimensional working space mapped to full
// coefficient vectors: (prev kron I_d) y, flattened with the new letter last.
Matrix materialize(const Matrix& prev, const Matrix& y, Eigen::Index d) {
  const Eigen::Index c_prev = prev.cols();
  Matrix out(prev.rows() * d, y.cols());
  for (Eigen::Index k = 0; k < y.cols(); ++k) {
    const Vector col = y.col(k);
    Eigen::Map<const RowMajor> block(col.data(), c_prev, d);
    RowMajor full = prev * block;
    out.col(k) = Eigen::Map<const Vector>(full.data(), full.size());
  }
  return out;
}

void check_element(const UnitaryRep& rep, const BasisElement& e) {
  const double nrm = e.coeffs.norm();
  if (std::abs(nrm - 1.0) > 1e-10)
    throw BasisError("basis element u" + std::to_string(e.index) + " is not unit norm");
  const Vector avg = reynolds_slice(rep, e.degree, e.coeffs);
  if ((avg - e.coeffs).norm() > 1e-10)
    throw BasisError("basis element u" + std::to_string(e.index) + " is not invariant");
}

BasisElement make_element(std::size_t d, int degree, Vector coeffs) {
  BasisElement e;
  e.degree = degree;
  e.poly = FreePoly::from_slice(HomogeneousSlice(d, degree, coeffs));
  e.coeffs = std::move(coeffs);
  return e;
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

AbelianEigenbasis diagonalize_abelian(const UnitaryRep& rep) {
  if (!rep.is_abelian()) throw BasisError("representation matrices do not commute; no common eigenbasis");
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const int order = rep.group().order();

  std::vector<Matrix> blocks{Matrix::Identity(d, d)};
  for (int g = 0; g < order; ++g) {
    for (int part = 0; part < 2; ++part) {
      std::vector<Matrix> next;
      for (const auto& q : blocks) {
        if (q.cols() == 1) {
          next.push_back(q);
          continue;
        }
        const Matrix m = q.adjoint() * rep.matrix(g) * q;
        const Matrix h = part == 0 ? Matrix((m + m.adjoint()) / 2.0) : Matrix((m - m.adjoint()) / Complex(0.0, 2.0));
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        const auto& ev = es.eigenvalues();
        std::vector<Eigen::Index> starts{0};
        for (Eigen::Index k = 1; k < ev.size(); ++k)
          if (ev[k] - ev[k - 1] > 1e-6) starts.push_back(k);
        if (starts.size() == 1) {
          next.push_back(q);
          continue;
        }
        starts.push_back(ev.size());
        for (std::size_t c = 0; c + 1 < starts.size(); ++c)
          next.push_back(q * es.eigenvectors().middleCols(starts[c], starts[c + 1] - starts[c]));
      }
      blocks = std::move(next);
    }
  }

  struct Column {
    Vector v;
    std::vector<Complex> chars;
    bool trivial;
    std::vector<double> args;
  };
  std::vector<Column> cols;
  for (const auto& q : blocks)
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
      Column c{q.col(k), {}, true, {}};
      Eigen::Index lead = 0;
      while (lead < d && std::abs(c.v[lead]) <= 1e-9) ++lead;
      c.v *= std::conj(c.v[lead]) / std::abs(c.v[lead]);
      for (int g = 0; g < order; ++g) {
        const Complex chi = c.v.dot(rep.matrix(g) * c.v);
        if ((rep.matrix(g) * c.v - chi * c.v).norm() > 1e-8)
          throw BasisError("failed to find a common eigenbasis");
        c.chars.push_back(chi);
        c.trivial = c.trivial && std::abs(chi - 1.0) < 1e-8;
        double a = std::arg(chi);
        if (a < -1e-9) a += 2 * std::numbers::pi;
        c.args.push_back(std::abs(a) < 1e-9 ? 0.0 : std::round(a * 1e9) / 1e9);
      }
      cols.push_back(std::move(c));
    }
  std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
    if (a.trivial != b.trivial) return a.trivial;
    return a.args < b.args;
  });

  AbelianEigenbasis out;
  out.vectors.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.vectors.col(k) = cols[k].v;
    out.chars.push_back(cols[k].chars);
    out.trivial.push_back(cols[k].trivial);
  }
  return out;
}

SuperorthoBasis::SuperorthoBasis(UnitaryRep rep, int max_degree, BasisMethod method,
                                 std::vector<BasisElement> elements, std::vector<Matrix> complement_factors)
    : rep_(std::move(rep)),
      max_degree_(max_degree),
      method_(method),
      elements_(std::move(elements)),
      factors_(std::move(complement_factors)) {
  if (max_degree_ < 1) throw BasisError("max_degree must be at least 1");
  int prev_degree = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    auto& e = elements_[k];
    if (e.index != static_cast<int>(k) + 1) throw BasisError("basis indices must be contiguous from 1");
    if (e.degree < prev_degree) throw BasisError("basis elements must be sorted by degree");
    if (e.degree < 1 || e.degree > max_degree_) throw BasisError("basis element degree out of range");
    if (e.poly.alphabet_size() != rep_.dim() || (!e.poly.is_zero() && !(e.poly.is_homogeneous() && e.poly.degree() == e.degree)))
      throw BasisError("basis element u" + std::to_string(e.index) + " is not homogeneous of its degree");
    prev_degree = e.degree;
  }
  if (!factors_.empty() && static_cast<int>(factors_.size()) != max_degree_)
    throw BasisError("need one complement factor per degree");

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= static_cast<std::uint64_t>(x >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (char c : rep_.fingerprint()) mix(c);
  mix(max_degree_);
  for (const auto& e : elements_) {
    mix(e.degree);
    for (const auto& t : e.poly.terms()) {
      mix(static_cast<std::int64_t>(t.word.code()));
      mix(std::llround(t.coeff.real() * 1e6));
      mix(std::llround(t.coeff.imag() * 1e6));
    }
  }
  fingerprint_ = hex_digest(h);
}

const BasisElement& SuperorthoBasis::element(int index) const {
  if (index < 1 || index > static_cast<int>(elements_.size())) throw std::out_of_range("basis index");
  return elements_[index - 1];
}

std::vector<std::int64_t> SuperorthoBasis::counts_by_degree() const {
  std::vector<std::int64_t> c(max_degree_ + 1, 0);
  for (const auto& e : elements_) ++c[e.degree];
  return c;
}

Matrix SuperorthoBasis::degree_span(int n) const {
  std::vector<const BasisElement*> sel;
  for (const auto& e : elements_)
    if (e.degree == n) sel.push_back(&e);
  Matrix out(static_cast<Eigen::Index>(word_count(rep_.dim(), n)), static_cast<Eigen::Index>(sel.size()));
  for (std::size_t k = 0; k < sel.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = sel[k]->coeffs;
  return out;
}

std::size_t SuperorthoBasis::complement_dim(int n) const {
  if (!has_complements()) throw BasisError("basis carries no complement data");
  if (n == 0) return 1;
  if (n < 1 || n > max_degree_) throw std::out_of_range("complement degree");
  return static_cast<std::size_t>(factors_[n - 1].cols());
}

Matrix SuperorthoBasis::complement_matrix(int n) const {
  if (!has_complements()) throw BasisError("basis carries no complement data");
  if (n < 0 || n > max_degree_) throw std::out_of_range("complement degree");
  Matrix c = Matrix::Identity(1, 1);
  for (int k = 1; k <= n; ++k) {
    if (c.cols() == 0) return Matrix(static_cast<Eigen::Index>(word_count(rep_.dim(), n)), 0);
    c = materialize(c, factors_[k - 1], static_cast<Eigen::Index>(rep_.dim()));
  }
  return c;
}

SuperorthoBasis build_general(const UnitaryRep& rep, int max_degree) {
  if (max_degree < 1) throw BasisError("max_degree must be at least 1");
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const int order = rep.group().order();

  std::vector<Matrix> restricted(order, Matrix::Identity(1, 1));  // rep on the carried complement
  Matrix carried = Matrix::Identity(1, 1);                         // full coefficients of that complement
  std::vector<Matrix> factors;
  std::vector<BasisElement> elements;

  for (int n = 1; n <= max_degree; ++n) {
    const Eigen::Index c_prev = restricted.front().rows();
    if (c_prev == 0) {
      factors.emplace_back(0, 0);
      continue;
    }
    Matrix m = Matrix::Zero(c_prev * d, c_prev * d);
    for (int g = 0; g < order; ++g) m += kron(restricted[g], rep.matrix(g));
    m /= static_cast<double>(order);

    ProjectorSplit split = split_projector(m);
    if (split.range.cols() > 0) {
      const Matrix fixed = canonical_basis(materialize(carried, split.range, d));
      for (Eigen::Index k = 0; k < fixed.cols(); ++k) {
        BasisElement e = make_element(rep.dim(), n, fixed.col(k));
        e.index = static_cast<int>(elements.size()) + 1;
        check_element(rep, e);
        elements.push_back(std::move(e));
      }
    }
    if (n < max_degree) {
      const Matrix& comp = split.complement;
      for (int g = 0; g < order; ++g)
        restricted[g] = comp.adjoint() * (kron(restricted[g], rep.matrix(g)) * comp);
      carried = materialize(carried, comp, d);
    }
    factors.push_back(std::move(split.complement));
  }
  return SuperorthoBasis(rep, max_degree, BasisMethod::General, std::move(elements), std::move(factors));
}

SuperorthoBasis build_abelian(const UnitaryRep& rep, int max_degree) {
  if (max_degree < 1) throw BasisError("max_degree must be at least 1");
  const AbelianEigenbasis eig = diagonalize_abelian(rep);
  const auto d = static_cast<Eigen::Index>(rep.dim());
  const int order = rep.group().order();

  auto is_trivial = [&](const std::vector<Complex>& c) {
    return std::all_of(c.begin(), c.end(), [](Complex z) { return std::abs(z - 1.0) < 1e-8; });
  };

  // words[n] lists the degree-n v-words whose nonempty prefixes all carry a nontrivial character.
  std::vector<std::vector<std::vector<int>>> open(max_degree + 1);
  std::vector<std::vector<std::vector<Complex>>> open_chars(max_degree + 1);
  open[0].push_back({});
  open_chars[0].push_back(std::vector<Complex>(order, Complex(1.0)));

  std::vector<std::pair<std::vector<int>, int>> found;  // word, degree
  std::vector<Matrix> factors;
  for (int n = 1; n <= max_degree; ++n) {
    const auto& prev = open[n - 1];
    std::vector<Eigen::Index> comp_cols;
    for (std::size_t a = 0; a < prev.size(); ++a)
      for (Eigen::Index j = 0; j < d; ++j) {
        std::vector<Complex> c = open_chars[n - 1][a];
        for (int g = 0; g < order; ++g) c[g] *= eig.chars[j][g];
        std::vector<int> w = prev[a];
        w.push_back(static_cast<int>(j));
        if (is_trivial(c)) {
          found.emplace_back(std::move(w), n);
        } else {
          open[n].push_back(std::move(w));
          open_chars[n].push_back(std::move(c));
          comp_cols.push_back(static_cast<Eigen::Index>(a) * d + j);
        }
      }
    // Complement factor columns are e_a kron v_j in the working space.
    Matrix f = Matrix::Zero(static_cast<Eigen::Index>(prev.size()) * d, static_cast<Eigen::Index>(comp_cols.size()));
    for (std::size_t k = 0; k < comp_cols.size(); ++k) {
      const Eigen::Index a = comp_cols[k] / d, j = comp_cols[k] % d;
      f.block(a * d, static_cast<Eigen::Index>(k), d, 1) = eig.vectors.col(j);
    }
    factors.push_back(std::move(f));
  }

  std::vector<BasisElement> elements;
  for (const auto& [word, n] : found) {
    Vector v = Vector::Ones(1);
    for (int j : word) {
      Vector next(v.size() * d);
      for (Eigen::Index a = 0; a < v.size(); ++a) next.segment(a * d, d) = v[a] * eig.vectors.col(j);
      v = std::move(next);
    }
    BasisElement e = make_element(rep.dim(), n, std::move(v));
    e.index = static_cast<int>(elements.size()) + 1;
    check_element(rep, e);
    elements.push_back(std::move(e));
  }
  return SuperorthoBasis(rep, max_degree, BasisMethod::Abelian, std::move(elements), std::move(factors));
}

SuperorthoBasis build_basis(const UnitaryRep& rep, int max_degree, std::optional<BasisMethod> method) {
  if (!method) method = rep.is_abelian() ? BasisMethod::Abelian : BasisMethod::General;
  return *method == BasisMethod::Abelian ? build_abelian(rep, max_degree) : build_general(rep, max_degree);
}

SuperorthoReport check_superorthogonality(const SuperorthoBasis& basis, int max_pad, double tol) {
  if (max_pad < 0) throw std::invalid_argument("max_pad must be nonnegative");
  SuperorthoReport rep;
  const std::size_t d = basis.alphabet_size();
  int max_deg = 0;
  for (const auto& e : basis.elements()) max_deg = std::max(max_deg, e.degree);
  rep.max_total_degree = max_deg + max_pad;

  for (int total = 1; total <= rep.max_total_degree; ++total) {
    const auto rows = word_count(d, total);
    if (rows > (1ull << 26)) throw std::length_error("superorthogonality check exceeds 2^26 words");
    std::vector<Eigen::Triplet<Complex>> trip;
    std::vector<int> owner;
    std::uint64_t sum = 0, sum_sq = 0;
    for (const auto& e : basis.elements()) {
      if (e.degree > total) continue;
      const auto pads = word_count(d, total - e.degree);
      for (std::uint64_t w = 0; w < pads; ++w) {
        const auto col = static_cast<int>(owner.size());
        owner.push_back(e.index);
        for (const auto& t : e.poly.terms())
          trip.emplace_back(static_cast<int>(t.word.code() * pads + w), col, t.coeff);
      }
      sum += pads;
      sum_sq += pads * pads;
    }
    if (owner.empty()) continue;
    Eigen::SparseMatrix<Complex> a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(owner.size()));
    a.setFromTriplets(trip.begin(), trip.end());
    const Eigen::SparseMatrix<Complex> gram = Eigen::SparseMatrix<Complex>(a.adjoint()) * a;
    for (Eigen::Index k = 0; k < gram.outerSize(); ++k)
      for (Eigen::SparseMatrix<Complex>::InnerIterator it(gram, k); it; ++it) {
        const int la = owner[it.row()], mu = owner[it.col()];
        if (la == mu) continue;
        const double v = std::abs(it.value());
        if (v > rep.max_violation) {
          rep.max_violation = v;
          rep.worst_lambda = la;
          rep.worst_mu = mu;
        }
      }
    rep.pairs_checked += sum * sum - sum_sq;
  }
  rep.passed = rep.max_violation <= tol;
  return rep;
}

void for_each_uword(const SuperorthoBasis& basis, int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> word;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      visit(word);
      return;
    }
    for (const auto& e : basis.elements()) {
      if (e.degree > rem) break;
      word.push_back(e.index);
      rec(rem - e.degree);
      word.pop_back();
    }
  };
  rec(n);
}

Vector uword_coeffs(const SuperorthoBasis& basis, std::span<const int> word) {
  Vector v = Vector::Ones(1);
  for (int lambda : word) {
    const Vector& u = basis.element(lambda).coeffs;
    Vector next(v.size() * u.size());
    for (Eigen::Index a = 0; a < v.size(); ++a) next.segment(a * u.size(), u.size()) = v[a] * u;
    v = std::move(next);
  }
  return v;
}

}  // namespace freeinv
