#include "freeinv/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

namespace freeinv {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw InvalidGroup("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidGroup("group table is not square");
    std::vector<bool> seen(n, false);
    for (int x : row) {
      if (x < 0 || x >= n) throw InvalidGroup("group table entry out of range");
      if (seen[x]) throw InvalidGroup("group table row is not a permutation");
      seen[x] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidGroup("group table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw InvalidGroup("group table has an element without a two-sided inverse");

  auto assoc = [&](int a, int b, int c) { return table_[table_[a][b]][c] == table_[a][table_[b][c]]; };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidGroup("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 200000; ++trial)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvalidGroup("group table is not associative");
  }
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements, std::string name) {
  std::map<Permutation, int> index;
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (!index.emplace(elements[k], static_cast<int>(k)).second) throw InvalidGroup("duplicate permutation");
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Permutation c(elements[b].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = elements[a][elements[b][i]];
      auto it = index.find(c);
      if (it == index.end()) throw InvalidGroup("permutations are not closed under composition");
      table[a][b] = it->second;
    }
  FiniteGroup g(std::move(table), std::move(name));
  g.perms_ = std::move(elements);
  return g;
}

FiniteGroup group_from_generators(GroupKind kind, int param) {
  std::vector<Permutation> elems;
  switch (kind) {
    case GroupKind::Symmetric: {
      if (param < 1 || param > 8) throw InvalidGroup("symmetric group degree must be in [1, 8]");
      Permutation p(param);
      std::iota(p.begin(), p.end(), 0);
      do elems.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      return FiniteGroup::from_permutations(std::move(elems), "S" + std::to_string(param));
    }
    case GroupKind::Cyclic: {
      if (param < 1) throw InvalidGroup("cyclic group order must be positive");
      for (int k = 0; k < param; ++k) {
        Permutation p(param);
        for (int i = 0; i < param; ++i) p[i] = (i + k) % param;
        elems.push_back(p);
      }
      return FiniteGroup::from_permutations(std::move(elems), "Z" + std::to_string(param));
    }
    case GroupKind::Dihedral: {
      if (param < 3) throw InvalidGroup("dihedral group needs at least 3 vertices");
      for (int k = 0; k < param; ++k) {
        Permutation p(param);
        for (int i = 0; i < param; ++i) p[i] = (i + k) % param;
        elems.push_back(p);
      }
      for (int k = 0; k < param; ++k) {
        Permutation p(param);
        for (int i = 0; i < param; ++i) p[i] = ((k - i) % param + param) % param;
        elems.push_back(p);
      }
      return FiniteGroup::from_permutations(std::move(elems), "D" + std::to_string(param));
    }
    case GroupKind::Trivial:
      return FiniteGroup({{0}}, "trivial");
  }
  throw InvalidGroup("unknown group kind");
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table) { return FiniteGroup(std::move(table)); }

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (owner[a] >= 0) continue;
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      const int c = g.mul(g.mul(x, a), g.inverse(x));
      if (owner[c] < 0) {
        owner[c] = static_cast<int>(classes.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

UnitaryRep::UnitaryRep(FiniteGroup group, std::vector<Matrix> matrices, std::string name)
    : group_(std::move(group)), matrices_(std::move(matrices)), name_(std::move(name)) {
  if (static_cast<int>(matrices_.size()) != group_.order())
    throw InvalidRepresentation("need one matrix per group element");
  const auto d = matrices_.front().rows();
  if (d == 0) throw InvalidRepresentation("representation dimension must be positive");
  for (const auto& m : matrices_)
    if (m.rows() != d || m.cols() != d) throw InvalidRepresentation("matrices must be square and of equal size");
  const Matrix id = Matrix::Identity(d, d);
  if (max_abs(matrices_[group_.identity()] - id) > kRepTolerance)
    throw InvalidRepresentation("pi(identity) is not the identity matrix");
  for (const auto& m : matrices_)
    if (max_abs(m * m.adjoint() - id) > kRepTolerance) throw InvalidRepresentation("pi(g) is not unitary");
  for (int a = 0; a < group_.order(); ++a)
    for (int b = 0; b < group_.order(); ++b)
      if (max_abs(matrices_[a] * matrices_[b] - matrices_[group_.mul(a, b)]) > kRepTolerance)
        throw InvalidRepresentation("pi(gh) != pi(g) pi(h) for g=" + std::to_string(a) + ", h=" + std::to_string(b));
}

UnitaryRep UnitaryRep::permutation(FiniteGroup group, const std::vector<Permutation>& images, std::string name) {
  if (static_cast<int>(images.size()) != group.order()) throw InvalidRepresentation("need one permutation per element");
  const auto d = static_cast<Eigen::Index>(images.front().size());
  std::vector<Matrix> mats;
  for (const auto& p : images) {
    if (static_cast<Eigen::Index>(p.size()) != d) throw InvalidRepresentation("permutations of unequal size");
    Matrix m = Matrix::Zero(d, d);
    std::vector<bool> hit(d, false);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (p[i] < 0 || p[i] >= d || hit[p[i]]) throw InvalidRepresentation("not a permutation");
      hit[p[i]] = true;
      m(p[i], i) = 1.0;
    }
    mats.push_back(std::move(m));
  }
  return UnitaryRep(std::move(group), std::move(mats), std::move(name));
}

UnitaryRep UnitaryRep::natural(FiniteGroup group, std::string name) {
  if (!group.permutations()) throw InvalidRepresentation("group has no defining permutation action");
  auto images = *group.permutations();
  return permutation(std::move(group), images, std::move(name));
}

UnitaryRep UnitaryRep::diagonal(FiniteGroup group, const std::vector<std::vector<Complex>>& diagonals,
                                std::string name) {
  std::vector<Matrix> mats;
  for (const auto& diag : diagonals) {
    Vector v(static_cast<Eigen::Index>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i) v[static_cast<Eigen::Index>(i)] = diag[i];
    mats.push_back(v.asDiagonal());
  }
  if (mats.empty()) throw InvalidRepresentation("no diagonal data");
  return UnitaryRep(std::move(group), std::move(mats), std::move(name));
}

Character UnitaryRep::character() const {
  Character chi;
  chi.group_order = group_.order();
  for (const auto& cls : conjugacy_classes(group_)) {
    const Complex v = matrices_[cls.front()].trace();
    for (int g : cls)
      if (std::abs(matrices_[g].trace() - v) > kRepTolerance)
        throw InvalidRepresentation("character is not constant on a conjugacy class");
    chi.values.push_back(v);
    chi.class_sizes.push_back(static_cast<int>(cls.size()));
    chi.class_reps.push_back(cls.front());
  }
  return chi;
}

bool UnitaryRep::is_abelian() const {
  for (std::size_t a = 0; a < matrices_.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (max_abs(matrices_[a] * matrices_[b] - matrices_[b] * matrices_[a]) > kRepTolerance) return false;
  return true;
}

std::string UnitaryRep::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= static_cast<std::uint64_t>(x >> (8 * k)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(group_.order());
  mix(static_cast<std::int64_t>(dim()));
  for (const auto& m : matrices_)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        mix(std::llround(m(i, j).real() * 1e8));
        mix(std::llround(m(i, j).imag() * 1e8));
      }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Vector act_degree_n(const UnitaryRep& rep, int n, const Vector& coeffs, int g) {
  const auto d = static_cast<Eigen::Index>(rep.dim());
  if (static_cast<std::uint64_t>(coeffs.size()) != word_count(rep.dim(), n))
    throw std::invalid_argument("coefficient vector length must be d^n");
  const Matrix& pi = rep.matrix(g);
  Vector v = coeffs;
  Vector x(d);
  for (int axis = 0; axis < n; ++axis) {
    const auto stride = static_cast<Eigen::Index>(word_count(rep.dim(), n - 1 - axis));
    const Eigen::Index block = stride * d;
    for (Eigen::Index base = 0; base < v.size(); base += block)
      for (Eigen::Index t = 0; t < stride; ++t) {
        for (Eigen::Index j = 0; j < d; ++j) x[j] = v[base + j * stride + t];
        const Vector y = pi * x;
        for (Eigen::Index j = 0; j < d; ++j) v[base + j * stride + t] = y[j];
      }
  }
  return v;
}

HomogeneousSlice act_degree_n(const UnitaryRep& rep, int n, const HomogeneousSlice& slice, int g) {
  if (slice.degree != n || slice.alphabet_size != rep.dim())
    throw std::invalid_argument("slice does not match degree or representation dimension");
  return HomogeneousSlice(rep.dim(), n, act_degree_n(rep, n, slice.coeffs, g));
}

Vector reynolds_slice(const UnitaryRep& rep, int n, const Vector& coeffs) {
  Vector acc = Vector::Zero(coeffs.size());
  for (int g = 0; g < rep.group().order(); ++g) acc += act_degree_n(rep, n, coeffs, g);
  return acc / static_cast<double>(rep.group().order());
}

FreePoly reynolds(const UnitaryRep& rep, const FreePoly& p) {
  if (p.alphabet_size() != rep.dim()) throw AlphabetMismatch(p.alphabet_size(), rep.dim());
  FreePoly out(p.alphabet_size());
  for (int n : p.degrees()) {
    const HomogeneousSlice s = homogeneous_component(p, n);
    out += FreePoly::from_slice(HomogeneousSlice(rep.dim(), n, reynolds_slice(rep, n, s.coeffs)));
  }
  return out;
}

bool is_invariant(const UnitaryRep& rep, const FreePoly& p, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  return norm(reynolds(rep, p) - p) <= tol * std::max(1.0, norm(p));
}

Matrix reynolds_matrix(const UnitaryRep& rep, int n) {
  const auto dn = static_cast<Eigen::Index>(word_count(rep.dim(), n));
  Matrix acc = Matrix::Zero(dn, dn);
  for (const auto& m : rep.matrices()) {
    Matrix t = Matrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) t = kron(t, m);
    acc += t;
  }
  return acc / static_cast<double>(rep.group().order());
}

}  // namespace freeinv
