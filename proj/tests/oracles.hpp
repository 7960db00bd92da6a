#pragma once

// Independent brute-force reference implementations. None of these reuse the
// library's packed word codes, mode-wise action or basis recursions.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "freeinv/freeinv.hpp"

namespace oracle {

using freeinv::Complex;
using freeinv::Matrix;
using freeinv::Vector;
using Letters = std::vector<int>;
using WordMap = std::map<Letters, Complex>;

inline WordMap to_map(const freeinv::FreePoly& p) {
  WordMap m;
  for (const auto& t : p.terms()) {
    Letters w;
    for (auto l : t.word.letters()) w.push_back(static_cast<int>(l));
    m[w] += t.coeff;
  }
  return m;
}

inline WordMap mul(const WordMap& a, const WordMap& b) {
  WordMap out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Letters w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += cu * cv;
    }
  return out;
}

inline double distance(const WordMap& a, const WordMap& b) {
  WordMap diff = a;
  for (const auto& [w, c] : b) diff[w] -= c;
  double s = 0;
  for (const auto& [w, c] : diff) s += std::norm(c);
  return std::sqrt(s);
}

inline Complex inner(const WordMap& a, const WordMap& b) {
  Complex s = 0;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    if (it != b.end()) s += c * std::conj(it->second);
  }
  return s;
}

// All words of length n over d letters, listed letter by letter.
inline std::vector<Letters> all_words(int d, int n) {
  std::vector<Letters> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Letters> next;
    for (const auto& w : out)
      for (int a = 0; a < d; ++a) {
        Letters v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// Dense coefficients of the degree-n part, indexed by position in all_words.
inline Vector dense(const freeinv::FreePoly& p, int n) {
  const int d = static_cast<int>(p.alphabet_size());
  const auto words = all_words(d, n);
  const auto m = to_map(p);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(words.size()));
  for (std::size_t k = 0; k < words.size(); ++k) {
    auto it = m.find(words[k]);
    if (it != m.end()) v[static_cast<Eigen::Index>(k)] = it->second;
  }
  return v;
}

// Explicit Kronecker power a^{(x) n}.
inline Matrix kron_power(const Matrix& a, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) {
    Matrix next(out.rows() * a.rows(), out.cols() * a.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(i * a.rows(), j * a.cols(), a.rows(), a.cols()) = out(i, j) * a;
    out = std::move(next);
  }
  return out;
}

inline Matrix reynolds(const freeinv::UnitaryRep& rep, int n) {
  const auto dn = static_cast<Eigen::Index>(std::pow(rep.dim(), n));
  Matrix r = Matrix::Zero(dn, dn);
  for (const auto& m : rep.matrices()) r += kron_power(m, n);
  return r / static_cast<double>(rep.matrices().size());
}

// Eigenvalues above 0.5 of a Hermitian matrix.
inline int rank_by_eigen(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r += es.eigenvalues()[i] > 0.5;
  return r;
}

// Number of orbits of the permutation group on words of length n; equals the
// invariant dimension for a permutation representation.
inline std::int64_t word_orbits(const std::vector<freeinv::Permutation>& perms, int d, int n) {
  std::set<Letters> seen;
  std::int64_t orbits = 0;
  for (const auto& w : all_words(d, n)) {
    if (seen.count(w)) continue;
    ++orbits;
    for (const auto& p : perms) {
      Letters v;
      for (int a : w) v.push_back(p[a]);
      seen.insert(v);
    }
  }
  return orbits;
}

// Words over characters e^{2 pi i k/3}, k in {0,1,2}, whose exponent sum is 0
// mod 3 while no proper nonempty prefix has that property.
inline std::int64_t primitive_z3_words(int n) {
  std::int64_t count = 0;
  for (const auto& w : all_words(3, n)) {
    int s = 0;
    bool primitive = true;
    for (std::size_t k = 0; k < w.size(); ++k) {
      s = (s + w[k]) % 3;
      if (s == 0 && k + 1 < w.size()) primitive = false;
    }
    count += primitive && s == 0;
  }
  return count;
}

// Taylor coefficients of 1 - 1/f for integer f with f_0 = 1.
inline std::vector<std::int64_t> g_series(const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> inv(f.size(), 0);
  inv[0] = 1;
  for (std::size_t n = 1; n < f.size(); ++n) {
    std::int64_t s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += f[k] * inv[n - k];
    inv[n] = -s;
  }
  std::vector<std::int64_t> g(f.size(), 0);
  for (std::size_t n = 1; n < f.size(); ++n) g[n] = -inv[n];
  return g;
}

// Matrix product of the words in p applied to matrices.
inline Matrix eval(const freeinv::FreePoly& p, const std::vector<Matrix>& x) {
  const auto m = x.front().rows();
  Matrix out = Matrix::Zero(m, m);
  for (const auto& [w, c] : to_map(p)) {
    Matrix prod = Matrix::Identity(m, m);
    for (int a : w) prod = prod * x[static_cast<std::size_t>(a)];
    out += c * prod;
  }
  return out;
}

inline freeinv::FreePoly random_poly(std::size_t d, int max_degree, int terms, std::mt19937_64& rng,
                                     bool complex_coeffs = true) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(d) - 1);
  std::uniform_int_distribution<int> small(-4, 4);
  std::vector<freeinv::Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<freeinv::Letter> w;
    const int n = deg(rng);
    for (int j = 0; j < n; ++j) w.push_back(static_cast<freeinv::Letter>(letter(rng)));
    const Complex c = complex_coeffs ? Complex(small(rng), small(rng)) : Complex(small(rng), 0);
    out.push_back({freeinv::Word(d, w), c});
  }
  return freeinv::FreePoly(d, std::move(out));
}

inline freeinv::FreePoly random_homogeneous(std::size_t d, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<freeinv::Term> out;
  for (const auto& w : all_words(static_cast<int>(d), n)) {
    std::vector<freeinv::Letter> l(w.begin(), w.end());
    out.push_back({freeinv::Word(d, l), Complex(g(rng), g(rng))});
  }
  return freeinv::FreePoly(d, std::move(out));
}

}  // namespace oracle
