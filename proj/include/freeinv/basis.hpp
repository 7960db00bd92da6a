#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeinv/freepoly.hpp"
#include "freeinv/group.hpp"

namespace freeinv {

class BasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One generator u_lambda: homogeneous, unit norm, invariant.
struct BasisElement {
  int index = 0;   // lambda, 1-based and contiguous
  int degree = 0;
  FreePoly poly{1};
  Vector coeffs;   // dense coefficients over the d^degree words
};

enum class BasisMethod { General, Abelian };

// Orthonormal eigenvectors v_1..v_d of the representation on [H^2_d]_1 together
// with their characters: pi(g) v_i = chars[i][g] v_i.
struct AbelianEigenbasis {
  Matrix vectors;                               // column i is v_i
  std::vector<std::vector<Complex>> chars;      // chars[i][g]
  std::vector<bool> trivial;                    // chars[i] == 1 everywhere
};

// Simultaneous diagonalization of a commuting unitary representation. Columns
// carry the trivial character first, then nontrivial characters ordered by
// the arguments of their values; each vector's first nonzero coordinate is
// positive real. Throws BasisError when the matrices do not commute.
AbelianEigenbasis diagonalize_abelian(const UnitaryRep& rep);

// A superorthonormal basis through max_degree, with the carried complements.
//
// Complements are stored factored. With C_0 = [1], the complement at degree n
// has full coefficient matrix C_n = (C_{n-1} kron I_d) F_n, where F_n has
// orthonormal columns in the c_{n-1} d dimensional working space.
class SuperorthoBasis {
 public:
  SuperorthoBasis(UnitaryRep rep, int max_degree, BasisMethod method, std::vector<BasisElement> elements,
                  std::vector<Matrix> complement_factors);

  const UnitaryRep& rep() const { return rep_; }
  std::size_t alphabet_size() const { return rep_.dim(); }
  int max_degree() const { return max_degree_; }
  BasisMethod method() const { return method_; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const BasisElement& element(int index) const;  // 1-based

  // Element counts indexed by degree 0..max_degree.
  std::vector<std::int64_t> counts_by_degree() const;
  // Orthonormal columns spanning the degree-n elements (d^n x count).
  Matrix degree_span(int n) const;

  bool has_complements() const { return !factors_.empty(); }
  const std::vector<Matrix>& complement_factors() const { return factors_; }
  std::size_t complement_dim(int n) const;
  // Full d^n x c_n complement matrix for 1 <= n <= max_degree.
  Matrix complement_matrix(int n) const;

  std::string fingerprint() const { return fingerprint_; }

 private:
  UnitaryRep rep_;
  int max_degree_;
  BasisMethod method_;
  std::vector<BasisElement> elements_;
  std::vector<Matrix> factors_;
  std::string fingerprint_;
};

// Degree by degree: the working space is all of [H^2_d]_1 at degree 1 and the
// previous complement tensored with one more letter afterwards; the Reynolds
// projector restricted to it splits off the fixed subspace (new elements) and
// its complement (carried on). Stops early once the complement is empty.
SuperorthoBasis build_general(const UnitaryRep& rep, int max_degree);

// Monomials v^J in an eigenbasis with trivial total character and no proper
// nonempty prefix of trivial character.
SuperorthoBasis build_abelian(const UnitaryRep& rep, int max_degree);

// Abelian path for commuting representations unless General is forced.
SuperorthoBasis build_basis(const UnitaryRep& rep, int max_degree, std::optional<BasisMethod> method = {});

struct SuperorthoReport {
  double max_violation = 0.0;
  int worst_lambda = 0;
  int worst_mu = 0;
  int max_total_degree = 0;
  std::uint64_t pairs_checked = 0;
  bool passed = true;
};

// |<u_lambda w, u_mu w'>| over every lambda != mu and every pair of words with
// deg u_lambda + |w| = deg u_mu + |w'| <= max element degree + max_pad. Each
// total degree is handled as one sparse Gram product over all padded elements.
SuperorthoReport check_superorthogonality(const SuperorthoBasis& basis, int max_pad, double tol);

// Calls `visit` with every word (lambda_1, ..., lambda_k) over the basis whose
// weighted degree sum deg u_lambda_i equals n, in lexicographic order.
void for_each_uword(const SuperorthoBasis& basis, int n, const std::function<void(std::span<const int>)>& visit);

// Dense coefficient vector of the product u_lambda_1 ... u_lambda_k.
Vector uword_coeffs(const SuperorthoBasis& basis, std::span<const int> word);

}  // namespace freeinv
