#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeinv/freepoly.hpp"
#include "freeinv/linalg.hpp"

namespace freeinv {

// Tolerance for homomorphism, unitarity and class-function checks.
inline constexpr double kRepTolerance = 1e-10;

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Permutation = std::vector<int>;  // zero-based images

// A finite group given by its multiplication table over element indices.
class FiniteGroup {
 public:
  // Validates closure, associativity (exhaustive up to order 64, sampled above),
  // identity and inverses; throws InvalidGroup otherwise.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "table");

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const;

  // Defining permutation action, present for groups built from permutations.
  const std::optional<std::vector<Permutation>>& permutations() const { return perms_; }

  static FiniteGroup from_permutations(std::vector<Permutation> elements, std::string name);

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string name_;
  std::optional<std::vector<Permutation>> perms_;
};

enum class GroupKind { Symmetric, Cyclic, Dihedral, Trivial };

// Built-in groups. Symmetric(d): all permutations of d points in lexicographic
// order. Cyclic(n): element k is i -> i+k mod n. Dihedral(n): elements 0..n-1
// are rotations, n..2n-1 are the reflections i -> k-i mod n. Trivial: order 1.
FiniteGroup group_from_generators(GroupKind kind, int param);
FiniteGroup group_from_table(std::vector<std::vector<int>> table);

// Partition of the elements into conjugacy classes. Classes are ordered by
// their smallest element, so the identity's singleton class comes first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct Character {
  int group_order = 1;
  std::vector<Complex> values;      // chi on each class
  std::vector<int> class_sizes;
  std::vector<int> class_reps;
};

// A unitary representation pi: G -> U(d), verified on construction.
class UnitaryRep {
 public:
  UnitaryRep(FiniteGroup group, std::vector<Matrix> matrices, std::string name = "rep");

  // pi(g) e_i = e_{sigma_g(i)}.
  static UnitaryRep permutation(FiniteGroup group, const std::vector<Permutation>& images, std::string name);
  // The group's own defining permutation action.
  static UnitaryRep natural(FiniteGroup group, std::string name);
  static UnitaryRep diagonal(FiniteGroup group, const std::vector<std::vector<Complex>>& diagonals,
                             std::string name);

  const FiniteGroup& group() const { return group_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrices_.front().rows()); }
  const Matrix& matrix(int g) const { return matrices_[g]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const std::string& name() const { return name_; }

  Character character() const;
  // True when all pi(g) commute to kRepTolerance.
  bool is_abelian() const;
  // Stable hex digest of the order, dimension and matrices.
  std::string fingerprint() const;

 private:
  FiniteGroup group_;
  std::vector<Matrix> matrices_;
  std::string name_;
};

// pi(g)^{tensor n} applied to a degree-n coefficient vector, one tensor mode at a
// time. Substituting x_i <- sum_j pi(g)_{ji} x_j in every word has the same effect.
HomogeneousSlice act_degree_n(const UnitaryRep& rep, int n, const HomogeneousSlice& slice, int g);
Vector act_degree_n(const UnitaryRep& rep, int n, const Vector& coeffs, int g);

// Group average of the tensor-power action on one degree.
Vector reynolds_slice(const UnitaryRep& rep, int n, const Vector& coeffs);
FreePoly reynolds(const UnitaryRep& rep, const FreePoly& p);
bool is_invariant(const UnitaryRep& rep, const FreePoly& p, double tol);

// Dense matrix of the Reynolds projector on all of [H^2_d]_n (d^n x d^n).
Matrix reynolds_matrix(const UnitaryRep& rep, int n);

}  // namespace freeinv
