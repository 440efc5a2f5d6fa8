#pragma once

#include "conetoric/matrix.hpp"

#include <vector>

namespace conetoric {

// Invariant-factor presentation of a finitely generated abelian group:
// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct FiniteAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  static FiniteAbelianGroup trivial() { return {}; }
  static FiniteAbelianGroup free_of_rank(std::size_t rank) {
    return {rank, {}};
  }
  static FiniteAbelianGroup cyclic(const Int& d);
  // Normalizes an arbitrary factor list: drops units, repairs the
  // divisibility chain by gcd/lcm exchanges (no factorization needed).
  static FiniteAbelianGroup make(std::size_t free_rank,
                                 std::vector<Int> factors);

  bool is_trivial() const {
    return free_rank == 0 && invariant_factors.empty();
  }
  bool is_finite() const { return free_rank == 0; }
  // Order of the torsion subgroup.
  Int torsion_order() const;
  std::string to_string() const;  // "0", "Z/2", "Z^2+Z/4", ...

  bool operator==(const FiniteAbelianGroup&) const = default;
};

struct SmithNormalForm {
  IntegerMatrix u, d, v;  // d = u * a * v, u and v unimodular
  std::vector<Int> diagonal() const;
  // Nonzero diagonal entries d1 | d2 | ...
  std::vector<Int> invariant_factors() const;
  std::size_t rank() const;
};

// Pivot choice: smallest nonzero absolute value, ties by lowest row then
// lowest column, for deterministic output.
SmithNormalForm smith_normal_form(const IntegerMatrix& a);

struct HermiteNormalForm {
  IntegerMatrix h, u;  // h = u * a, u unimodular, h in row echelon HNF
};

HermiteNormalForm hermite_normal_form(const IntegerMatrix& a);

// v / gcd(v); throws ZeroVector on v = 0.
LatticeVector primitivize(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

// Basis of span_R(gens) ∩ Z^n. Empty input denotes the zero lattice.
std::vector<LatticeVector> saturation(const std::vector<LatticeVector>& gens);

// True iff gens are Q-independent and their Z-span equals the saturation,
// i.e. all Smith invariant factors are 1 and the rank equals |gens|.
bool is_basis_of_saturation(const std::vector<LatticeVector>& gens);

struct KernelTorus {
  std::vector<RationalVector> kernel_basis;  // basis of ker(W : R^N -> R^n)
  FiniteAbelianGroup component_group;        // pi_0 of {a | W a in Z^n}/Z^N
};

KernelTorus kernel_torus(const IntegerMatrix& w);

// Invariant factors and free rank of Z^rank / Zspan(gens).
FiniteAbelianGroup quotient_invariants(const std::vector<LatticeVector>& gens,
                                       std::size_t rank);

// Exact count of Z^2 points in {a1*mu1 + a2*mu2 : 0 <= a1, a2 <= 1}.
Int parallelogram_lattice_points(const LatticeVector& mu1,
                                 const LatticeVector& mu2);

// Given a saturated basis (rows, possibly empty), a unimodular matrix whose
// first rows are exactly that basis. Throws InvalidInput if not saturated.
IntegerMatrix extend_to_unimodular(const std::vector<LatticeVector>& basis,
                                   std::size_t rank);

// The isotropy/obstruction group {a in R^k | sum a_j v_j in Z^n} / Z^k for
// the column matrix of the vectors: Z^(k - rank) from the kernel torus plus
// the invariant factors >= 2.
FiniteAbelianGroup column_span_group(const IntegerMatrix& columns);

}  // namespace conetoric
