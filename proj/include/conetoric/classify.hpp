#pragma once

#include "conetoric/goodness.hpp"

#include <optional>
#include <variant>

namespace conetoric {

// Classification input: a moment cone plus, for the rank-2 full-plane case
// only, the winding number that the cone itself cannot see.
struct MomentInput {
  std::size_t rank = 0;
  Cone cone;
  std::optional<long long> winding;
};

struct Homology3 {
  FiniteAbelianGroup h1, h2;
  bool operator==(const Homology3&) const = default;
};

// H1 is the kernel lattice of (n1, n2) -> n1*mu1 + n2*mu2 (free of rank 0
// or 1); H2 is the weight lattice modulo Z*mu1 + Z*mu2.
Homology3 homology_3d(const LatticeVector& mu1, const LatticeVector& mu2);

struct LensForm {
  Int q;  // |det(mu1, mu2)| >= 1
  Int p;  // orbit representative in [0, q)
  bool operator==(const LensForm&) const = default;
};

// Complete invariant of a rank-2 wedge up to unimodular equivalence:
// q = |det|, p = min(a, a^-1 mod q) where mu2 = a*mu1 + q*w in a basis
// completion (mu1, w). Throws DegenerateWedge / NotPrimitive.
LensForm lens_canonical_form(const LatticeVector& mu1,
                             const LatticeVector& mu2);

// The cases of the classification, with their complete invariants.
struct Free3DCase {
  long long winding = 1;
  bool winding_defaulted = false;
};
struct Lens3DCase {
  LensForm lens;
  Homology3 homology;
  LatticeVector mu1, mu2;  // the wedge's ray pair
};
struct FreeBundleCase {
  std::size_t base_sphere_dim = 0;         // dim G - 1
  FiniteAbelianGroup bundle_class_group;   // H^2(S^d, Z^n)
};
struct GoodConeCase {
  Cone cone;  // the cone itself is the complete invariant
};
struct SplitProductCase {
  std::size_t torus_rank = 0;  // k: model is T^k x S^(2n-1-k)
  std::size_t sphere_dim = 0;
};
struct NotRealizableCase {
  GoodnessReport report;
};

struct ClassificationRecord {
  enum class Case { Free3D, Lens3D, FreeBundle, GoodCone, SplitProduct, NotRealizable };

  std::variant<Free3DCase, Lens3DCase, FreeBundleCase, GoodConeCase,
               SplitProductCase, NotRealizableCase>
      payload;

  Case which() const { return static_cast<Case>(payload.index()); }
  const char* case_name() const;

  template <class T>
  const T& as() const {
    return std::get<T>(payload);
  }
};

// Total on valid inputs; throws InvalidInput (rank < 2, winding misuse) and
// DegenerateWedge (rank-2 cone that is neither the full plane nor a pointed
// full-dimensional wedge, where the cone does not determine the invariant).
ClassificationRecord classify(const MomentInput& input);

struct EquivalenceResult {
  enum class Status { Equivalent, Inequivalent, CapExceeded };
  Status status = Status::Inequivalent;
  std::optional<IntegerMatrix> witness;  // unimodular a with a(C1) = C2
};

// Searches for a lattice-preserving linear isomorphism between the cones.
// Rank-2 pointed wedges short-circuit through lens canonical forms; the
// general search matches ordered ray tuples (hard cap: 10 rays).
EquivalenceResult cones_equivalent(const Cone& c1, const Cone& c2);

}  // namespace conetoric
