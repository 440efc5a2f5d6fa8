#pragma once

#include "conetoric/lattice.hpp"

#include <string>
#include <vector>

namespace conetoric {

// Output of the double description method: cone = span(lineality) + cone(rays),
// rays extreme modulo the lineality space, everything primitive integer.
struct GeneratorSet {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

// Generators of {x in R^rank : <x, c> >= 0 for all c in constraints}.
GeneratorSet dual_generators(std::size_t rank,
                             const std::vector<LatticeVector>& constraints);

// A nonzero proper face of a cone. The active set is the maximal index set
// of normals vanishing on the face; following the surrounding text of the
// defining inequality, "active" means equality on the selected normals.
struct Face {
  std::vector<std::size_t> active_normal_indices;  // sorted
  std::size_t codim = 0;                           // rank - dim span(F)
  std::vector<LatticeVector> span_basis;           // basis of span_R(F) ∩ Z^n

  bool operator==(const Face&) const = default;
};

// A rational polyhedral cone {eta : <eta, v_i> >= 0} with its minimal set of
// primitive inward normals (lex-sorted) and cached V-representation.
// Immutable after construction; all caches are filled by the factories.
class Cone {
 public:
  // Rank-0 placeholder; real cones come from the factories below.
  Cone() = default;

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& normals() const { return normals_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality_basis() const {
    return lineality_basis_;
  }
  std::size_t lineality_dimension() const { return lineality_basis_.size(); }
  bool is_pointed() const { return lineality_basis_.empty(); }
  bool is_full_dimensional() const { return full_dimensional_; }

  bool contains(const RationalVector& point) const;
  bool contains(const LatticeVector& point) const;

  // Geometric equality (mutual containment). Minimal H-representations of
  // cones with empty interior are not unique, so comparing normal sets
  // would be too strict.
  bool operator==(const Cone& rhs) const;
  std::string to_string() const;

  friend Cone cone_from_normals(std::size_t rank,
                                const std::vector<LatticeVector>& raw_normals);
  friend Cone cone_from_rays(std::size_t rank,
                             const std::vector<LatticeVector>& rays,
                             const std::vector<LatticeVector>& lineality_gens);

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> normals_;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_basis_;
  bool full_dimensional_ = false;
};

// Primitivizes, deduplicates and drops redundant inequalities (an inequality
// is redundant iff deleting it leaves the same cone, decided exactly via ray
// computation). An empty list yields the full space.
Cone cone_from_normals(std::size_t rank,
                       const std::vector<LatticeVector>& raw_normals);

// Cone generated by the given rays plus lineality generators.
Cone cone_from_rays(std::size_t rank, const std::vector<LatticeVector>& rays,
                    const std::vector<LatticeVector>& lineality_gens = {});

const std::vector<LatticeVector>& rays_of(const Cone& c);
std::size_t lineality_dimension(const Cone& c);

// All nonzero proper faces, one per geometric face, sorted by active set.
std::vector<Face> faces_of(const Cone& c);

// Image cone a(C) under a unimodular map of the cone's ambient space.
Cone transformed(const Cone& c, const IntegerMatrix& a);

// Coordinates adapted to the lineality space: `basis` is unimodular with its
// first k rows a saturated basis of the lineality space; `projected` is the
// pointed image cone in the quotient lattice Z^(rank-k).
struct LinealityQuotient {
  Cone projected;
  IntegerMatrix basis;
};

LinealityQuotient project_modulo_lineality(const Cone& c);

}  // namespace conetoric
