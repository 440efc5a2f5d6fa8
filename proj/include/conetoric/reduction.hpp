#pragma once

#include "conetoric/cone.hpp"

#include <string>
#include <utility>
#include <vector>

namespace conetoric {

// The reduction presentation of a full-dimensional cone: the weight map
// sending the j-th coordinate direction to the j-th normal, its kernel
// torus, and the isotropy group attached to each face. The total space is
// the sphere quotient (level set of the kernel-torus moment map intersected
// with the unit sphere, divided by the kernel torus); it is free exactly
// when every face isotropy is trivial.
struct ReductionData {
  std::size_t num_normals = 0;  // N
  IntegerMatrix weight_map;     // n x N, column j is the j-th normal
  std::vector<RationalVector> kernel_basis;
  FiniteAbelianGroup component_group;
  std::vector<std::pair<Face, FiniteAbelianGroup>> face_isotropies;

  bool is_free() const;
};

// Throws NotFullDimensional / NoNormals.
ReductionData build_reduction(const Cone& c);

struct SampleCheck {
  RationalVector sample;
  bool in_level_set = false;  // membership the check established
  bool pass = false;
  std::string detail;
};

struct VerificationOutcome {
  bool all_pass = true;
  std::vector<SampleCheck> cone_side;  // samples in the cone's space
  std::vector<SampleCheck> dual_side;  // samples in R^N
};

// Checks the level-set identity in both directions.
// Cone-side sample eta: its pairing vector t = (<eta, v_1>, ..., <eta, v_N>)
// must be componentwise nonnegative exactly when eta lies in the cone, and
// must annihilate the kernel basis.
// Dual-side sample t: if t >= 0 and t annihilates the kernel basis, the
// system <eta, v_j> = t_j must be exactly solvable with solution in the
// cone; otherwise no solution in the cone may exist.
VerificationOutcome verify_level_set_samples(
    const ReductionData& r, const Cone& c,
    const std::vector<RationalVector>& cone_side_samples,
    const std::vector<RationalVector>& dual_side_samples);

}  // namespace conetoric
