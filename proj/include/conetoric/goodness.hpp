#pragma once

#include "conetoric/cone.hpp"

#include <string>
#include <vector>

namespace conetoric {

struct GoodnessFailure {
  Face face;
  std::string reason;
  // The full obstruction: free rank counts continuous isotropy directions
  // (dependent active normals), torsion is saturation / Z-span.
  FiniteAbelianGroup obstruction;

  bool operator==(const GoodnessFailure&) const = default;
};

struct GoodnessReport {
  bool is_good = false;
  std::vector<GoodnessFailure> failures;  // sorted by face active set
  std::size_t checked_faces = 0;

  bool operator==(const GoodnessReport&) const = default;
};

// Face-by-face lattice check: every nonzero proper face must have exactly
// codim-many active normals forming a Z-basis of the lattice points of
// their span. Throws NotFullDimensional on cones with empty interior.
GoodnessReport is_good_facewise(const Cone& c);

// Independent route through the reduction construction: good iff the face
// isotropy group is trivial on every nonzero proper face.
GoodnessReport is_good_via_isotropy(const Cone& c);

}  // namespace conetoric
