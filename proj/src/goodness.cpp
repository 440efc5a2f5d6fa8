#include "conetoric/goodness.hpp"

#include "conetoric/reduction.hpp"

#include <boost/multiprecision/integer.hpp>

namespace conetoric {

namespace {

void require_full_dimensional(const Cone& c, const char* where) {
  if (!c.is_full_dimensional())
    throw Error(ErrorCode::NotFullDimensional,
                std::string(where) + ": cone has empty interior");
}

// Obstruction computed through the face span: write each active normal in
// the coordinates of a saturated basis of its span lattice and read the
// quotient off that coefficient matrix. Free rank counts Q-dependencies.
FiniteAbelianGroup facewise_obstruction(
    const std::vector<LatticeVector>& active_normals) {
  std::vector<LatticeVector> sat = saturation(active_normals);
  const std::size_t r = sat.size();
  RationalMatrix sat_t(active_normals.front().size(), RationalVector(r));
  for (std::size_t i = 0; i < sat.size(); ++i)
    for (std::size_t j = 0; j < sat[i].size(); ++j) sat_t[j][i] = Rat(sat[i][j]);
  std::vector<LatticeVector> coeff_rows;
  for (const auto& v : active_normals) {
    auto sol = solve_rational(sat_t, to_rational(v));
    if (!sol)
      throw Error(ErrorCode::InvalidInput,
                  "facewise_obstruction: normal outside its span lattice");
    LatticeVector c(r);
    for (std::size_t i = 0; i < r; ++i)
      c[i] = boost::multiprecision::numerator((*sol)[i]);
    coeff_rows.push_back(std::move(c));
  }
  SmithNormalForm s =
      smith_normal_form(IntegerMatrix::from_rows(coeff_rows, r));
  std::vector<Int> torsion;
  for (const Int& d : s.invariant_factors())
    if (d != 1) torsion.push_back(d);
  return FiniteAbelianGroup::make(active_normals.size() - s.rank(),
                                  std::move(torsion));
}

}  // namespace

GoodnessReport is_good_facewise(const Cone& c) {
  require_full_dimensional(c, "is_good_facewise");
  GoodnessReport report;
  std::vector<Face> faces = faces_of(c);
  report.checked_faces = faces.size();
  for (Face& f : faces) {
    std::vector<LatticeVector> active;
    active.reserve(f.active_normal_indices.size());
    for (std::size_t j : f.active_normal_indices)
      active.push_back(c.normals()[j]);
    if (active.size() != f.codim) {
      GoodnessFailure fail;
      fail.reason = active.size() > f.codim
                        ? "active normals exceed codimension"
                        : "active normals fewer than codimension";
      fail.obstruction = facewise_obstruction(active);
      fail.face = std::move(f);
      report.failures.push_back(std::move(fail));
      continue;
    }
    if (!is_basis_of_saturation(active)) {
      GoodnessFailure fail;
      fail.reason =
          "active normals are not a Z-basis of the lattice points of their span";
      fail.obstruction = facewise_obstruction(active);
      fail.face = std::move(f);
      report.failures.push_back(std::move(fail));
    }
  }
  report.is_good = report.failures.empty();
  return report;
}

GoodnessReport is_good_via_isotropy(const Cone& c) {
  require_full_dimensional(c, "is_good_via_isotropy");
  GoodnessReport report;
  if (c.normals().empty()) {
    // The full space has no reduction presentation and no proper faces;
    // it is vacuously good.
    report.is_good = true;
    return report;
  }
  ReductionData r = build_reduction(c);
  report.checked_faces = r.face_isotropies.size();
  for (const auto& [face, group] : r.face_isotropies) {
    if (group.is_trivial()) continue;
    GoodnessFailure fail;
    fail.face = face;
    fail.reason = "nontrivial isotropy group";
    fail.obstruction = group;
    report.failures.push_back(std::move(fail));
  }
  report.is_good = report.failures.empty();
  return report;
}

}  // namespace conetoric
