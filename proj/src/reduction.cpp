#include "conetoric/reduction.hpp"

#include <sstream>

namespace conetoric {

bool ReductionData::is_free() const {
  for (const auto& [face, group] : face_isotropies)
    if (!group.is_trivial()) return false;
  return true;
}

ReductionData build_reduction(const Cone& c) {
  if (!c.is_full_dimensional())
    throw Error(ErrorCode::NotFullDimensional,
                "build_reduction: cone has empty interior");
  if (c.normals().empty())
    throw Error(ErrorCode::NoNormals,
                "build_reduction: the full space has no reduction presentation");
  ReductionData r;
  r.num_normals = c.normals().size();
  r.weight_map = IntegerMatrix::from_columns(c.normals(), c.rank());
  KernelTorus kt = kernel_torus(r.weight_map);
  r.kernel_basis = std::move(kt.kernel_basis);
  r.component_group = std::move(kt.component_group);
  for (const Face& f : faces_of(c)) {
    FiniteAbelianGroup iso =
        column_span_group(r.weight_map.columns_subset(f.active_normal_indices));
    r.face_isotropies.emplace_back(f, std::move(iso));
  }
  return r;
}

namespace {

std::string index_list(const RationalVector& t, bool negatives) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if ((t[j] < 0) != negatives) continue;
    if (!first) os << ',';
    os << j;
    first = false;
  }
  return os.str();
}

}  // namespace

VerificationOutcome verify_level_set_samples(
    const ReductionData& r, const Cone& c,
    const std::vector<RationalVector>& cone_side_samples,
    const std::vector<RationalVector>& dual_side_samples) {
  VerificationOutcome out;
  const std::size_t n = c.rank();
  const std::size_t big_n = r.num_normals;

  for (const RationalVector& eta : cone_side_samples) {
    if (eta.size() != n)
      throw Error(ErrorCode::RankMismatch,
                  "verify_level_set_samples: cone-side sample rank mismatch");
    SampleCheck chk;
    chk.sample = eta;
    RationalVector t(big_n);
    bool nonneg = true;
    for (std::size_t j = 0; j < big_n; ++j) {
      t[j] = dot(eta, r.weight_map.column(j));
      if (t[j] < 0) nonneg = false;
    }
    const bool member = c.contains(eta);
    chk.in_level_set = nonneg;
    if (member != nonneg) {
      chk.pass = false;
      chk.detail = "membership disagrees with the pairing signs";
    } else if (nonneg) {
      chk.pass = true;
      for (const RationalVector& k : r.kernel_basis)
        if (dot(t, k) != 0) {
          chk.pass = false;
          chk.detail = "pairing vector does not annihilate the kernel";
          break;
        }
      if (chk.pass) chk.detail = "inside, t=" + to_string(t);
    } else {
      chk.pass = true;
      chk.detail = "outside, negative at {" + index_list(t, true) + "}";
    }
    out.all_pass = out.all_pass && chk.pass;
    out.cone_side.push_back(std::move(chk));
  }

  RationalMatrix rows(big_n);
  for (std::size_t j = 0; j < big_n; ++j)
    rows[j] = to_rational(r.weight_map.column(j));

  for (const RationalVector& t : dual_side_samples) {
    if (t.size() != big_n)
      throw Error(ErrorCode::RankMismatch,
                  "verify_level_set_samples: dual-side sample rank mismatch");
    SampleCheck chk;
    chk.sample = t;
    bool nonneg = true;
    for (const Rat& x : t)
      if (x < 0) nonneg = false;
    bool annihilates = true;
    for (const RationalVector& k : r.kernel_basis)
      if (dot(t, k) != 0) annihilates = false;
    chk.in_level_set = nonneg && annihilates;

    auto eta = solve_rational(rows, t);
    const bool realized = eta.has_value() && c.contains(*eta);
    if (chk.in_level_set) {
      chk.pass = realized;
      chk.detail = realized ? "eta=" + to_string(*eta)
                            : "level-set point not realized by any cone point";
    } else {
      chk.pass = !realized;
      if (!chk.pass)
        chk.detail = "point outside the level set realized by eta=" +
                     to_string(*eta);
      else
        chk.detail = nonneg ? "not annihilating the kernel" :
                              "negative at {" + index_list(t, true) + "}";
    }
    out.all_pass = out.all_pass && chk.pass;
    out.dual_side.push_back(std::move(chk));
  }
  return out;
}

}  // namespace conetoric
