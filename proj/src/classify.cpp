#include "conetoric/classify.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace conetoric {

using boost::multiprecision::abs;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

namespace {

Int det2(const LatticeVector& a, const LatticeVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// g = gcd(a, b) >= 0 together with x, y such that a x + b y = g
void ext_gcd(Int a, Int b, Int& g, Int& x, Int& y) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_x - q * xx;
    old_x = std::move(xx);
    xx = std::move(t);
    t = old_y - q * yy;
    old_y = std::move(yy);
    yy = std::move(t);
  }
  g = std::move(old_r);
  x = std::move(old_x);
  y = std::move(old_y);
  if (g < 0) {
    g = -g;
    x = -x;
    y = -y;
  }
}

Int mod_pos(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int g, x, y;
  ext_gcd(a, m, g, x, y);
  if (g != 1)
    throw Error(ErrorCode::InvalidInput, "mod_inverse: arguments not coprime");
  return mod_pos(x, m);
}

void check_pair(const LatticeVector& mu1, const LatticeVector& mu2,
                const char* where) {
  if (mu1.size() != 2 || mu2.size() != 2)
    throw Error(ErrorCode::RankMismatch, std::string(where) + ": rank 2 required");
  if (!is_primitive(mu1) || !is_primitive(mu2))
    throw Error(ErrorCode::NotPrimitive,
                std::string(where) + ": weights must be primitive");
}

}  // namespace

Homology3 homology_3d(const LatticeVector& mu1, const LatticeVector& mu2) {
  check_pair(mu1, mu2, "homology_3d");
  Homology3 h;
  std::size_t r = det2(mu1, mu2) != 0 ? 2 : 1;  // primitive vectors are nonzero
  h.h1 = FiniteAbelianGroup::free_of_rank(2 - r);
  h.h2 = quotient_invariants({mu1, mu2}, 2);
  return h;
}

LensForm lens_canonical_form(const LatticeVector& mu1,
                             const LatticeVector& mu2) {
  check_pair(mu1, mu2, "lens_canonical_form");
  Int d = det2(mu1, mu2);
  if (d == 0)
    throw Error(ErrorCode::DegenerateWedge,
                "lens_canonical_form: rays are parallel");
  Int q = abs(d);
  if (q == 1) return {q, 0};
  // Complete mu1 to a basis (mu1, w) and expand mu2 = a*mu1 + q*w, flipping
  // the sign of w so the w-coefficient is +q. Then a mod q is invariant
  // under every unimodular map fixing the ray of mu1, and swapping the rays
  // replaces a by its inverse mod q.
  Int g, u, v;
  ext_gcd(mu1[0], mu1[1], g, u, v);  // mu1[0] u + mu1[1] v = 1
  LatticeVector w{-v, u};            // det(mu1, w) = 1
  // The w-coefficient of mu2 is det(mu1, mu2) = +-q; flipping the sign of w
  // normalizes it to +q and leaves the mu1-coefficient alpha unchanged.
  Int alpha = det2(mu2, w);
  Int a = mod_pos(alpha, q);
  Int a_inv = mod_inverse(a, q);
  return {q, std::min(a, a_inv)};
}

const char* ClassificationRecord::case_name() const {
  switch (which()) {
    case Case::Free3D: return "Free3D";
    case Case::Lens3D: return "Lens3D";
    case Case::FreeBundle: return "FreeBundle";
    case Case::GoodCone: return "GoodCone";
    case Case::SplitProduct: return "SplitProduct";
    case Case::NotRealizable: return "NotRealizable";
  }
  return "?";
}

ClassificationRecord classify(const MomentInput& input) {
  if (input.rank < 2)
    throw Error(ErrorCode::InvalidInput, "classify: rank must be >= 2");
  if (input.cone.rank() != input.rank)
    throw Error(ErrorCode::InvalidInput,
                "classify: cone rank differs from the declared rank");
  const Cone& c = input.cone;
  const bool full_space = c.normals().empty();
  if (input.winding) {
    if (*input.winding < 1)
      throw Error(ErrorCode::InvalidInput, "classify: winding must be >= 1");
    if (input.rank != 2 || !full_space)
      throw Error(ErrorCode::InvalidInput,
                  "classify: winding is meaningful only for the rank-2 full plane");
  }

  if (input.rank == 2) {
    if (full_space) {
      Free3DCase f;
      f.winding = input.winding.value_or(1);
      f.winding_defaulted = !input.winding.has_value();
      return {f};
    }
    if (c.is_pointed() && c.is_full_dimensional()) {
      const auto& rays = c.rays();
      if (rays.size() != 2)
        throw Error(ErrorCode::InvalidInput,
                    "classify: pointed full-dimensional rank-2 cone without two rays");
      Lens3DCase l;
      l.mu1 = rays[0];
      l.mu2 = rays[1];
      l.lens = lens_canonical_form(l.mu1, l.mu2);
      l.homology = homology_3d(l.mu1, l.mu2);
      return {l};
    }
    throw Error(ErrorCode::DegenerateWedge,
                "classify: degenerate rank-2 cone (the moment cone does not "
                "determine the invariant)");
  }

  if (full_space) {
    FreeBundleCase f;
    f.base_sphere_dim = input.rank - 1;
    f.bundle_class_group = f.base_sphere_dim == 2
                               ? FiniteAbelianGroup::free_of_rank(input.rank)
                               : FiniteAbelianGroup::trivial();
    return {f};
  }

  if (!c.is_full_dimensional()) {
    NotRealizableCase nr;
    GoodnessFailure fail;
    fail.reason = "cone has empty interior";
    std::vector<LatticeVector> span = c.rays();
    span.insert(span.end(), c.lineality_basis().begin(),
                c.lineality_basis().end());
    fail.face.span_basis = saturation(span);
    fail.face.codim = c.rank() - fail.face.span_basis.size();
    nr.report.failures.push_back(std::move(fail));
    return {std::move(nr)};
  }

  // Goodness of the full cone, lineality face included: a good cone with
  // lineality k has exactly rank-k normals forming a lattice basis, so it is
  // the split-product model in adapted coordinates.
  GoodnessReport rep = is_good_facewise(c);
  const std::size_t k = c.lineality_dimension();
  if (!rep.is_good) return {NotRealizableCase{std::move(rep)}};
  if (k > 0) {
    SplitProductCase s;
    s.torus_rank = k;
    s.sphere_dim = 2 * input.rank - 1 - k;
    return {s};
  }
  return {GoodConeCase{c}};
}

namespace {

// A with A * from_j = to_j for all j, if an integral one exists.
std::optional<IntegerMatrix> integral_map(
    const std::vector<LatticeVector>& from,
    const std::vector<LatticeVector>& to, std::size_t n) {
  RationalMatrix rows = rational_from_rows(from);
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector rhs(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) rhs[j] = Rat(to[j][i]);
    auto x = solve_rational(rows, rhs);
    if (!x) return std::nullopt;
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (denominator((*x)[jj]) != 1) return std::nullopt;
      a.at(i, jj) = numerator((*x)[jj]);
    }
  }
  return a;
}

std::vector<LatticeVector> generators_of(const Cone& c) {
  std::vector<LatticeVector> gens = c.rays();
  gens.insert(gens.end(), c.lineality_basis().begin(),
              c.lineality_basis().end());
  return gens;
}

// coordinates of v in the given saturated row basis (exact, integral)
LatticeVector coords_in_basis(const std::vector<LatticeVector>& basis,
                              const LatticeVector& v, std::size_t n) {
  RationalMatrix cols(n, RationalVector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = Rat(basis[i][j]);
  auto sol = solve_rational(cols, to_rational(v));
  if (!sol)
    throw Error(ErrorCode::InvalidInput, "coords_in_basis: vector outside span");
  LatticeVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (denominator((*sol)[i]) != 1)
      throw Error(ErrorCode::InvalidInput, "coords_in_basis: basis not saturated");
    out[i] = numerator((*sol)[i]);
  }
  return out;
}

IntegerMatrix block_diag(const IntegerMatrix& a, std::size_t leading_identity,
                         std::size_t trailing_identity) {
  const std::size_t n = leading_identity + a.rows() + trailing_identity;
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.at(leading_identity + i, leading_identity + j) = a.at(i, j);
  return m;
}

EquivalenceResult equivalent_with(IntegerMatrix a) {
  EquivalenceResult res;
  res.status = EquivalenceResult::Status::Equivalent;
  res.witness = std::move(a);
  return res;
}

}  // namespace

EquivalenceResult cones_equivalent(const Cone& c1, const Cone& c2) {
  if (c1.rank() != c2.rank())
    throw Error(ErrorCode::RankMismatch, "cones_equivalent: ranks differ");
  const std::size_t n = c1.rank();
  EquivalenceResult no;
  no.status = EquivalenceResult::Status::Inequivalent;

  if (c1.lineality_dimension() != c2.lineality_dimension() ||
      c1.rays().size() != c2.rays().size())
    return no;
  const std::size_t d1 = rational_rank(rational_from_rows(generators_of(c1)));
  const std::size_t d2 = rational_rank(rational_from_rows(generators_of(c2)));
  if (d1 != d2) return no;

  if (c1 == c2) return equivalent_with(IntegerMatrix::identity(n));

  if (d1 < n) {
    // Restrict to the saturated span lattices and extend by the identity on
    // a complement.
    auto p1 = saturation(generators_of(c1));
    auto p2 = saturation(generators_of(c2));
    auto restrict_cone = [&](const Cone& c, const std::vector<LatticeVector>& p) {
      std::vector<LatticeVector> rays, lin;
      for (const auto& r : c.rays()) rays.push_back(coords_in_basis(p, r, n));
      for (const auto& l : c.lineality_basis())
        lin.push_back(coords_in_basis(p, l, n));
      return cone_from_rays(d1, rays, lin);
    };
    EquivalenceResult rec =
        cones_equivalent(restrict_cone(c1, p1), restrict_cone(c2, p2));
    if (rec.status != EquivalenceResult::Status::Equivalent) return rec;
    IntegerMatrix q1t = extend_to_unimodular(p1, n).transposed();
    IntegerMatrix q2t = extend_to_unimodular(p2, n).transposed();
    IntegerMatrix a =
        q2t * block_diag(*rec.witness, 0, n - d1) * q1t.inverse_unimodular();
    return equivalent_with(std::move(a));
  }

  const std::size_t k = c1.lineality_dimension();
  if (k > 0) {
    // Any lattice isomorphism of the lineality spaces extends; equivalence
    // is decided on the pointed quotients.
    LinealityQuotient lq1 = project_modulo_lineality(c1);
    LinealityQuotient lq2 = project_modulo_lineality(c2);
    EquivalenceResult rec = cones_equivalent(lq1.projected, lq2.projected);
    if (rec.status != EquivalenceResult::Status::Equivalent) return rec;
    IntegerMatrix a = lq2.basis.transposed() * block_diag(*rec.witness, k, 0) *
                      lq1.basis.transposed().inverse_unimodular();
    return equivalent_with(std::move(a));
  }

  // pointed and full-dimensional
  if (n == 2 && c1.rays().size() == 2) {
    if (!(lens_canonical_form(c1.rays()[0], c1.rays()[1]) ==
          lens_canonical_form(c2.rays()[0], c2.rays()[1])))
      return no;
  }
  if (c1.rays().size() > 10) {
    EquivalenceResult cap;
    cap.status = EquivalenceResult::Status::CapExceeded;
    return cap;
  }

  // fixed independent n-tuple from the first cone
  std::vector<LatticeVector> t1;
  RationalMatrix picked;
  for (const auto& r : c1.rays()) {
    picked.push_back(to_rational(r));
    if (rational_rank(picked) == picked.size()) {
      t1.push_back(r);
    } else {
      picked.pop_back();
    }
    if (t1.size() == n) break;
  }
  if (t1.size() != n) return no;  // cannot happen for full-dimensional cones

  const auto& rays2 = c2.rays();
  std::vector<std::size_t> idx(rays2.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::size_t> sel(n);
  std::vector<bool> used(rays2.size(), false);

  std::vector<LatticeVector> sorted1 = c1.rays();  // already lex-sorted
  std::optional<IntegerMatrix> found;

  auto matches = [&](const IntegerMatrix& a) {
    std::vector<LatticeVector> image;
    image.reserve(sorted1.size());
    for (const auto& r : sorted1) image.push_back(a.apply(r));
    std::sort(image.begin(), image.end(), lex_less);
    return image == rays2;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == n) {
      std::vector<LatticeVector> t2;
      t2.reserve(n);
      for (std::size_t s : sel) t2.push_back(rays2[s]);
      auto a = integral_map(t1, t2, n);
      if (a && a->is_unimodular() && matches(*a)) found = *a;
      return;
    }
    for (std::size_t i = 0; i < rays2.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      sel[depth] = i;
      self(self, depth + 1);
      used[i] = false;
      if (found) return;
    }
  };
  rec(rec, 0);

  if (found) return equivalent_with(std::move(*found));
  return no;
}

}  // namespace conetoric
