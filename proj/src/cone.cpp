#include "conetoric/cone.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace conetoric {

namespace {

void check_rank(const LatticeVector& v, std::size_t rank, const char* where) {
  if (v.size() != rank)
    throw Error(ErrorCode::RankMismatch,
                std::string(where) + ": vector length does not match rank");
}

LatticeVector scaled_diff(const Int& a, const LatticeVector& x, const Int& b,
                          const LatticeVector& y) {
  LatticeVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return out;
}

}  // namespace

GeneratorSet dual_generators(std::size_t rank,
                             const std::vector<LatticeVector>& constraints) {
  if (constraints.size() > 64)
    throw Error(ErrorCode::InvalidInput,
                "dual_generators: more than 64 constraints");
  std::vector<LatticeVector> lin;
  lin.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    LatticeVector e(rank);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const LatticeVector& v : constraints) {
    check_rank(v, rank, "dual_generators");

    std::size_t cut = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(lin[i], v) != 0) {
        cut = i;
        break;
      }

    if (cut < lin.size()) {
      // The constraint slices the lineality space: one lineality generator
      // becomes a ray, the rest (and all rays) are shifted into the
      // hyperplane along it.
      LatticeVector l0 = lin[cut];
      Int d0 = dot(l0, v);
      if (d0 < 0) {
        l0 = negated(l0);
        d0 = -d0;
      }
      std::vector<LatticeVector> new_lin;
      new_lin.reserve(lin.size() - 1);
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == cut) continue;
        new_lin.push_back(primitivize(scaled_diff(d0, lin[i], dot(lin[i], v), l0)));
      }
      for (LatticeVector& r : rays)
        r = primitivize(scaled_diff(d0, r, dot(r, v), l0));
      rays.push_back(std::move(l0));
      lin = std::move(new_lin);
    } else {
      std::vector<std::uint64_t> active(rays.size(), 0);
      for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t k = 0; k < processed.size(); ++k)
          if (dot(rays[i], processed[k]) == 0)
            active[i] |= std::uint64_t(1) << k;

      std::vector<Int> val(rays.size());
      for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(rays[i], v);

      std::vector<LatticeVector> next;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] >= 0) next.push_back(rays[i]);

      for (std::size_t p = 0; p < rays.size(); ++p) {
        if (val[p] <= 0) continue;
        for (std::size_t q = 0; q < rays.size(); ++q) {
          if (val[q] >= 0) continue;
          // combinatorial adjacency test (valid for a minimal pair)
          std::uint64_t z = active[p] & active[q];
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size(); ++r) {
            if (r == p || r == q) continue;
            if ((z & ~active[r]) == 0) {
              adjacent = false;
              break;
            }
          }
          if (adjacent)
            next.push_back(primitivize(scaled_diff(val[p], rays[q], val[q], rays[p])));
        }
      }
      rays = std::move(next);
    }
    processed.push_back(v);
  }

  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::sort(lin.begin(), lin.end(), lex_less);
  return {std::move(rays), std::move(lin)};
}

bool Cone::contains(const RationalVector& point) const {
  if (point.size() != rank_)
    throw Error(ErrorCode::RankMismatch, "Cone::contains: point rank mismatch");
  for (const auto& v : normals_)
    if (dot(point, v) < 0) return false;
  return true;
}

bool Cone::contains(const LatticeVector& point) const {
  if (point.size() != rank_)
    throw Error(ErrorCode::RankMismatch, "Cone::contains: point rank mismatch");
  for (const auto& v : normals_)
    if (dot(point, v) < 0) return false;
  return true;
}

namespace {

bool subset_of(const Cone& a, const Cone& b) {
  for (const auto& r : a.rays())
    if (!b.contains(r)) return false;
  for (const auto& l : a.lineality_basis())
    if (!b.contains(l) || !b.contains(negated(l))) return false;
  return true;
}

}  // namespace

bool Cone::operator==(const Cone& rhs) const {
  if (rank_ != rhs.rank_) return false;
  if (normals_ == rhs.normals_) return true;
  return subset_of(*this, rhs) && subset_of(rhs, *this);
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "Cone(rank=" << rank_ << ", normals=[";
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (i) os << ',';
    os << conetoric::to_string(normals_[i]);
  }
  os << "])";
  return os.str();
}

namespace {

// canonical saturated basis of {x : <x, v> = 0 for all v in vectors}
std::vector<LatticeVector> nullspace_lattice_basis(
    std::size_t rank, const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) {
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < rank; ++i) {
      LatticeVector e(rank);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  KernelTorus kt = kernel_torus(IntegerMatrix::from_rows(vectors, rank));
  std::vector<LatticeVector> basis;
  for (const auto& k : kt.kernel_basis) {
    LatticeVector b(rank);
    for (std::size_t i = 0; i < rank; ++i)
      b[i] = boost::multiprecision::numerator(k[i]);
    basis.push_back(std::move(b));
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

// cone(gens) lies inside the half-space of v (lineality generators must lie
// on the hyperplane)
bool within_halfspace(const GeneratorSet& gens, const LatticeVector& v) {
  for (const auto& r : gens.rays)
    if (dot(r, v) < 0) return false;
  for (const auto& l : gens.lineality)
    if (dot(l, v) != 0) return false;
  return true;
}

}  // namespace

Cone cone_from_normals(std::size_t rank,
                       const std::vector<LatticeVector>& raw_normals) {
  if (rank == 0)
    throw Error(ErrorCode::InvalidInput, "cone_from_normals: rank must be >= 1");
  std::vector<LatticeVector> normals;
  normals.reserve(raw_normals.size());
  for (const auto& v : raw_normals) {
    check_rank(v, rank, "cone_from_normals");
    if (is_zero(v))
      throw Error(ErrorCode::ZeroVector, "cone_from_normals: zero normal");
    normals.push_back(primitivize(v));
  }
  std::sort(normals.begin(), normals.end(), lex_less);
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

  // An inequality is redundant iff deleting it leaves the same cone; decided
  // exactly by checking the remaining cone's generators against it.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      std::vector<LatticeVector> others;
      others.reserve(normals.size() - 1);
      for (std::size_t i = 0; i < normals.size(); ++i)
        if (i != j) others.push_back(normals[i]);
      if (within_halfspace(dual_generators(rank, others), normals[j])) {
        normals.erase(normals.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
  }

  Cone c;
  c.rank_ = rank;
  GeneratorSet gens = dual_generators(rank, normals);
  c.normals_ = std::move(normals);
  c.rays_ = std::move(gens.rays);
  c.lineality_basis_ = nullspace_lattice_basis(rank, c.normals_);
  std::vector<LatticeVector> span = c.rays_;
  span.insert(span.end(), c.lineality_basis_.begin(), c.lineality_basis_.end());
  c.full_dimensional_ = rational_rank(rational_from_rows(span)) == rank;
  return c;
}

Cone cone_from_rays(std::size_t rank, const std::vector<LatticeVector>& rays,
                    const std::vector<LatticeVector>& lineality_gens) {
  if (rank == 0)
    throw Error(ErrorCode::InvalidInput, "cone_from_rays: rank must be >= 1");
  std::vector<LatticeVector> constraints;
  for (const auto& r : rays) {
    check_rank(r, rank, "cone_from_rays");
    if (is_zero(r))
      throw Error(ErrorCode::ZeroVector, "cone_from_rays: zero ray");
    constraints.push_back(primitivize(r));
  }
  for (const auto& l : lineality_gens) {
    check_rank(l, rank, "cone_from_rays");
    if (is_zero(l))
      throw Error(ErrorCode::ZeroVector, "cone_from_rays: zero lineality generator");
    LatticeVector p = primitivize(l);
    constraints.push_back(p);
    constraints.push_back(negated(p));
  }
  // generators of the dual cone are the inequalities of the bidual = cone
  GeneratorSet dual = dual_generators(rank, constraints);
  std::vector<LatticeVector> candidate_normals = dual.rays;
  for (const auto& b : dual.lineality) {
    candidate_normals.push_back(b);
    candidate_normals.push_back(negated(b));
  }
  return cone_from_normals(rank, candidate_normals);
}

const std::vector<LatticeVector>& rays_of(const Cone& c) { return c.rays(); }

std::size_t lineality_dimension(const Cone& c) {
  return c.lineality_dimension();
}

std::vector<Face> faces_of(const Cone& c) {
  const auto& rays = c.rays();
  const auto& normals = c.normals();
  if (rays.size() > 64)
    throw Error(ErrorCode::InvalidInput, "faces_of: more than 64 rays");

  const std::uint64_t full = rays.empty()
                                 ? 0
                                 : (rays.size() == 64
                                        ? ~std::uint64_t(0)
                                        : (std::uint64_t(1) << rays.size()) - 1);
  std::vector<std::uint64_t> orth(normals.size(), 0);
  for (std::size_t j = 0; j < normals.size(); ++j)
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(rays[i], normals[j]) == 0) orth[j] |= std::uint64_t(1) << i;

  // Intersection closure of the per-normal ray sets enumerates every set
  // ⋂_{j in J} orth[j], i.e. the extreme-ray set of every face.
  std::set<std::uint64_t> closed(orth.begin(), orth.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> snapshot(closed.begin(), closed.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b)
        if (closed.insert(snapshot[a] & snapshot[b]).second) grew = true;
  }

  std::vector<Face> faces;
  for (std::uint64_t s : closed) {
    if (s == full) continue;  // improper face (the cone itself)
    std::vector<LatticeVector> face_rays;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (s & (std::uint64_t(1) << i)) face_rays.push_back(rays[i]);
    if (face_rays.empty() && c.lineality_dimension() == 0) continue;  // zero face
    Face f;
    for (std::size_t j = 0; j < normals.size(); ++j)
      if ((s & ~orth[j]) == 0) f.active_normal_indices.push_back(j);
    std::vector<LatticeVector> span = face_rays;
    span.insert(span.end(), c.lineality_basis().begin(),
                c.lineality_basis().end());
    f.span_basis = saturation(span);
    f.codim = c.rank() - f.span_basis.size();
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.active_normal_indices < b.active_normal_indices;
  });
  return faces;
}

Cone transformed(const Cone& c, const IntegerMatrix& a) {
  if (a.rows() != c.rank() || a.cols() != c.rank())
    throw Error(ErrorCode::RankMismatch, "transformed: matrix size mismatch");
  if (!a.is_unimodular())
    throw Error(ErrorCode::InvalidInput, "transformed: matrix not unimodular");
  IntegerMatrix ait = a.inverse_unimodular().transposed();
  std::vector<LatticeVector> normals;
  normals.reserve(c.normals().size());
  for (const auto& v : c.normals()) normals.push_back(ait.apply(v));
  return cone_from_normals(c.rank(), normals);
}

LinealityQuotient project_modulo_lineality(const Cone& c) {
  const std::size_t k = c.lineality_dimension();
  const std::size_t n = c.rank();
  if (k == 0) return {c, IntegerMatrix::identity(n)};
  if (k == n)
    throw Error(ErrorCode::InvalidInput,
                "project_modulo_lineality: cone is the full space");
  IntegerMatrix q = extend_to_unimodular(c.lineality_basis(), n);
  std::vector<LatticeVector> projected;
  projected.reserve(c.normals().size());
  for (const auto& v : c.normals()) {
    LatticeVector w(n - k);
    for (std::size_t i = k; i < n; ++i) w[i - k] = dot(q.row(i), v);
    projected.push_back(std::move(w));
  }
  return {cone_from_normals(n - k, projected), q};
}

}  // namespace conetoric
