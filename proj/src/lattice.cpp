#include "conetoric/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <sstream>

namespace conetoric {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Int& d) {
  return make(0, {d});
}

FiniteAbelianGroup FiniteAbelianGroup::make(std::size_t free_rank,
                                            std::vector<Int> factors) {
  for (auto& f : factors) {
    if (f < 0) f = -f;
    if (f == 0)
      throw Error(ErrorCode::InvalidInput,
                  "invariant factor 0 denotes a free summand, not torsion");
  }
  factors.erase(std::remove(factors.begin(), factors.end(), Int(1)),
                factors.end());
  // gcd/lcm exchanges sort the p-adic valuations per prime into a chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (factors[i + 1] % factors[i] == 0) continue;
      Int g = gcd(factors[i], factors[i + 1]);
      Int l = lcm(factors[i], factors[i + 1]);
      factors[i] = g;
      factors[i + 1] = l;
      changed = true;
    }
    factors.erase(std::remove(factors.begin(), factors.end(), Int(1)),
                  factors.end());
  }
  FiniteAbelianGroup out;
  out.free_rank = free_rank;
  out.invariant_factors = std::move(factors);
  return out;
}

Int FiniteAbelianGroup::torsion_order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << '+';
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::vector<Int> SmithNormalForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    out.push_back(d.at(k, k));
  return out;
}

std::vector<Int> SmithNormalForm::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& x : diagonal())
    if (x != 0) out.push_back(x);
  return out;
}

std::size_t SmithNormalForm::rank() const { return invariant_factors().size(); }

namespace {

// Smallest-absolute-value nonzero entry in the trailing submatrix, ties
// broken by lowest row then lowest column.
bool find_pivot(const IntegerMatrix& m, std::size_t k, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Int& x = m.at(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
  SmithNormalForm s;
  s.d = a;
  s.u = IntegerMatrix::identity(a.rows());
  s.v = IntegerMatrix::identity(a.cols());
  IntegerMatrix& d = s.d;
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      std::size_t pi = k, pj = k;
      if (!find_pivot(d, k, pi, pj)) {
        // trailing submatrix is zero; done entirely
        k = steps;
        break;
      }
      d.swap_rows(k, pi);
      s.u.swap_rows(k, pi);
      d.swap_cols(k, pj);
      s.v.swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        if (q != 0) {
          d.add_row_multiple(i, k, -q);
          s.u.add_row_multiple(i, k, -q);
        }
        if (d.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        if (q != 0) {
          d.add_col_multiple(j, k, -q);
          s.v.add_col_multiple(j, k, -q);
        }
        if (d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller pivot now exists

      // Row and column k are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t i = k + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = k + 1; j < d.cols() && !fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            s.u.add_row_multiple(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (k == steps) break;
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.u.negate_row(k);
    }
  }
  // Sign pass for matrices that terminated early with negative pivots.
  for (std::size_t k = 0; k < steps; ++k)
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.u.negate_row(k);
    }
  return s;
}

HermiteNormalForm hermite_normal_form(const IntegerMatrix& a) {
  HermiteNormalForm res;
  res.h = a;
  res.u = IntegerMatrix::identity(a.rows());
  IntegerMatrix& h = res.h;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < a.cols() && pr < a.rows(); ++col) {
    for (;;) {
      // smallest |entry| among rows pr.., ties by lowest row
      std::size_t best_row = h.rows();
      Int best = 0;
      for (std::size_t i = pr; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int v = abs(h.at(i, col));
        if (best_row == h.rows() || v < best) {
          best_row = i;
          best = v;
        }
      }
      if (best_row == h.rows()) break;  // column has no pivot
      h.swap_rows(pr, best_row);
      res.u.swap_rows(pr, best_row);
      bool clean = true;
      for (std::size_t i = pr + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(pr, col);
        if (q != 0) {
          h.add_row_multiple(i, pr, -q);
          res.u.add_row_multiple(i, pr, -q);
        }
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(pr, col) == 0) continue;
    if (h.at(pr, col) < 0) {
      h.negate_row(pr);
      res.u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Int q = floor_div(h.at(i, col), h.at(pr, col));
      if (q != 0) {
        h.add_row_multiple(i, pr, -q);
        res.u.add_row_multiple(i, pr, -q);
      }
    }
    ++pr;
  }
  return res;
}

LatticeVector primitivize(const LatticeVector& v) {
  Int g = gcd_all(v);
  if (g == 0)
    throw Error(ErrorCode::ZeroVector, "primitivize: zero vector has no ray");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(const LatticeVector& v) { return gcd_all(v) == 1; }

std::vector<LatticeVector> saturation(const std::vector<LatticeVector>& gens) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n)
      throw Error(ErrorCode::RankMismatch, "saturation: mixed ambient ranks");
  SmithNormalForm s = smith_normal_form(IntegerMatrix::from_rows(gens, n));
  const std::size_t r = s.rank();
  // rows(a) = u^-1 d v^-1, so the span is that of the first r rows of v^-1,
  // which are part of a Z-basis of Z^n and hence already saturated.
  IntegerMatrix vinv = s.v.inverse_unimodular();
  std::vector<LatticeVector> basis;
  basis.reserve(r);
  for (std::size_t i = 0; i < r; ++i) basis.push_back(vinv.row(i));
  return basis;
}

bool is_basis_of_saturation(const std::vector<LatticeVector>& gens) {
  if (gens.empty()) return true;  // zero lattice
  const std::size_t n = gens.front().size();
  SmithNormalForm s = smith_normal_form(IntegerMatrix::from_rows(gens, n));
  auto factors = s.invariant_factors();
  if (factors.size() != gens.size()) return false;
  for (const Int& d : factors)
    if (d != 1) return false;
  return true;
}

KernelTorus kernel_torus(const IntegerMatrix& w) {
  SmithNormalForm s = smith_normal_form(w);
  const std::size_t r = s.rank();
  KernelTorus out;
  // w x = 0 iff the first r coordinates of v^-1 x vanish, so the last
  // N - r columns of v span the kernel (and are part of a basis of Z^N).
  for (std::size_t j = r; j < w.cols(); ++j)
    out.kernel_basis.push_back(to_rational(s.v.column(j)));
  std::vector<Int> torsion;
  for (const Int& d : s.invariant_factors())
    if (d != 1) torsion.push_back(d);
  out.component_group = FiniteAbelianGroup::make(0, std::move(torsion));
  return out;
}

FiniteAbelianGroup quotient_invariants(const std::vector<LatticeVector>& gens,
                                       std::size_t rank) {
  for (const auto& g : gens)
    if (g.size() != rank)
      throw Error(ErrorCode::RankMismatch,
                  "quotient_invariants: generator rank mismatch");
  SmithNormalForm s =
      smith_normal_form(IntegerMatrix::from_rows(gens, rank));
  std::vector<Int> torsion;
  for (const Int& d : s.invariant_factors())
    if (d != 1) torsion.push_back(d);
  return FiniteAbelianGroup::make(rank - s.rank(), std::move(torsion));
}

Int parallelogram_lattice_points(const LatticeVector& mu1,
                                 const LatticeVector& mu2) {
  if (mu1.size() != 2 || mu2.size() != 2)
    throw Error(ErrorCode::RankMismatch,
                "parallelogram_lattice_points: rank 2 required");
  Int det = mu1[0] * mu2[1] - mu1[1] * mu2[0];
  if (det == 0)
    throw Error(ErrorCode::DegenerateParallelogram,
                "parallelogram_lattice_points: edges are parallel");
  // p = a1 mu1 + a2 mu2 with a = adj(M) p / det; membership is
  // 0 <= a_i <= 1 tested on cleared denominators.
  Int sign = det < 0 ? -1 : 1;
  Int absdet = abs(det);
  auto in_parallelogram = [&](const Int& x, const Int& y) {
    Int a1 = sign * (mu2[1] * x - mu2[0] * y);
    Int a2 = sign * (-mu1[1] * x + mu1[0] * y);
    return a1 >= 0 && a1 <= absdet && a2 >= 0 && a2 <= absdet;
  };
  Int xs[4] = {0, mu1[0], mu2[0], mu1[0] + mu2[0]};
  Int ys[4] = {0, mu1[1], mu2[1], mu1[1] + mu2[1]};
  Int xmin = *std::min_element(xs, xs + 4), xmax = *std::max_element(xs, xs + 4);
  Int ymin = *std::min_element(ys, ys + 4), ymax = *std::max_element(ys, ys + 4);
  Int count = 0;
  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymin; y <= ymax; ++y)
      if (in_parallelogram(x, y)) ++count;
  return count;
}

IntegerMatrix extend_to_unimodular(const std::vector<LatticeVector>& basis,
                                   std::size_t rank) {
  if (basis.empty()) return IntegerMatrix::identity(rank);
  const std::size_t d = basis.size();
  IntegerMatrix p = IntegerMatrix::from_rows(basis, rank);
  SmithNormalForm s = smith_normal_form(p);
  if (s.rank() != d)
    throw Error(ErrorCode::InvalidInput,
                "extend_to_unimodular: rows are dependent");
  for (const Int& f : s.invariant_factors())
    if (f != 1)
      throw Error(ErrorCode::InvalidInput,
                  "extend_to_unimodular: basis is not saturated");
  // p = u^-1 [I 0] v^-1: the first d rows of v^-1 span the same lattice as
  // the rows of p, so p stacked over the remaining rows of v^-1 is a basis.
  IntegerMatrix vinv = s.v.inverse_unimodular();
  IntegerMatrix q(rank, rank);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < rank; ++j) q.at(i, j) = p.at(i, j);
  for (std::size_t i = d; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) q.at(i, j) = vinv.at(i, j);
  if (!q.is_unimodular())
    throw Error(ErrorCode::InvalidInput,
                "extend_to_unimodular: completion failed");
  return q;
}

FiniteAbelianGroup column_span_group(const IntegerMatrix& columns) {
  SmithNormalForm s = smith_normal_form(columns);
  std::vector<Int> torsion;
  for (const Int& d : s.invariant_factors())
    if (d != 1) torsion.push_back(d);
  return FiniteAbelianGroup::make(columns.cols() - s.rank(),
                                  std::move(torsion));
}

}  // namespace conetoric
