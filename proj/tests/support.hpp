#pragma once

// Test-only oracles and random generators. The oracles are deliberately
// independent of the library's computation routes.

#include "conetoric/cone.hpp"

#include <boost/multiprecision/integer.hpp>

#include <random>
#include <vector>

namespace conetoric::testing {

inline LatticeVector vec(std::initializer_list<long long> xs) {
  LatticeVector v;
  for (long long x : xs) v.push_back(x);
  return v;
}

inline RationalVector rvec(std::initializer_list<Rat> xs) {
  return RationalVector(xs);
}

inline IntegerMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<LatticeVector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    cols = rs.back().size();
  }
  return IntegerMatrix::from_rows(rs, cols);
}

// ---- determinantal-divisor oracle for Smith invariant factors ----
// d_k = g_k / g_(k-1) with g_k the gcd of all k x k minors; independent of
// any elimination order.
inline void subsets_rec(std::size_t start, std::size_t total, std::size_t want,
                        std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == want) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (want - cur.size()) <= total; ++i) {
    cur.push_back(i);
    subsets_rec(i + 1, total, want, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t total,
                                                     std::size_t want) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(0, total, want, cur, out);
  return out;
}

inline std::vector<Int> oracle_invariant_factors(const IntegerMatrix& a) {
  const std::size_t m = std::min(a.rows(), a.cols());
  std::vector<Int> g;  // determinantal divisors
  for (std::size_t k = 1; k <= m; ++k) {
    Int gk = 0;
    for (const auto& rows : subsets(a.rows(), k))
      for (const auto& cols : subsets(a.cols(), k)) {
        IntegerMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub.at(i, j) = a.at(rows[i], cols[j]);
        gk = boost::multiprecision::gcd(gk, sub.determinant());
      }
    if (gk == 0) break;
    g.push_back(gk);
  }
  std::vector<Int> d;
  for (std::size_t k = 0; k < g.size(); ++k)
    d.push_back(k == 0 ? g[0] : Int(g[k] / g[k - 1]));
  return d;
}

// ---- brute-force extreme rays of a pointed cone ----
// Every extreme ray spans the nullspace of some (rank-1)-subset of normals
// of full rank and satisfies all inequalities.
inline std::vector<LatticeVector> oracle_rays_pointed(
    std::size_t rank, const std::vector<LatticeVector>& normals) {
  std::vector<LatticeVector> found;
  if (rank == 0) return found;
  for (const auto& pick : subsets(normals.size(), rank - 1)) {
    RationalMatrix rows;
    for (std::size_t i : pick) rows.push_back(to_rational(normals[i]));
    if (rational_rank(rows) != rank - 1) continue;
    auto null = rational_nullspace(rows, rank);
    if (null.size() != 1) continue;
    Int denom_lcm = 1;
    for (const Rat& x : null[0])
      denom_lcm = boost::multiprecision::lcm(
          denom_lcm, Int(boost::multiprecision::denominator(x)));
    LatticeVector w(rank);
    for (std::size_t i = 0; i < rank; ++i)
      w[i] = boost::multiprecision::numerator(null[0][i] * Rat(denom_lcm));
    if (is_zero(w)) continue;
    w = primitivize(w);
    for (const LatticeVector& candidate : {w, negated(w)}) {
      bool feasible = true;
      for (const auto& v : normals)
        if (dot(candidate, v) < 0) {
          feasible = false;
          break;
        }
      if (feasible) found.push_back(candidate);
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// ---- random data ----

inline LatticeVector random_vector(std::mt19937_64& rng, std::size_t n, int lo,
                                   int hi, bool nonzero) {
  std::uniform_int_distribution<int> dist(lo, hi);
  for (;;) {
    LatticeVector v(n);
    for (auto& x : v) x = dist(rng);
    if (!nonzero || !is_zero(v)) return v;
  }
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                   std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

inline IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix a = IntegerMatrix::identity(n);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> strokes(4, 9);
  int k = strokes(rng);
  for (int s = 0; s < k; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0:
        a.swap_rows(i, j);
        break;
      case 1:
        a.negate_row(i);
        break;
      default: {
        if (i == j) break;
        int c = coef(rng);
        if (c != 0) a.add_row_multiple(i, j, c);
        break;
      }
    }
  }
  return a;
}

inline Cone random_cone(std::mt19937_64& rng, std::size_t max_rank,
                        std::size_t max_normals, int lo, int hi) {
  std::uniform_int_distribution<std::size_t> rank_dist(2, max_rank);
  std::size_t rank = rank_dist(rng);
  std::uniform_int_distribution<std::size_t> count_dist(1, max_normals);
  std::size_t count = count_dist(rng);
  std::vector<LatticeVector> normals;
  for (std::size_t i = 0; i < count; ++i)
    normals.push_back(random_vector(rng, rank, lo, hi, true));
  return cone_from_normals(rank, normals);
}

inline Cone random_full_dimensional_cone(std::mt19937_64& rng,
                                         std::size_t max_rank,
                                         std::size_t max_normals, int lo,
                                         int hi) {
  for (;;) {
    Cone c = random_cone(rng, max_rank, max_normals, lo, hi);
    if (c.is_full_dimensional()) return c;
  }
}

}  // namespace conetoric::testing
