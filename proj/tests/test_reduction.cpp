#include "conetoric/reduction.hpp"

#include "conetoric/goodness.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace conetoric;
using namespace conetoric::testing;

TEST_CASE("build_reduction: rank-2 orthant is the free presentation") {
  Cone c = cone_from_normals(2, {vec({1, 0}), vec({0, 1})});
  ReductionData r = build_reduction(c);
  CHECK(r.num_normals == 2);
  // columns follow the stored lex order (0,1),(1,0)
  CHECK(r.weight_map == mat({{0, 1}, {1, 0}}));
  CHECK(r.kernel_basis.empty());
  CHECK(r.component_group.is_trivial());
  CHECK(r.is_free());
  for (const auto& [face, group] : r.face_isotropies) CHECK(group.is_trivial());
}

TEST_CASE("build_reduction: the lens wedge has kernel torus Z/2 and is free") {
  Cone c = cone_from_normals(2, {vec({1, 0}), vec({1, 2})});
  ReductionData r = build_reduction(c);
  CHECK(r.num_normals == 2);
  CHECK(r.weight_map == mat({{1, 1}, {0, 2}}));
  CHECK(r.kernel_basis.empty());
  CHECK(r.component_group == FiniteAbelianGroup::cyclic(2));
  CHECK(r.is_free());
}

TEST_CASE("build_reduction: the non-good pair has Z/2 isotropy on its deep face") {
  Cone c = cone_from_normals(3, {vec({1, 0, 0}), vec({-1, 0, 2})});
  ReductionData r = build_reduction(c);
  CHECK_FALSE(r.is_free());
  std::size_t nontrivial = 0;
  for (const auto& [face, group] : r.face_isotropies) {
    if (group.is_trivial()) continue;
    ++nontrivial;
    CHECK(face.codim == 2);
    CHECK(group == FiniteAbelianGroup::cyclic(2));
  }
  CHECK(nontrivial == 1);
}

TEST_CASE("build_reduction: weight map columns are the stored normals") {
  std::mt19937_64 rng(8080);
  for (int iter = 0; iter < 50; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 4, 6, -3, 3);
    if (c.normals().empty()) continue;
    ReductionData r = build_reduction(c);
    for (std::size_t j = 0; j < r.num_normals; ++j)
      CHECK(r.weight_map.column(j) == c.normals()[j]);
    // kernel basis annihilated by the map
    for (const auto& k : r.kernel_basis)
      for (const Rat& x : r.weight_map.apply(k)) CHECK(x == 0);
  }
}

TEST_CASE("build_reduction errors") {
  CHECK_THROWS_AS(build_reduction(cone_from_normals(2, {})), Error);
  try {
    build_reduction(cone_from_normals(2, {}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoNormals);
  }
  Cone line = cone_from_normals(2, {vec({1, 0}), vec({-1, 0})});
  try {
    build_reduction(line);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }
}

TEST_CASE("freeness of the construction is equivalent to goodness") {
  std::mt19937_64 rng(4321);
  for (int iter = 0; iter < 150; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 4, 6, -3, 3);
    if (c.normals().empty()) continue;
    CHECK(build_reduction(c).is_free() == is_good_facewise(c).is_good);
  }
}

TEST_CASE("component group order is the index of the normal span") {
  std::mt19937_64 rng(1212);
  for (int iter = 0; iter < 100; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 4, 6, -3, 3);
    if (c.normals().empty()) continue;
    FiniteAbelianGroup quotient = quotient_invariants(c.normals(), c.rank());
    if (!quotient.is_finite()) continue;  // normals do not span
    CHECK(build_reduction(c).component_group.torsion_order() ==
          quotient.torsion_order());
  }
}

TEST_CASE("verify_level_set_samples: frozen examples") {
  {
    Cone c = cone_from_normals(2, {vec({1, 0}), vec({0, 1})});
    ReductionData r = build_reduction(c);
    auto out = verify_level_set_samples(r, c, {rvec({Rat(1), Rat(1)})}, {});
    CHECK(out.all_pass);
    CHECK(out.cone_side[0].in_level_set);
  }
  {
    Cone c = cone_from_normals(2, {vec({1, 0}), vec({1, 2})});
    ReductionData r = build_reduction(c);
    auto out = verify_level_set_samples(
        r, c, {rvec({Rat(1), Rat(0)}), rvec({Rat(-1), Rat(0)})},
        {rvec({Rat(1), Rat(1)})});
    CHECK(out.all_pass);
    CHECK(out.cone_side[0].in_level_set);       // (1,0) pairs to t=(1,1)
    CHECK_FALSE(out.cone_side[1].in_level_set); // (-1,0) pairs to t=(-1,-1)
    CHECK(out.dual_side[0].in_level_set);
  }
}

TEST_CASE("verify_level_set_samples: both directions on a rational grid") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 30; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 3, 5, -3, 3);
    if (c.normals().empty()) continue;
    ReductionData r = build_reduction(c);
    std::vector<RationalVector> etas;
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int s = 0; s < 40; ++s) {
      RationalVector eta(c.rank());
      for (auto& x : eta) x = Rat(num(rng), den(rng));
      etas.push_back(std::move(eta));
    }
    std::vector<RationalVector> ts;
    for (const auto& eta : etas) {
      RationalVector t(r.num_normals);
      bool inside = true;
      for (std::size_t j = 0; j < r.num_normals; ++j) {
        t[j] = dot(eta, r.weight_map.column(j));
        if (t[j] < 0) inside = false;
      }
      if (inside) ts.push_back(std::move(t));
    }
    // corrupted dual samples must be reported outside the level set
    if (!ts.empty()) {
      RationalVector bad = ts.front();
      bad[0] -= 1000;
      ts.push_back(std::move(bad));
    }
    auto out = verify_level_set_samples(r, c, etas, ts);
    CHECK(out.all_pass);
    if (!out.dual_side.empty())
      CHECK_FALSE(out.dual_side.back().in_level_set);
  }
}

TEST_CASE("verify_level_set_samples: non-annihilating t is not realizable") {
  Cone c = cone_from_normals(3, {vec({-1, -1, 1}), vec({1, -1, 1}),
                                 vec({1, 1, 1}), vec({-1, 1, 1})});
  ReductionData r = build_reduction(c);
  REQUIRE(r.kernel_basis.size() == 1);
  // a nonnegative t that fails to annihilate the kernel
  RationalVector t = {Rat(1), Rat(0), Rat(0), Rat(0)};
  Rat pairing = dot(t, r.kernel_basis[0]);
  REQUIRE(pairing != 0);
  auto out = verify_level_set_samples(r, c, {}, {t});
  CHECK(out.all_pass);  // correctly reported outside the level set
  CHECK_FALSE(out.dual_side[0].in_level_set);
}

TEST_CASE("verify_level_set_samples: rank mismatch") {
  Cone c = cone_from_normals(2, {vec({1, 0}), vec({0, 1})});
  ReductionData r = build_reduction(c);
  CHECK_THROWS_AS(verify_level_set_samples(r, c, {rvec({Rat(1)})}, {}), Error);
  CHECK_THROWS_AS(verify_level_set_samples(r, c, {}, {rvec({Rat(1)})}), Error);
}

TEST_CASE("interior points pair strictly positively") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 40; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 3, 5, -3, 3);
    if (c.normals().empty() || c.rays().empty()) continue;
    // the sum of rays and lineality-free interior direction
    RationalVector interior(c.rank(), Rat(0));
    for (const auto& r : c.rays())
      for (std::size_t i = 0; i < c.rank(); ++i) interior[i] += Rat(r[i]);
    bool strict = true;
    for (const auto& v : c.normals())
      if (dot(interior, v) <= 0) strict = false;
    if (!strict) continue;  // lineality direction needed; skip
    ReductionData r = build_reduction(c);
    auto out = verify_level_set_samples(r, c, {interior}, {});
    CHECK(out.all_pass);
    for (std::size_t j = 0; j < r.num_normals; ++j)
      CHECK(dot(interior, r.weight_map.column(j)) > 0);
  }
}
