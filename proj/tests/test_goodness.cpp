#include "conetoric/goodness.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace conetoric;
using namespace conetoric::testing;

namespace {

std::vector<LatticeVector> orthant_normals(std::size_t n) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

void check_reports_agree(const GoodnessReport& a, const GoodnessReport& b) {
  CHECK(a.is_good == b.is_good);
  CHECK(a.checked_faces == b.checked_faces);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].face == b.failures[i].face);
    CHECK(a.failures[i].obstruction == b.failures[i].obstruction);
  }
}

}  // namespace

TEST_CASE("orthants are good in every rank") {
  for (std::size_t n = 2; n <= 6; ++n) {
    Cone c = cone_from_normals(n, orthant_normals(n));
    GoodnessReport rep = is_good_facewise(c);
    CHECK(rep.is_good);
    CHECK(rep.failures.empty());
    CHECK(rep.checked_faces == (std::size_t(1) << n) - 2);
    CHECK(is_good_via_isotropy(c).is_good);
  }
}

TEST_CASE("the half-cylinder pair (1,0,0),(-1,0,2) is not good") {
  Cone c = cone_from_normals(3, {vec({1, 0, 0}), vec({-1, 0, 2})});
  GoodnessReport rep = is_good_facewise(c);
  CHECK_FALSE(rep.is_good);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].face.codim == 2);
  CHECK(rep.failures[0].obstruction == FiniteAbelianGroup::cyclic(2));

  GoodnessReport iso = is_good_via_isotropy(c);
  CHECK_FALSE(iso.is_good);
  REQUIRE(iso.failures.size() == 1);
  CHECK(iso.failures[0].obstruction == FiniteAbelianGroup::cyclic(2));
  check_reports_agree(rep, iso);
}

TEST_CASE("the cone over the square fails on all four edges with Z/2") {
  Cone c = cone_from_normals(3, {vec({-1, -1, 1}), vec({1, -1, 1}),
                                 vec({1, 1, 1}), vec({-1, 1, 1})});
  CHECK(c.rays() == std::vector<LatticeVector>{vec({-1, 0, 1}), vec({0, -1, 1}),
                                               vec({0, 1, 1}), vec({1, 0, 1})});
  GoodnessReport rep = is_good_facewise(c);
  CHECK_FALSE(rep.is_good);
  REQUIRE(rep.failures.size() == 4);
  for (const auto& f : rep.failures) {
    CHECK(f.face.codim == 2);
    CHECK(f.obstruction == FiniteAbelianGroup::cyclic(2));
  }
  check_reports_agree(rep, is_good_via_isotropy(c));
}

TEST_CASE("full-space cones are vacuously good") {
  for (std::size_t n = 2; n <= 4; ++n) {
    Cone c = cone_from_normals(n, {});
    CHECK(is_good_facewise(c).is_good);
    CHECK(is_good_via_isotropy(c).is_good);
  }
}

TEST_CASE("goodness requires nonempty interior") {
  Cone line = cone_from_normals(2, {vec({1, 0}), vec({-1, 0})});
  CHECK_THROWS_AS(is_good_facewise(line), Error);
  CHECK_THROWS_AS(is_good_via_isotropy(line), Error);
  try {
    is_good_facewise(line);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }
}

TEST_CASE("every rank-2 wedge with primitive normals is good") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 100) {
    LatticeVector a = random_vector(rng, 2, -5, 5, true);
    LatticeVector b = random_vector(rng, 2, -5, 5, true);
    Cone c = cone_from_normals(2, {a, b});
    if (!c.is_pointed() || !c.is_full_dimensional()) continue;
    CHECK(is_good_facewise(c).is_good);
    ++done;
  }
}

TEST_CASE("non-simplicial corners fail with the exceed reason") {
  // cone over the octahedron: each ray lies on four facets (codim 3)
  Cone c = cone_from_rays(
      4, {vec({1, 0, 0, 1}), vec({-1, 0, 0, 1}), vec({0, 1, 0, 1}),
          vec({0, -1, 0, 1}), vec({0, 0, 1, 1}), vec({0, 0, -1, 1})});
  CHECK(c.normals().size() == 8);
  GoodnessReport rep = is_good_facewise(c);
  CHECK_FALSE(rep.is_good);
  bool saw_exceed = false;
  for (const auto& f : rep.failures)
    if (f.reason == "active normals exceed codimension") {
      saw_exceed = true;
      CHECK(f.face.active_normal_indices.size() > f.face.codim);
      CHECK(f.obstruction.free_rank ==
            f.face.active_normal_indices.size() - f.face.codim);
    }
  CHECK(saw_exceed);
  check_reports_agree(rep, is_good_via_isotropy(c));
}

TEST_CASE("the two goodness oracles agree, including obstruction groups") {
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 300; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 4, 6, -3, 3);
    check_reports_agree(is_good_facewise(c), is_good_via_isotropy(c));
  }
}

TEST_CASE("goodness is invariant under unimodular change of basis") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 60; ++iter) {
    Cone c = random_full_dimensional_cone(rng, 4, 6, -3, 3);
    IntegerMatrix a = random_unimodular(rng, c.rank());
    Cone image = transformed(c, a);
    GoodnessReport r1 = is_good_facewise(c);
    GoodnessReport r2 = is_good_facewise(image);
    CHECK(r1.is_good == r2.is_good);
    CHECK(r1.checked_faces == r2.checked_faces);
    // obstruction multisets agree
    std::vector<std::string> g1, g2;
    for (const auto& f : r1.failures) g1.push_back(f.obstruction.to_string());
    for (const auto& f : r2.failures) g2.push_back(f.obstruction.to_string());
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    CHECK(g1 == g2);
  }
}
