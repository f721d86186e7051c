#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "linkgap/errors.hpp"
#include "linkgap/group.hpp"

using namespace linkgap;

namespace {

SimplicialComplex octahedron() {
  std::vector<Tuple> tops;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) tops.push_back({x, y, z});
  return SimplicialComplex::from_top_simplexes(tops, 2);
}

// Vertex convention: 0=px, 1=nx, 2=py, 3=ny, 4=pz, 5=nz.
Group octahedron_rotations() {
  Permutation r4z{{2, 3, 1, 0, 4, 5}};
  Permutation r4x{{0, 1, 4, 5, 3, 2}};
  return Group::close(6, {r4z, r4x});
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_top_simplexes({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 2);
}

Group alternating4() {
  Permutation abc{{1, 2, 0, 3}};
  Permutation ab_cd{{1, 0, 3, 2}};
  return Group::close(4, {abc, ab_cd});
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(Group::close(3, {}).size() == 1);

  Permutation cycle3{{1, 2, 0}};
  CHECK(Group::close(3, {cycle3}).size() == 3);

  CHECK(octahedron_rotations().size() == 24);
  CHECK(alternating4().size() == 12);

  Permutation bad{{0, 0, 1}};
  CHECK_THROWS_AS(Group::close(3, {bad}), Error);
  CHECK_THROWS_AS(Group::close(3, {cycle3}, 2), Error);  // CapExceeded
}

TEST_CASE("composition, inverse, parity") {
  const Group G = octahedron_rotations();
  for (int g = 0; g < G.size(); ++g) {
    const int inv = G.inverse_id(g);
    CHECK(G.compose_ids(g, inv) == 0);
    CHECK(G.compose_ids(inv, g) == 0);
  }
  CHECK(G.parity(0) == 1);
  // A 4-cycle on vertices is odd.
  Permutation r4z{{2, 3, 1, 0, 4, 5}};
  CHECK(G.parity(G.index_of(r4z)) == -1);
}

TEST_CASE("action verification") {
  const SimplicialComplex X = tetrahedron_boundary();
  SUBCASE("full symmetry is valid") {
    Permutation any{{1, 0, 2, 3}};
    const Group G = Group::close(4, {any});
    CHECK(verify_action(X, G).valid);
  }
  SUBCASE("triangle transposition is valid") {
    const SimplicialComplex T = SimplicialComplex::from_top_simplexes({{0, 1, 2}}, 2);
    const Group G = Group::close(3, {Permutation{{1, 0, 2}}});
    CHECK(verify_action(T, G).valid);
  }
  SUBCASE("mixing two disjoint triangles incoherently is flagged") {
    const SimplicialComplex D = SimplicialComplex::from_top_simplexes({{0, 1, 2}, {3, 4, 5}}, 2);
    const Group G = Group::close(6, {Permutation{{3, 1, 2, 0, 4, 5}}});
    const ActionReport report = verify_action(D, G);
    CHECK_FALSE(report.valid);
    CHECK_FALSE(report.violations.empty());
  }
}

TEST_CASE("orbit data under the trivial group") {
  const SimplicialComplex X = tetrahedron_boundary();
  const Group G = Group::close(4, {});
  for (int k = 0; k <= 2; ++k) {
    const OrbitData orbits(X, G, k);
    CHECK(orbits.orbit_count() == X.face_count(k) * factorial(k + 1));
    for (int o = 0; o < orbits.orbit_count(); ++o) {
      CHECK(orbits.stabilizer(o).size() == 1);
      CHECK(orbits.orbit_size(o) == 1);
    }
  }
}

TEST_CASE("octahedron vertex orbits under the rotation group") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();
  CHECK(verify_action(X, G).valid);
  const OrbitData orbits(X, G, 0);
  CHECK(orbits.orbit_count() == 1);
  CHECK(orbits.set_orbit_count() == 1);
  CHECK(orbits.orbit_size(0) == 6);
  CHECK(orbits.stabilizer(0).size() == 4);  // 24 = 6 * 4
}

TEST_CASE("tetrahedron triangles under A4") {
  const SimplicialComplex X = tetrahedron_boundary();
  const Group G = alternating4();
  const OrbitData orbits(X, G, 2);
  CHECK(orbits.set_orbit_count() == 1);
  // Ordered stabilizer of a triangle is its cyclic rotation group.
  for (int o = 0; o < orbits.orbit_count(); ++o)
    CHECK(orbits.stabilizer(o).size() == 3);
}

TEST_CASE("orbit-stabilizer identity and conjugation of stabilizers") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  for (int k = 0; k <= 2; ++k) {
    const OrbitData orbits(X, G, k);
    for (int o = 0; o < orbits.orbit_count(); ++o)
      CHECK(orbits.orbit_size(o) * static_cast<long long>(orbits.stabilizer(o).size()) ==
            G.size());

    // Gamma_{g.sigma} = g Gamma_sigma g^{-1}.
    for (int trial = 0; trial < 4; ++trial) {
      const int o = std::uniform_int_distribution<int>(0, orbits.orbit_count() - 1)(rng);
      const int g = pick(rng);
      const Tuple moved = G.act(g, orbits.representative(o));
      std::set<int> conjugated;
      for (int s : orbits.stabilizer(o))
        conjugated.insert(G.compose_ids(G.compose_ids(g, s), G.inverse_id(g)));
      std::set<int> direct;
      for (int h = 0; h < G.size(); ++h)
        if (G.act(h, moved) == moved) direct.insert(h);
      CHECK(conjugated == direct);
    }
  }
}

TEST_CASE("representatives are canonical and deterministic") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();
  const OrbitData a(X, G, 1);
  const OrbitData b(X, G, 1);
  REQUIRE(a.orbit_count() == b.orbit_count());
  for (int o = 0; o < a.orbit_count(); ++o) {
    CHECK(a.representative(o) == b.representative(o));
    // Lexicographic minimum of the orbit.
    for (int g = 0; g < G.size(); ++g)
      CHECK(a.representative(o) <= G.act(g, a.representative(o)));
  }
  // Ascending listing.
  for (int o = 1; o < a.orbit_count(); ++o)
    CHECK(a.representative(o - 1) < a.representative(o));
}

TEST_CASE("locate returns a valid transporter") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();
  const OrbitData orbits(X, G, 1);
  X.for_each_ordered(1, [&](const Tuple& sigma) {
    const auto [o, g] = orbits.locate(sigma);
    CHECK(G.act(g, orbits.representative(o)) == sigma);
  });
  CHECK_THROWS_AS(orbits.locate(Tuple{0, 1}), Error);  // antipodal pair, not an edge
}

TEST_CASE("randomized representatives stay within their orbits") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();
  const OrbitData orbits(X, G, 1);
  const OrbitData alt = orbits.randomized(99);
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    const auto [same, g] = orbits.locate(alt.representative(o));
    CHECK(same == o);
    CHECK(alt.stabilizer(o).size() == orbits.stabilizer(o).size());
  }
}

TEST_CASE("setwise stabilizer carries reordering signs") {
  const SimplicialComplex T = SimplicialComplex::from_top_simplexes({{0, 1, 2}}, 2);
  const Group G = Group::close(3, {Permutation{{1, 0, 2}}});
  const OrbitData orbits(T, G, 2);
  REQUIRE(orbits.set_orbit_count() == 1);
  const auto& stab = orbits.setwise_stabilizer(0);
  REQUIRE(stab.size() == 2);
  int product = 1;
  for (const auto& [g, sign] : stab) product *= sign;
  CHECK(product == -1);  // the transposition induces an odd reordering
}

TEST_CASE("switching sums") {
  const SimplicialComplex X = octahedron();
  const Group G = octahedron_rotations();

  SUBCASE("constant pair function") {
    auto [lhs, rhs] = switching_sums(X, G, 0, 1, [](const Tuple&, const Tuple&) { return 1.0; });
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(check_switching_sums(X, G, 0, 1, [](const Tuple&, const Tuple&) { return 1.0; }));
  }
  SUBCASE("zero pair function") {
    auto [lhs, rhs] = switching_sums(X, G, 0, 2, [](const Tuple&, const Tuple&) { return 0.0; });
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);
  }
  SUBCASE("weight of the enclosing simplex on the tetrahedron") {
    const SimplicialComplex T = tetrahedron_boundary();
    const Group A4 = alternating4();
    auto f = [&T](const Tuple&, const Tuple& sigma) {
      return static_cast<double>(T.weight(sigma));
    };
    CHECK(check_switching_sums(T, A4, 0, 2, f));
  }
  SUBCASE("non-invariant functions are rejected") {
    auto f = [](const Tuple& tau, const Tuple&) { return static_cast<double>(tau[0]); };
    CHECK_THROWS_AS(check_switching_sums(X, G, 0, 1, f), Error);
  }
}

TEST_CASE("subgroup wrapping stays closed") {
  const Group G = octahedron_rotations();
  // Stabilizer of the x axis pointwise.
  std::vector<Permutation> stab;
  for (int g = 0; g < G.size(); ++g)
    if (G.act(g, 0) == 0 && G.act(g, 1) == 1) stab.push_back(G.element(g));
  const Group S = Group::from_elements(6, stab);
  CHECK(S.size() == 4);

  CHECK_THROWS_AS(Group::from_elements(6, {G.element(1)}), Error);
}
