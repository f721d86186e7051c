#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "linkgap/cochain.hpp"
#include "linkgap/errors.hpp"

using namespace linkgap;

namespace {

SimplicialComplex octahedron() {
  std::vector<Tuple> tops;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) tops.push_back({x, y, z});
  return SimplicialComplex::from_top_simplexes(tops, 2);
}

Group octahedron_rotations() {
  return Group::close(6, {Permutation{{2, 3, 1, 0, 4, 5}}, Permutation{{0, 1, 4, 5, 3, 2}}});
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_top_simplexes({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 2);
}

struct TrivialSetup {
  SimplicialComplex X;
  Group G;
  Representation rep;
  CochainContext ctx;

  explicit TrivialSetup(SimplicialComplex complex)
      : X(std::move(complex)),
        G(Group::close(static_cast<int>(X.vertices().size()), {})),
        rep(Representation::trivial(G, 1)),
        ctx(X, G, rep) {}
};

struct RotationSetup {
  SimplicialComplex X = octahedron();
  Group G = octahedron_rotations();
  Representation rot3;
  CochainContext ctx;

  explicit RotationSetup(double stretch = 1.0)
      : rot3(make_rep(G, stretch)), ctx(X, G, rot3) {}

  static Representation make_rep(const Group& G, double stretch) {
    Eigen::MatrixXd r4z(3, 3), r4x(3, 3);
    r4z << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    r4x << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    Representation rep = Representation::close(G, {r4z, r4x});
    if (stretch != 1.0) {
      Eigen::MatrixXd S = Eigen::MatrixXd::Identity(3, 3);
      S(0, 0) = stretch;
      rep = rep.conjugated(S);
    }
    return rep;
  }
};

}  // namespace

TEST_CASE("norm of the alternating unit cochain on the tetrahedron") {
  TrivialSetup t(tetrahedron_boundary());
  // f(u,v) = +1 ascending, -1 descending: 12 ordered edges, each weight 2.
  TwistedCochain f = TwistedCochain::zero(t.ctx, 1, Side::primal);
  const OrbitData& orbits = t.ctx.orbits(1);
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    const Tuple& e = orbits.representative(o);
    f.values()[o](0) = e[0] < e[1] ? 1.0 : -1.0;
  }
  CHECK(norm(f, t.ctx) * norm(f, t.ctx) == doctest::Approx(12.0).epsilon(1e-12));

  SUBCASE("zero cochain has zero norm") {
    CHECK(norm(TwistedCochain::zero(t.ctx, 1, Side::primal), t.ctx) == 0.0);
  }
  SUBCASE("identical under a randomized representative set") {
    const OrbitData alt = t.ctx.orbits(1).randomized(3);
    CHECK(norm_with_orbits(f, t.ctx, alt) == doctest::Approx(norm(f, t.ctx)).epsilon(1e-14));
  }
}

TEST_CASE("pairing") {
  RotationSetup r;
  std::mt19937_64 rng(2);
  SUBCASE("self-pairing is the squared 2-norm") {
    const TwistedCochain f = random_L_cochain(r.ctx, 1, Side::primal, rng);
    const double n2 = norm(f, r.ctx);
    CHECK(pairing(f, f, r.ctx) == doctest::Approx(n2 * n2).epsilon(1e-12));
  }
  SUBCASE("pairing with zero vanishes") {
    const TwistedCochain f = random_L_cochain(r.ctx, 1, Side::primal, rng);
    CHECK(pairing(TwistedCochain::zero(r.ctx, 1, Side::dual), f, r.ctx) == 0.0);
  }
  SUBCASE("independent summation oracle") {
    const TwistedCochain f = random_twisted_cochain(r.ctx, 1, Side::primal, rng);
    const TwistedCochain phi = random_twisted_cochain(r.ctx, 1, Side::dual, rng);
    const OrbitData& orbits = r.ctx.orbits(1);
    double expected = 0.0;
    for (int o = 0; o < orbits.orbit_count(); ++o) {
      const Tuple& rep = orbits.representative(o);
      expected += phi.values()[o].dot(f.values()[o]) * r.X.weight(rep) /
                  (2.0 * orbits.stabilizer(o).size());
    }
    CHECK(pairing(phi, f, r.ctx) == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("degree mismatch throws") {
    const TwistedCochain f = random_L_cochain(r.ctx, 1, Side::primal, rng);
    const TwistedCochain g = random_L_cochain(r.ctx, 2, Side::dual, rng);
    CHECK_THROWS_AS(pairing(g, f, r.ctx), Error);
  }
}

TEST_CASE("alternation on raw cochains") {
  TrivialSetup t(tetrahedron_boundary());
  SUBCASE("a symmetric cochain alternates to zero") {
    DenseCochain f(1, Side::primal, 1);
    t.X.for_each_ordered(1, [&](const Tuple& e) {
      Eigen::VectorXd v(1);
      v << static_cast<double>(10 * std::min(e[0], e[1]) + std::max(e[0], e[1]));
      f.set(e, v);
    });
    const DenseCochain alt_f = alternation(f);
    t.X.for_each_ordered(1, [&](const Tuple& e) { CHECK(alt_f.at(e).norm() < 1e-14); });
  }
  SUBCASE("a single ordered edge splits into a signed half-pair") {
    DenseCochain f(1, Side::primal, 1);
    Eigen::VectorXd v(1);
    v << 1.0;
    f.set({0, 1}, v);
    const DenseCochain alt_f = alternation(f);
    CHECK(alt_f.at({0, 1})(0) == doctest::Approx(0.5));
    CHECK(alt_f.at({1, 0})(0) == doctest::Approx(-0.5));
    CHECK(alt_f.at({0, 2}).norm() == 0.0);
  }
}

TEST_CASE("twisted projection") {
  SUBCASE("trivial group leaves representative values unchanged") {
    TrivialSetup t(octahedron());
    std::mt19937_64 rng(4);
    const DenseCochain f = random_dense_cochain(t.ctx, 1, Side::primal, rng);
    const TwistedCochain pf = project_twisted(f, t.ctx);
    const OrbitData& orbits = t.ctx.orbits(1);
    for (int o = 0; o < orbits.orbit_count(); ++o)
      CHECK((pf.values()[o] - f.at(orbits.representative(o))).norm() < 1e-14);
  }
  SUBCASE("projection output is twisted under the rotation group") {
    RotationSetup r(1.3);
    std::mt19937_64 rng(9);
    const DenseCochain f = random_dense_cochain(r.ctx, 1, Side::primal, rng);
    const TwistedCochain pf = project_twisted(f, r.ctx);
    // Direct sweep: f(g.sigma) = pi_g f(sigma) over every g and representative.
    const OrbitData& orbits = r.ctx.orbits(1);
    for (int g = 0; g < r.G.size(); ++g)
      for (int o = 0; o < orbits.orbit_count(); ++o) {
        const Tuple& sigma = orbits.representative(o);
        CHECK((pf.at(r.G.act(g, sigma), r.ctx) - r.ctx.action(g, Side::primal) * pf.values()[o])
                  .norm() < 1e-10);
      }
    CHECK(extension_coherence_residual(pf, r.ctx) < 1e-12);
  }
}

TEST_CASE("projection onto twisted alternating cochains") {
  RotationSetup r(1.2);
  std::mt19937_64 rng(13);
  SUBCASE("fixes members") {
    const TwistedCochain f = random_L_cochain(r.ctx, 1, Side::primal, rng);
    CHECK((coordinates(project_L(f, r.ctx)) - coordinates(f)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("kills symmetric twisted cochains") {
    // Symmetrize a twisted cochain pointwise; its projection must vanish.
    const TwistedCochain f = random_twisted_cochain(r.ctx, 1, Side::primal, rng);
    TwistedCochain sym = TwistedCochain::zero(r.ctx, 1, Side::primal);
    const OrbitData& orbits = r.ctx.orbits(1);
    for (int o = 0; o < orbits.orbit_count(); ++o) {
      const Tuple& e = orbits.representative(o);
      sym.values()[o] = 0.5 * (f.at(e, r.ctx) + f.at({e[1], e[0]}, r.ctx));
    }
    if (extension_coherence_residual(sym, r.ctx) < 1e-12)
      CHECK(coordinates(project_L(sym, r.ctx)).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("delta cochains project into the space") {
    const OrbitData& orbits = r.ctx.orbits(1);
    const DenseCochain d = delta_cochain(r.ctx, orbits.representative(0), 1, Side::primal);
    const TwistedCochain pl = project_L(d, r.ctx);
    CHECK(extension_coherence_residual(pl, r.ctx) < 1e-12);
    CHECK((coordinates(alternation(pl, r.ctx)) - coordinates(pl)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("extension coherence flags stabilizer-incompatible values") {
  RotationSetup r;
  TwistedCochain f = TwistedCochain::zero(r.ctx, 0, Side::primal);
  // Vertex stabilizers are nontrivial rotations; a generic vector is not fixed.
  f.values()[0] << 1.0, 2.0, 3.0;
  CHECK(extension_coherence_residual(f, r.ctx) > 1e-3);
}

TEST_CASE("differential") {
  SUBCASE("invariant constant vertex cochain is closed") {
    RotationSetup r;
    TwistedCochain f = TwistedCochain::zero(r.ctx, 0, Side::primal);
    // Only the zero vector is fixed by every rotation; use the trivial rep
    // for a nonzero constant instead.
    TrivialSetup t(octahedron());
    TwistedCochain g = TwistedCochain::zero(t.ctx, 0, Side::primal);
    for (auto& v : g.values()) v << 1.0;
    CHECK(coordinates(differential(g, t.ctx)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(coordinates(differential(f, r.ctx)).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("delta at a vertex hits exactly the incident edges") {
    TrivialSetup t(tetrahedron_boundary());
    TwistedCochain f = TwistedCochain::zero(t.ctx, 0, Side::primal);
    const OrbitData& verts = t.ctx.orbits(0);
    for (int o = 0; o < verts.orbit_count(); ++o)
      if (verts.representative(o) == Tuple{0}) f.values()[o] << 1.0;
    const TwistedCochain df = differential(f, t.ctx);
    t.X.for_each_ordered(1, [&](const Tuple& e) {
      const double expect = (e[1] == 0 ? 1.0 : 0.0) - (e[0] == 0 ? 1.0 : 0.0);
      CHECK(df.at(e, t.ctx)(0) == doctest::Approx(expect));
    });
  }
  SUBCASE("chain identity on random cochains") {
    RotationSetup r(1.2);
    std::mt19937_64 rng(21);
    const TwistedCochain f = random_L_cochain(r.ctx, 0, Side::primal, rng);
    CHECK(coordinates(differential(differential(f, r.ctx), r.ctx)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("degree overflow") {
    RotationSetup r;
    std::mt19937_64 rng(22);
    const TwistedCochain f = random_L_cochain(r.ctx, 2, Side::primal, rng);
    CHECK_THROWS_AS(differential(f, r.ctx), Error);
  }
}

TEST_CASE("codifferential") {
  SUBCASE("zero maps to zero and degree underflows throw") {
    RotationSetup r;
    const TwistedCochain z = TwistedCochain::zero(r.ctx, 1, Side::dual);
    CHECK(coordinates(codifferential(z, r.ctx)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(codifferential(codifferential(z, r.ctx), r.ctx), Error);
  }
  SUBCASE("constant one-cochain against the cone formula") {
    TrivialSetup t(tetrahedron_boundary());
    TwistedCochain phi = TwistedCochain::zero(t.ctx, 1, Side::dual);
    for (auto& v : phi.values()) v << 1.0;  // not alternating; formula is pointwise
    const TwistedCochain d_phi = codifferential(phi, t.ctx);
    const OrbitData& verts = t.ctx.orbits(0);
    for (int o = 0; o < verts.orbit_count(); ++o) {
      const Tuple& tau = verts.representative(o);
      double expect = 0.0;
      for (VertexId v : t.X.link_vertices(tau))
        expect += static_cast<double>(t.X.weight(join({v}, tau))) / t.X.weight(tau);
      CHECK(d_phi.values()[o](0) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  SUBCASE("adjointness against the differential") {
    RotationSetup r(1.15);
    std::mt19937_64 rng(31);
    for (int k : {1, 2}) {
      const TwistedCochain phi = random_L_cochain(r.ctx, k, Side::dual, rng);
      const TwistedCochain psi = random_L_cochain(r.ctx, k - 1, Side::primal, rng);
      CHECK(pairing(phi, differential(psi, r.ctx), r.ctx) ==
            doctest::Approx(pairing(codifferential(phi, r.ctx), psi, r.ctx)).epsilon(1e-10));
    }
  }
}

TEST_CASE("localization") {
  RotationSetup r(1.1);
  std::mt19937_64 rng(41);
  const TwistedCochain f = random_L_cochain(r.ctx, 1, Side::primal, rng);
  const Tuple tau = r.ctx.orbits(0).representative(0);
  const CochainContext link_ctx = make_link_context(r.ctx, tau);

  SUBCASE("values are the joins") {
    const TwistedCochain floc = localize(f, tau, r.ctx, link_ctx);
    const OrbitData& lorbits = link_ctx.orbits(0);
    for (int o = 0; o < lorbits.orbit_count(); ++o) {
      const Tuple& v = lorbits.representative(o);
      CHECK((floc.values()[o] - f.at(join(tau, v), r.ctx)).norm() < 1e-13);
    }
  }
  SUBCASE("localization is twisted under the stabilizer") {
    const TwistedCochain floc = localize(f, tau, r.ctx, link_ctx);
    const Group& S = link_ctx.group();
    const OrbitData& lorbits = link_ctx.orbits(0);
    for (int g = 0; g < S.size(); ++g)
      for (int o = 0; o < lorbits.orbit_count(); ++o) {
        const Tuple& sigma = lorbits.representative(o);
        CHECK((floc.at(S.act(g, sigma), link_ctx) -
               link_ctx.action(g, Side::primal) * floc.values()[o])
                  .norm() < 1e-11);
      }
  }
  SUBCASE("zero localizes to zero") {
    const TwistedCochain z = TwistedCochain::zero(r.ctx, 1, Side::primal);
    CHECK(coordinates(localize(z, tau, r.ctx, link_ctx)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("degree underflow") {
    const TwistedCochain v = random_L_cochain(r.ctx, 0, Side::primal, rng);
    CHECK_THROWS_AS(localize(v, tau, r.ctx, link_ctx), Error);
  }
}

TEST_CASE("localization and restriction norm sums on the octahedron") {
  TrivialSetup t(octahedron());
  std::mt19937_64 rng(51);
  const TwistedCochain f = random_L_cochain(t.ctx, 1, Side::primal, rng);
  const double f2 = std::pow(norm(f, t.ctx), 2);

  double loc_sum = 0.0, restr_sum = 0.0;
  const OrbitData& verts = t.ctx.orbits(0);
  for (int o = 0; o < verts.orbit_count(); ++o) {
    const Tuple tau = verts.representative(o);
    const CochainContext link_ctx = make_link_context(t.ctx, tau);
    loc_sum += std::pow(norm(localize(f, tau, t.ctx, link_ctx), link_ctx), 2);
    restr_sum += std::pow(norm(restrict_to_link(f, tau, t.ctx, link_ctx), link_ctx), 2);
  }
  CHECK(loc_sum == doctest::Approx(2.0 * f2).epsilon(1e-11));     // (k+1)! |f|^2
  CHECK(restr_sum == doctest::Approx(1.0 * f2).epsilon(1e-11));   // (n-k) |f|^2
  CHECK(restr_sum == doctest::Approx(0.5 * loc_sum).epsilon(1e-11));
}

TEST_CASE("weighted average on links") {
  TrivialSetup t(octahedron());
  const Tuple tau{0};
  const CochainContext link_ctx = make_link_context(t.ctx, tau);

  SUBCASE("constants are fixed") {
    TwistedCochain c = TwistedCochain::zero(link_ctx, 0, Side::primal);
    for (auto& v : c.values()) v << 2.5;
    const TwistedCochain mc = average(c, link_ctx);
    for (const auto& v : mc.values()) CHECK(v(0) == doctest::Approx(2.5));
  }
  SUBCASE("alternating pattern with equal weights averages to zero") {
    // The link of a vertex is a 4-cycle with constant vertex weights.
    TwistedCochain f = TwistedCochain::zero(link_ctx, 0, Side::primal);
    REQUIRE(f.values().size() == 4);
    f.values()[0] << 1.0;
    f.values()[1] << 0.0;
    f.values()[2] << -1.0;
    f.values()[3] << 0.0;
    CHECK(coordinates(average(f, link_ctx)).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("idempotence") {
    std::mt19937_64 rng(61);
    const TwistedCochain f = random_twisted_cochain(link_ctx, 0, Side::primal, rng);
    const TwistedCochain mf = average(f, link_ctx);
    CHECK((coordinates(average(mf, link_ctx)) - coordinates(mf)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("link form values") {
  TrivialSetup t(octahedron());
  const Tuple tau{0};
  const CochainContext link_ctx = make_link_context(t.ctx, tau);

  SUBCASE("zero gives zero") {
    CHECK(q_form(TwistedCochain::zero(link_ctx, 0, Side::primal), link_ctx, 2) == 0.0);
  }
  SUBCASE("constants see only the mass term") {
    TwistedCochain c = TwistedCochain::zero(link_ctx, 0, Side::primal);
    for (auto& v : c.values()) v << 3.0;
    // Link of an octahedron vertex: 4 vertices of localized weight 2.
    // q = 0 - (1/2) * 9 * 8 = -36.
    CHECK(q_form(c, link_ctx, 2) == doctest::Approx(-36.0).epsilon(1e-12));
  }
}

TEST_CASE("holder bound for the pairing") {
  RotationSetup r(1.25);
  std::mt19937_64 rng(71);
  for (double p : {1.5, 2.0, 3.0}) {
    const CochainContext ctx = r.ctx.with_p(p);
    const double pstar = ctx.pstar();
    for (int k = 0; k <= 2; ++k) {
      const TwistedCochain f = random_L_cochain(ctx, k, Side::primal, rng);
      const TwistedCochain phi = random_L_cochain(ctx, k, Side::dual, rng);
      CHECK(std::abs(pairing(phi, f, ctx)) <=
            norm(phi, ctx.with_p(pstar)) * norm(f, ctx) * (1.0 + 1e-12));
    }
  }
}
