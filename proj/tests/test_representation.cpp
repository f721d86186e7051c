#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "linkgap/errors.hpp"
#include "linkgap/representation.hpp"

using namespace linkgap;

namespace {

Group cyclic3() { return Group::close(3, {Permutation{{1, 2, 0}}}); }

Group cyclic2() { return Group::close(2, {Permutation{{1, 0}}}); }

Eigen::MatrixXd rotation2(double angle) {
  Eigen::MatrixXd R(2, 2);
  R << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return R;
}

Eigen::MatrixXd swap2() {
  Eigen::MatrixXd M(2, 2);
  M << 0, 1, 1, 0;
  return M;
}

Group symmetric3() {
  return Group::close(3, {Permutation{{1, 2, 0}}, Permutation{{1, 0, 2}}});
}

}  // namespace

TEST_CASE("closure along the group") {
  SUBCASE("trivial group") {
    const Group G = Group::close(2, {});
    const Representation rep = Representation::trivial(G, 3);
    CHECK(rep.dim() == 3);
    CHECK(rep.matrix(0).isIdentity(0.0));
    CHECK(rep.uniform_bound() == doctest::Approx(1.0));
  }
  SUBCASE("cyclic rotation by 120 degrees") {
    const Group G = cyclic3();
    const Representation rep = Representation::close(G, {rotation2(2.0 * M_PI / 3.0)});
    CHECK(rep.group().size() == 3);
    CHECK(rep.is_orthogonal());
    CHECK(rep.uniform_bound() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(homomorphism_residual(rep) < 1e-10);
  }
  SUBCASE("inconsistent relations are rejected") {
    const Group G = cyclic3();
    // A 90-degree rotation has order 4, not 3.
    CHECK_THROWS_AS(Representation::close(G, {rotation2(M_PI / 2.0)}), Error);
  }
  SUBCASE("singular generators are rejected") {
    const Group G = cyclic2();
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(2, 2);
    CHECK_THROWS_AS(Representation::close(G, {Z}), Error);
  }
  SUBCASE("generator count must match") {
    const Group G = symmetric3();
    CHECK_THROWS_AS(Representation::close(G, {swap2()}), Error);
  }
}

TEST_CASE("uniform bound") {
  const Group S3 = symmetric3();
  SUBCASE("orthogonal representations have bound one") {
    const Representation perm = Representation::permutation(S3);
    CHECK(perm.is_orthogonal());
    CHECK(perm.uniform_bound() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("conjugated swap") {
    const Group G = cyclic2();
    const Representation swap_rep = Representation::close(G, {swap2()});
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2, 2);
    S(0, 0) = 2.0;
    S(1, 1) = 1.0;
    const Representation conj = swap_rep.conjugated(S);
    // S swap S^{-1} = [[0,2],[1/2,0]] has singular values {2, 1/2}.
    CHECK(conj.uniform_bound() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(conj.is_orthogonal());
  }
  SUBCASE("trivial one-dimensional representation") {
    const Group C3 = cyclic3();
    CHECK(Representation::trivial(C3, 1).uniform_bound() == doctest::Approx(1.0));
  }
}

TEST_CASE("conjugation bound against the condition number") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Group S3 = symmetric3();
  const Representation perm = Representation::permutation(S3);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd S(3, 3);
    for (int i = 0; i < 9; ++i) S(i / 3, i % 3) = gauss(rng);
    S += 4.0 * Eigen::MatrixXd::Identity(3, 3);  // keep it well-conditioned
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
    const double cond = svd.singularValues()(0) / svd.singularValues()(2);
    CHECK(perm.conjugated(S).uniform_bound() <= cond * (1.0 + 1e-10));
  }
  SUBCASE("identity similarity is a no-op") {
    const Representation same = perm.conjugated(Eigen::MatrixXd::Identity(3, 3));
    CHECK(same.uniform_bound() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diag(3,1,1) keeps the bound under 3") {
    Eigen::MatrixXd S = Eigen::MatrixXd::Identity(3, 3);
    S(0, 0) = 3.0;
    CHECK(perm.conjugated(S).uniform_bound() <= 3.0 * (1.0 + 1e-12));
  }
}

TEST_CASE("contragredient") {
  const Group S3 = symmetric3();
  SUBCASE("orthogonal representations are self-contragredient") {
    const Representation perm = Representation::permutation(S3);
    const Representation contra = perm.contragredient();
    for (int g = 0; g < perm.group().size(); ++g)
      CHECK((contra.matrix(g) - perm.matrix(g)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("pairing compatibility") {
    const Group G = cyclic2();
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2, 2);
    S(0, 0) = 2.0;
    S(1, 1) = 1.0;
    const Representation rep = Representation::close(G, {swap2()}).conjugated(S);
    const Representation contra = rep.contragredient();
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd x(2), y(2);
      for (int i = 0; i < 2; ++i) {
        x(i) = gauss(rng);
        y(i) = gauss(rng);
      }
      for (int g = 0; g < G.size(); ++g)
        CHECK((rep.matrix(g) * x).dot(contra.matrix(g) * y) ==
              doctest::Approx(x.dot(y)).epsilon(1e-10));
    }
  }
  SUBCASE("one-dimensional sign representation") {
    const Representation sgn = Representation::sign(S3);
    const Representation contra = sgn.contragredient();
    for (int g = 0; g < sgn.group().size(); ++g)
      CHECK(contra.matrix(g)(0, 0) == doctest::Approx(sgn.matrix(g)(0, 0)));
  }
}

TEST_CASE("orbit sup-norm") {
  const Group G = cyclic2();
  const Representation swap_rep = Representation::close(G, {swap2()});
  SUBCASE("orthogonal reps give the Euclidean norm") {
    Eigen::VectorXd x(2);
    x << 3.0, 4.0;
    CHECK(swap_rep.sup_norm(x) == doctest::Approx(5.0));
  }
  SUBCASE("conjugated swap on a basis vector") {
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2, 2);
    S(0, 0) = 2.0;
    S(1, 1) = 1.0;
    const Representation conj = swap_rep.conjugated(S);
    Eigen::VectorXd x(2);
    x << 1.0, 0.0;
    // Orbit values: |x| = 1 and |[[0,2],[1/2,0]] x| = 1/2.
    CHECK(conj.sup_norm(x) == doctest::Approx(1.0));
    Eigen::VectorXd y(2);
    y << 0.0, 1.0;
    CHECK(conj.sup_norm(y) == doctest::Approx(2.0));
  }
  SUBCASE("zero vector") {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(2);
    CHECK(swap_rep.sup_norm(z) == 0.0);
  }
  SUBCASE("dimension mismatch") {
    Eigen::VectorXd w(3);
    w.setZero();
    CHECK_THROWS_AS(swap_rep.sup_norm(w), Error);
  }
}

TEST_CASE("sup-norm sandwich and isometry") {
  const Group G = symmetric3();
  const Representation perm = Representation::permutation(G);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd S(3, 3);
  for (int i = 0; i < 9; ++i) S(i / 3, i % 3) = gauss(rng);
  S += 4.0 * Eigen::MatrixXd::Identity(3, 3);
  const Representation rep = perm.conjugated(S);
  const double C = rep.uniform_bound();

  for (int trial = 0; trial < 40; ++trial) {
    Eigen::VectorXd x(3);
    for (int i = 0; i < 3; ++i) x(i) = gauss(rng);
    const double e = rep.sup_norm(x);
    CHECK(x.norm() <= e * (1.0 + 1e-12));
    CHECK(e <= C * x.norm() * (1.0 + 1e-12));
    // The representation is isometric in its own sup-norm.
    for (int g = 0; g < G.size(); ++g)
      CHECK(rep.sup_norm(rep.matrix(g) * x) == doctest::Approx(e).epsilon(1e-10));
  }
}

TEST_CASE("homomorphism residual over random triples") {
  const Group G3 = cyclic3();
  const Representation rot = Representation::close(G3, {rotation2(2.0 * M_PI / 3.0)});
  CHECK(homomorphism_residual(rot, 100) < 1e-10);
  const Group S3 = symmetric3();
  const Representation perm = Representation::permutation(S3);
  CHECK(homomorphism_residual(perm, 100) < 1e-10);
}
