#include "linkgap/cohomology.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "linkgap/errors.hpp"

namespace linkgap {

namespace {

Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& gram) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    fail(Errc::singular, "Gram matrix is not positive definite");
  return Eigen::MatrixXd(llt.matrixU());
}

}  // namespace

CochainBasis build_basis(const CochainContext& ctx, int degree, Side side, double rank_tol) {
  const OrbitData& orbits = ctx.orbits(degree);
  const int d = ctx.dim();

  std::vector<TwistedCochain> candidates;
  candidates.reserve(static_cast<std::size_t>(orbits.orbit_count()) * d);
  for (int o = 0; o < orbits.orbit_count(); ++o)
    for (int j = 0; j < d; ++j)
      candidates.push_back(
          project_L(delta_cochain(ctx, orbits.representative(o), j, side), ctx));

  const int rows = orbits.orbit_count() * d;
  Eigen::MatrixXd M(rows, static_cast<int>(candidates.size()));
  for (std::size_t c = 0; c < candidates.size(); ++c) M.col(static_cast<int>(c)) = coordinates(candidates[c]);

  CochainBasis basis;
  basis.degree = degree;
  basis.side = side;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(rank_tol);
  const int rank = static_cast<int>(qr.rank());
  const auto& perm = qr.colsPermutation().indices();

  std::vector<int> picked;
  for (int i = 0; i < rank; ++i) picked.push_back(perm(i));
  std::sort(picked.begin(), picked.end());

  basis.coords.resize(rows, rank);
  for (int i = 0; i < rank; ++i) {
    basis.vectors.push_back(candidates[picked[i]]);
    basis.coords.col(i) = M.col(picked[i]);
  }

  basis.gram.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      const double g = pairing(basis.vectors[i], basis.vectors[j], ctx);
      basis.gram(i, j) = g;
      basis.gram(j, i) = g;
    }

  if (rank > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(basis.gram);
    if (es.eigenvalues()(0) <= 1e-10 * es.eigenvalues()(rank - 1))
      fail(Errc::singular, "selected basis is numerically dependent");
  }
  return basis;
}

int expected_basis_dimension(const CochainContext& ctx, int degree, Side side, double rank_tol) {
  const OrbitData& orbits = ctx.orbits(degree);
  int total = 0;
  for (int o = 0; o < orbits.set_orbit_count(); ++o) {
    const auto& stab = orbits.setwise_stabilizer(o);
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(ctx.dim(), ctx.dim());
    for (const auto& [g, sign] : stab)
      proj += static_cast<double>(sign) * ctx.action(g, side);
    proj /= static_cast<double>(stab.size());
    total += svd_rank(proj, rank_tol).rank;
  }
  return total;
}

Eigen::MatrixXd matrix_d(const CochainContext& ctx, const CochainBasis& from,
                         const CochainBasis& to) {
  if (to.degree != from.degree + 1) fail(Errc::degree_mismatch, "bases of wrong degrees");
  Eigen::MatrixXd D(to.dim(), from.dim());
  D.setZero();
  if (from.dim() == 0) return D;
  if (to.dim() == 0) {
    for (const TwistedCochain& b : from.vectors)
      if (coordinates(differential(b, ctx)).norm() > 1e-8)
        fail(Errc::inconsistent_relations, "differential image left the target space");
    return D;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> solver(to.coords);
  for (int i = 0; i < from.dim(); ++i) {
    const Eigen::VectorXd image = coordinates(differential(from.vectors[i], ctx));
    const Eigen::VectorXd x = solver.solve(image);
    const double residual = (to.coords * x - image).norm();
    if (residual > 1e-8 * std::max(1.0, image.norm()))
      fail(Errc::inconsistent_relations, "differential image left the target space");
    D.col(i) = x;
  }
  return D;
}

TwistedCochain combine(const CochainBasis& basis, const Eigen::VectorXd& coefficients) {
  TwistedCochain out = basis.vectors.front();
  out *= coefficients(0);
  for (int i = 1; i < basis.dim(); ++i) {
    TwistedCochain term = basis.vectors[i];
    term *= coefficients(i);
    out += term;
  }
  return out;
}

RankInfo svd_rank(const Eigen::MatrixXd& M, double rel_tol) {
  RankInfo info;
  if (M.rows() == 0 || M.cols() == 0) return info;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const Eigen::VectorXd& sv = svd.singularValues();
  info.sigma_max = sv.size() ? sv(0) : 0.0;
  const double cut = rel_tol * info.sigma_max;
  for (int i = 0; i < sv.size(); ++i) {
    if (info.sigma_max > 0.0 && sv(i) > cut) {
      info.rank = i + 1;
      info.smallest_kept = sv(i);
    } else if (info.largest_dropped == 0.0) {
      info.largest_dropped = sv(i);
    }
  }
  return info;
}

namespace {

struct Pipeline {
  CochainBasis basis0, basis1, basis2;
  Eigen::MatrixXd d0_ortho, d1_ortho;  // in Gram-orthonormal coordinates
  Eigen::MatrixXd r0, r1, r2;          // Cholesky factors of the Grams
};

Pipeline build_pipeline(const CochainContext& ctx, double rank_tol) {
  if (ctx.top_dimension() != 2)
    fail(Errc::dimension_mismatch, "cohomology pipeline needs a 2-dimensional complex");
  Pipeline P;
  P.basis0 = build_basis(ctx, 0, Side::primal, rank_tol);
  P.basis1 = build_basis(ctx, 1, Side::primal, rank_tol);
  P.basis2 = build_basis(ctx, 2, Side::primal, rank_tol);

  const Eigen::MatrixXd D0 = matrix_d(ctx, P.basis0, P.basis1);
  const Eigen::MatrixXd D1 = matrix_d(ctx, P.basis1, P.basis2);

  P.r0 = P.basis0.dim() ? cholesky_factor(P.basis0.gram) : Eigen::MatrixXd(0, 0);
  P.r1 = P.basis1.dim() ? cholesky_factor(P.basis1.gram) : Eigen::MatrixXd(0, 0);
  P.r2 = P.basis2.dim() ? cholesky_factor(P.basis2.gram) : Eigen::MatrixXd(0, 0);

  auto orthonormalize = [](const Eigen::MatrixXd& D, const Eigen::MatrixXd& r_to,
                           const Eigen::MatrixXd& r_from) -> Eigen::MatrixXd {
    if (D.rows() == 0 || D.cols() == 0) return D;
    return r_to * D * r_from.inverse();
  };
  P.d0_ortho = orthonormalize(D0, P.r1, P.r0);
  P.d1_ortho = orthonormalize(D1, P.r2, P.r1);
  return P;
}

Eigen::MatrixXd kernel_basis_ortho(const Eigen::MatrixXd& M, int cols, double rank_tol) {
  // Orthonormal basis of ker M from the right singular vectors.
  if (M.rows() == 0 || cols == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const int rank = svd_rank(M, rank_tol).rank;
  return svd.matrixV().rightCols(cols - rank);
}

}  // namespace

CohomologyReport h1_dimension(const CochainContext& ctx, double rank_tol) {
  const Pipeline P = build_pipeline(ctx, rank_tol);
  CohomologyReport rep;
  rep.dim_L = {P.basis0.dim(), P.basis1.dim(), P.basis2.dim()};

  rep.rank_d0_info = svd_rank(P.d0_ortho, rank_tol);
  rep.rank_d1_info = svd_rank(P.d1_ortho, rank_tol);
  rep.rank_d0 = rep.rank_d0_info.rank;
  rep.rank_d1 = rep.rank_d1_info.rank;

  rep.dim_ker_d1 = P.basis1.dim() - rep.rank_d1;
  rep.dim_h0 = P.basis0.dim() - rep.rank_d0;
  rep.dim_h1 = rep.dim_ker_d1 - rep.rank_d0;
  rep.dim_h2 = P.basis2.dim() - rep.rank_d1;

  if (P.d0_ortho.cols() > 0 && P.d1_ortho.rows() > 0 && P.d1_ortho.cols() == P.d0_ortho.rows())
    rep.chain_residual = (P.d1_ortho * P.d0_ortho).cwiseAbs().maxCoeff();

  // Smallest singular value of the adjoint of d0 restricted to ker d1; zero
  // exactly when harmonic representatives survive, i.e. H1 != 0.
  const Eigen::MatrixXd N = kernel_basis_ortho(P.d1_ortho, P.basis1.dim(), rank_tol);
  if (N.cols() == 0) {
    rep.delta_bound_vacuous = true;
    rep.delta_lower_bound = std::numeric_limits<double>::infinity();
  } else if (P.basis0.dim() == 0) {
    rep.delta_lower_bound = 0.0;
  } else {
    const Eigen::MatrixXd restricted = P.d0_ortho.transpose() * N;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted);
    rep.delta_lower_bound = svd.singularValues()(svd.singularValues().size() - 1);
  }
  return rep;
}

std::vector<TwistedCochain> kernel_d1_samples(const CochainContext& ctx, int count,
                                              std::uint64_t seed, double rank_tol) {
  const Pipeline P = build_pipeline(ctx, rank_tol);
  std::vector<TwistedCochain> out;
  if (P.basis1.dim() == 0) return out;
  const Eigen::MatrixXd N = kernel_basis_ortho(P.d1_ortho, P.basis1.dim(), rank_tol);
  if (N.cols() == 0) return out;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const Eigen::MatrixXd r1_inv = P.r1.inverse();
  for (int s = 0; s < count; ++s) {
    Eigen::VectorXd c(N.cols());
    for (int i = 0; i < c.size(); ++i) c(i) = coef(rng);
    const Eigen::VectorXd x = r1_inv * (N * c);
    out.push_back(combine(P.basis1, x));
  }
  return out;
}

PerLinkInequalityReport per_link_inequality_check(const CochainContext& ctx, int samples,
                                                  std::uint64_t seed, double rank_tol) {
  PerLinkInequalityReport report;
  const CochainContext ectx = ctx.with_p(2.0).with_coeff(CoeffNorm::sup_orbit);
  const double C = ctx.rep(Side::primal).uniform_bound();

  const std::vector<TwistedCochain> kernel = kernel_d1_samples(ectx, samples, seed, rank_tol);

  const OrbitData& vertices = ectx.orbits(0);
  for (int o = 0; o < vertices.set_orbit_count(); ++o) {
    const Tuple tau = ectx.complex().faces(0)[vertices.set_representative(o)];
    PerLinkInequalityEntry entry;
    entry.vertex = tau[0];
    entry.kappa2 = kappa2(LinkGraph::from_link(ectx.complex().link(tau)));
    entry.samples = static_cast<int>(kernel.size());
    entry.min_slack = std::numeric_limits<double>::infinity();

    const CochainContext link_ctx = make_link_context(ectx, tau);
    const double k2inv = 1.0 / (entry.kappa2 * entry.kappa2);
    for (std::size_t s = 0; s < kernel.size(); ++s) {
      const TwistedCochain f_tau = localize(kernel[s], tau, ectx, link_ctx);
      const double nf = norm(f_tau, link_ctx);
      const double nm = norm(average(f_tau, link_ctx), link_ctx);
      const double lhs = k2inv * nm * nm + q_form(f_tau, link_ctx, ectx.top_dimension());
      const double rhs = (k2inv - C * C / 2.0) * nf * nf / (C * C);
      const double slack = lhs - rhs;
      entry.min_slack = std::min(entry.min_slack, slack);
      if (slack < -1e-9 * std::max(1.0, std::abs(lhs) + std::abs(rhs))) {
        ++entry.failures;
        report.all_hold = false;
        if (report.witness.empty())
          report.witness = "vertex " + std::to_string(entry.vertex) + ", sample " +
                           std::to_string(s);
      }
    }
    if (kernel.empty()) entry.min_slack = 0.0;
    report.entries.push_back(entry);
  }
  return report;
}

TheoremVerdict theorem_crosscheck(const SpectralReport& spectral, const CohomologyReport& coh) {
  TheoremVerdict verdict;
  if (spectral.verdict == CriterionVerdict::pass) {
    verdict.informative = true;
    verdict.consistent = coh.dim_h1 == 0;
    verdict.note = verdict.consistent
                       ? "criterion passed and H1 vanishes"
                       : "criterion passed but H1 is nonzero";
  } else {
    verdict.informative = false;
    verdict.consistent = true;
    verdict.note = spectral.verdict == CriterionVerdict::fail
                       ? "criterion failed; no prediction about H1"
                       : "hypotheses not met; no prediction about H1";
  }
  return verdict;
}

}  // namespace linkgap
