#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkgap/cochain.hpp"
#include "linkgap/spectral.hpp"

namespace linkgap {

/// A basis of the twisted alternating cochains of one degree, obtained by
/// projecting coefficient delta cochains and keeping a maximal independent
/// subset. Coordinates stack the representative values.
struct CochainBasis {
  int degree = 0;
  Side side = Side::primal;
  std::vector<TwistedCochain> vectors;
  Eigen::MatrixXd coords;  // one column per basis vector
  Eigen::MatrixXd gram;    // weighted pairing, positive definite

  int dim() const { return static_cast<int>(vectors.size()); }
};

CochainBasis build_basis(const CochainContext& ctx, int degree, Side side = Side::primal,
                         double rank_tol = 1e-8);

/// Expected dimension from the stabilizer side: sum over unordered orbits of
/// the rank of the sign-isotypic averaging projector. Independent check of
/// build_basis.
int expected_basis_dimension(const CochainContext& ctx, int degree, Side side = Side::primal,
                             double rank_tol = 1e-8);

/// Coordinates of the differential between two bases; the least-squares
/// residual is checked (d maps into the target space).
Eigen::MatrixXd matrix_d(const CochainContext& ctx, const CochainBasis& from,
                         const CochainBasis& to);

TwistedCochain combine(const CochainBasis& basis, const Eigen::VectorXd& coefficients);

struct RankInfo {
  int rank = 0;
  double sigma_max = 0.0;
  double smallest_kept = 0.0;   // 0 when rank == 0
  double largest_dropped = 0.0; // 0 when nothing was dropped
};

RankInfo svd_rank(const Eigen::MatrixXd& M, double rel_tol);

struct CohomologyReport {
  std::vector<int> dim_L;  // degrees 0, 1, 2
  int rank_d0 = 0;
  int rank_d1 = 0;
  int dim_ker_d1 = 0;
  int dim_h0 = 0;
  int dim_h1 = 0;
  int dim_h2 = 0;
  double chain_residual = 0.0;  // |d1 d0| in orthonormal coordinates
  double delta_lower_bound = 0.0;
  bool delta_bound_vacuous = false;  // ker d1 = 0, nothing to bound
  RankInfo rank_d0_info, rank_d1_info;
};

/// Ranks and cohomology dimensions over the weighted 2-norm structure. Needs
/// a 2-dimensional complex and p = 2.
CohomologyReport h1_dimension(const CochainContext& ctx, double rank_tol = 1e-8);

/// Random elements of ker d1 with unit-range coefficients; empty when the
/// kernel is trivial.
std::vector<TwistedCochain> kernel_d1_samples(const CochainContext& ctx, int count,
                                              std::uint64_t seed, double rank_tol = 1e-8);

struct PerLinkInequalityEntry {
  VertexId vertex = -1;
  double kappa2 = 0.0;
  double min_slack = 0.0;  // min over samples of lhs - rhs
  int samples = 0;
  int failures = 0;
};

struct PerLinkInequalityReport {
  bool all_hold = true;
  std::vector<PerLinkInequalityEntry> entries;
  std::string witness;  // first failing (vertex, sample) if any
};

/// The per-link lower bound for kernel cochains, evaluated in the orbit
/// sup-norm with the uniform bound C: for every vertex orbit representative,
///   kappa2^{-2} |Mf_tau|^2 + Q_tau(f_tau) >= (1/C^2)(kappa2^{-2} - C^2/2) |f_tau|^2.
PerLinkInequalityReport per_link_inequality_check(const CochainContext& ctx, int samples = 50,
                                                  std::uint64_t seed = 23,
                                                  double rank_tol = 1e-8);

struct TheoremVerdict {
  bool consistent = true;
  bool informative = false;  // criterion passed, so the vanishing is predicted
  std::string note;
};

/// criterion PASS must imply dim H1 = 0; a FAIL verdict predicts nothing.
TheoremVerdict theorem_crosscheck(const SpectralReport& spectral, const CohomologyReport& coh);

}  // namespace linkgap
