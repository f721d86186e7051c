#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "linkgap/cochain.hpp"
#include "linkgap/complex.hpp"
#include "linkgap/group.hpp"
#include "linkgap/representation.hpp"

namespace linkgap {

/// A weighted graph arising as the link of a vertex in a 2-complex. Vertex
/// weights obey the coherence w(v) = sum of incident edge weights.
struct LinkGraph {
  std::vector<VertexId> verts;  // ambient vertex ids, ascending
  std::vector<double> vweight;
  std::vector<std::tuple<int, int, double>> edges;  // local indices + weight
  std::vector<std::vector<std::pair<int, double>>> adj;
  bool connected = false;

  static LinkGraph from_link(const LinkComplex& link);
  static LinkGraph from_edges(int vertex_count, std::vector<std::tuple<int, int, double>> edges);
  static LinkGraph cycle(int m, double edge_weight = 1.0);

  int size() const { return static_cast<int>(verts.size()); }
};

/// Symmetrized normalized Laplacian I - D^{-1/2} A D^{-1/2}; same spectrum as
/// I - D^{-1} A.
Eigen::MatrixXd link_laplacian(const LinkGraph& L);

/// Eigenvalues in ascending order, from a dense symmetric solve.
Eigen::VectorXd laplacian_spectrum(const LinkGraph& L);

/// Smallest eigenvalue above `zero_tol`; throws DisconnectedLink when the
/// near-zero eigenspace has multiplicity > 1 and EmptyLink on no vertices.
double lambda1(const LinkGraph& L, double zero_tol = 1e-8);

double kappa2(const LinkGraph& L, double zero_tol = 1e-8);

/// |f - Mf| / |df| in the plain weighted p-norms; rows of f are the vertex
/// values, `cnorm` the coefficient norm (Euclidean by default).
double poincare_ratio(const LinkGraph& L, const Eigen::MatrixXd& f, double p = 2.0,
                      const std::function<double(const Eigen::VectorXd&)>& cnorm = {});

/// Eigenvector of lambda1 pulled back through D^{1/2}; achieves the Poincare
/// constant for p = 2.
Eigen::VectorXd poincare_extremizer(const LinkGraph& L, double zero_tol = 1e-8);

/// Randomized hill-climb estimate of the optimal p-Poincare constant for
/// scalar coefficients on links of at most 6 vertices. For p = 2 this tracks
/// lambda1^{-1/2} closely because the eigenvector seeds the search.
double kappa_p_bruteforce(const LinkGraph& L, double p, int resolution = 200,
                          std::uint64_t seed = 17);

struct LinkSpectralEntry {
  VertexId vertex = -1;  // orbit representative
  long long orbit_size = 0;
  bool connected = false;
  double lambda1 = 0.0;
  double kappa2 = 0.0;
  double threshold = 0.0;  // sqrt(2) / kappa2
};

enum class CriterionVerdict { pass, fail, hypothesis_failed };

struct SpectralReport {
  std::vector<LinkSpectralEntry> links;  // one per vertex orbit
  double kappa2_max = 0.0;
  double uniform_bound = 1.0;
  double threshold = 0.0;  // sqrt(2) / kappa2_max
  CriterionVerdict verdict = CriterionVerdict::hypothesis_failed;
  bool boundary_case = false;
  std::vector<std::string> hypothesis_failures;
};

const char* to_string(CriterionVerdict v);

/// Per-orbit spectral gaps and the strict criterion
/// uniform_bound < sqrt(2) / kappa2_max. Links inside one orbit are verified
/// to produce the same gap. Hypothesis failures (wrong dimension,
/// disconnected links) yield a hypothesis_failed verdict instead of a throw.
SpectralReport evaluate_criterion(const SimplicialComplex& X, const Group& G,
                                  const Representation& rep, double zero_tol = 1e-8);

}  // namespace linkgap
