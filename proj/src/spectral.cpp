#include "linkgap/spectral.hpp"

#include <cmath>
#include <deque>
#include <random>

#include "linkgap/errors.hpp"

namespace linkgap {

namespace {

void finalize(LinkGraph& L) {
  L.adj.assign(L.size(), {});
  for (auto& [a, b, w] : L.edges) {
    L.adj[a].emplace_back(b, w);
    L.adj[b].emplace_back(a, w);
  }
  for (int v = 0; v < L.size(); ++v)
    if (L.vweight[v] <= 0.0) fail(Errc::isolated_vertex, "link vertex of weight zero");

  // BFS connectivity.
  L.connected = false;
  if (L.size() == 0) return;
  std::vector<bool> seen(L.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto& [u, w] : L.adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  L.connected = reached == L.size();
}

}  // namespace

LinkGraph LinkGraph::from_link(const LinkComplex& link) {
  const SimplicialComplex& C = link.complex();
  if (C.dimension() != 1) fail(Errc::dimension_mismatch, "link is not a graph");

  LinkGraph L;
  for (const Tuple& v : C.faces(0)) {
    L.verts.push_back(v[0]);
    L.vweight.push_back(static_cast<double>(C.weight(v)));
  }
  auto local = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(L.verts.begin(), L.verts.end(), v) - L.verts.begin());
  };
  for (const Tuple& e : C.faces(1))
    L.edges.emplace_back(local(e[0]), local(e[1]), static_cast<double>(C.weight(e)));
  finalize(L);
  return L;
}

LinkGraph LinkGraph::from_edges(int vertex_count,
                                std::vector<std::tuple<int, int, double>> edges) {
  LinkGraph L;
  for (int v = 0; v < vertex_count; ++v) {
    L.verts.push_back(v);
    L.vweight.push_back(0.0);
  }
  L.edges = std::move(edges);
  for (auto& [a, b, w] : L.edges) {
    L.vweight[a] += w;
    L.vweight[b] += w;
  }
  finalize(L);
  return L;
}

LinkGraph LinkGraph::cycle(int m, double edge_weight) {
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m, edge_weight);
  return from_edges(m, std::move(edges));
}

Eigen::MatrixXd link_laplacian(const LinkGraph& L) {
  if (L.size() == 0) fail(Errc::empty_link, "empty link");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(L.size(), L.size());
  for (const auto& [a, b, w] : L.edges) {
    A(a, b) += w;
    A(b, a) += w;
  }
  Eigen::VectorXd dinv_sqrt(L.size());
  for (int v = 0; v < L.size(); ++v) dinv_sqrt(v) = 1.0 / std::sqrt(L.vweight[v]);
  return Eigen::MatrixXd::Identity(L.size(), L.size()) -
         dinv_sqrt.asDiagonal() * A * dinv_sqrt.asDiagonal();
}

Eigen::VectorXd laplacian_spectrum(const LinkGraph& L) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(link_laplacian(L));
  return solver.eigenvalues();
}

double lambda1(const LinkGraph& L, double zero_tol) {
  const Eigen::VectorXd ev = laplacian_spectrum(L);
  int zeros = 0;
  while (zeros < ev.size() && ev(zeros) < zero_tol) ++zeros;
  if (zeros > 1) fail(Errc::disconnected_link, "zero eigenvalue of multiplicity > 1");
  if (zeros == ev.size()) fail(Errc::disconnected_link, "no positive eigenvalue");
  return ev(zeros);
}

double kappa2(const LinkGraph& L, double zero_tol) {
  return 1.0 / std::sqrt(lambda1(L, zero_tol));
}

double poincare_ratio(const LinkGraph& L, const Eigen::MatrixXd& f, double p,
                      const std::function<double(const Eigen::VectorXd&)>& cnorm) {
  auto nrm = cnorm ? cnorm : [](const Eigen::VectorXd& x) { return x.norm(); };

  double mass = 0.0;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(f.cols());
  for (int v = 0; v < L.size(); ++v) {
    mean += L.vweight[v] * f.row(v).transpose();
    mass += L.vweight[v];
  }
  mean /= mass;

  double num = 0.0;
  for (int v = 0; v < L.size(); ++v)
    num += L.vweight[v] * std::pow(nrm(f.row(v).transpose() - mean), p);
  double den = 0.0;
  for (const auto& [a, b, w] : L.edges)
    den += w * std::pow(nrm((f.row(a) - f.row(b)).transpose()), p);

  if (den <= 0.0) return 0.0;
  return std::pow(num, 1.0 / p) / std::pow(den, 1.0 / p);
}

Eigen::VectorXd poincare_extremizer(const LinkGraph& L, double zero_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(link_laplacian(L));
  const Eigen::VectorXd& ev = solver.eigenvalues();
  int idx = 0;
  while (idx < ev.size() && ev(idx) < zero_tol) ++idx;
  if (idx == 0 || idx >= ev.size()) fail(Errc::disconnected_link, "no spectral gap");
  Eigen::VectorXd f = solver.eigenvectors().col(idx);
  for (int v = 0; v < L.size(); ++v) f(v) /= std::sqrt(L.vweight[v]);
  return f;
}

double kappa_p_bruteforce(const LinkGraph& L, double p, int resolution, std::uint64_t seed) {
  if (L.size() > 6) fail(Errc::too_large, "brute-force search is limited to 6 vertices");
  if (L.size() == 0) fail(Errc::empty_link, "empty link");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto ratio = [&](const Eigen::VectorXd& f) {
    return poincare_ratio(L, f, p, {});
  };

  std::vector<Eigen::VectorXd> starts;
  starts.push_back(poincare_extremizer(L));
  for (int s = 0; s < 8; ++s) {
    Eigen::VectorXd f(L.size());
    for (int v = 0; v < L.size(); ++v) f(v) = gauss(rng);
    starts.push_back(f);
  }

  double best = 0.0;
  for (Eigen::VectorXd f : starts) {
    double cur = ratio(f);
    double step = 0.5;
    for (int it = 0; it < resolution; ++it) {
      bool improved = false;
      for (int v = 0; v < L.size(); ++v) {
        for (double dir : {+1.0, -1.0}) {
          Eigen::VectorXd probe = f;
          probe(v) += dir * step;
          const double r = ratio(probe);
          if (r > cur) {
            cur = r;
            f = probe;
            improved = true;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-9) break;
      }
    }
    best = std::max(best, cur);
  }
  return best;
}

const char* to_string(CriterionVerdict v) {
  switch (v) {
    case CriterionVerdict::pass: return "pass";
    case CriterionVerdict::fail: return "fail";
    case CriterionVerdict::hypothesis_failed: return "hypothesis_failed";
  }
  return "?";
}

SpectralReport evaluate_criterion(const SimplicialComplex& X, const Group& G,
                                  const Representation& rep, double zero_tol) {
  SpectralReport report;
  report.uniform_bound = rep.uniform_bound();

  if (X.dimension() != 2) {
    report.hypothesis_failures.push_back("complex is not 2-dimensional");
    report.verdict = CriterionVerdict::hypothesis_failed;
    return report;
  }

  OrbitData vertices(X, G, 0);
  std::vector<double> lambda_by_vertex(X.face_count(0), -1.0);
  bool all_connected = true;

  for (int o = 0; o < vertices.set_orbit_count(); ++o) {
    LinkSpectralEntry entry;
    const int rep_face = vertices.set_representative(o);
    entry.vertex = X.faces(0)[rep_face][0];
    entry.orbit_size = static_cast<long long>(vertices.set_orbit_members(o).size());

    for (int member : vertices.set_orbit_members(o)) {
      const LinkGraph L = LinkGraph::from_link(X.link(X.faces(0)[member]));
      if (!L.connected) {
        all_connected = false;
        entry.connected = false;
        continue;
      }
      entry.connected = true;
      const double lam = lambda1(L, zero_tol);
      lambda_by_vertex[member] = lam;
      if (member == rep_face) {
        entry.lambda1 = lam;
        entry.kappa2 = 1.0 / std::sqrt(lam);
        entry.threshold = std::sqrt(2.0) * std::sqrt(lam);
      }
    }

    if (entry.connected) {
      for (int member : vertices.set_orbit_members(o)) {
        if (std::abs(lambda_by_vertex[member] - entry.lambda1) > 1e-10)
          fail(Errc::invalid_action, "links within one orbit disagree on the spectral gap");
      }
    } else {
      report.hypothesis_failures.push_back("disconnected vertex link in orbit " +
                                           std::to_string(o));
    }
    report.links.push_back(entry);
  }

  if (!all_connected) {
    report.verdict = CriterionVerdict::hypothesis_failed;
    return report;
  }

  report.kappa2_max = 0.0;
  for (const LinkSpectralEntry& e : report.links)
    report.kappa2_max = std::max(report.kappa2_max, e.kappa2);
  report.threshold = std::sqrt(2.0) / report.kappa2_max;

  report.boundary_case = std::abs(report.uniform_bound - report.threshold) <= 1e-12;
  report.verdict = (!report.boundary_case && report.uniform_bound < report.threshold)
                       ? CriterionVerdict::pass
                       : CriterionVerdict::fail;
  return report;
}

}  // namespace linkgap
