#include "linkgap/complex.hpp"

#include <set>

#include "linkgap/errors.hpp"

namespace linkgap {

SimplicialComplex SimplicialComplex::from_top_simplexes(const std::vector<Tuple>& tops,
                                                        int min_top_size) {
  if (tops.empty()) fail(Errc::mixed_dimension, "no top simplexes given");

  const std::size_t top_size = tops.front().size();
  if (static_cast<int>(top_size) < min_top_size)
    fail(Errc::mixed_dimension, "top simplexes must have at least " +
                                    std::to_string(min_top_size) + " vertices");

  std::set<Tuple> unique_tops;
  for (const Tuple& t : tops) {
    if (t.size() != top_size) fail(Errc::mixed_dimension, "top simplexes of differing size");
    if (has_duplicates(t)) fail(Errc::duplicate_vertex_in_simplex, "repeated vertex in simplex");
    unique_tops.insert(sorted(t));
  }

  SimplicialComplex X;
  X.dim_ = static_cast<int>(top_size) - 1;
  X.faces_.resize(X.dim_ + 1);
  X.face_index_.resize(X.dim_ + 1);
  X.weights_.resize(X.dim_ + 1);

  std::set<VertexId> verts;
  for (const Tuple& t : unique_tops)
    for (VertexId v : t) verts.insert(v);
  X.vertices_.assign(verts.begin(), verts.end());

  // Downward closure with weights tallied per enclosing top simplex.
  int top_idx = 0;
  for (const Tuple& top : unique_tops) {
    const int m = static_cast<int>(top.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Tuple sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(top[i]);
      const int k = degree(sub);
      auto [it, fresh] = X.face_index_[k].try_emplace(sub, X.face_count(k));
      if (fresh) {
        X.faces_[k].push_back(sub);
        X.weights_[k].push_back(0);
      }
      ++X.weights_[k][it->second];
    }
    for (VertexId v : top) X.tops_by_vertex_[v].push_back(top_idx);
    ++top_idx;
  }

  // Deterministic face order: sort each dimension, rebuild indices.
  for (int k = 0; k <= X.dim_; ++k) {
    std::vector<int> order(X.face_count(k));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return X.faces_[k][a] < X.faces_[k][b]; });
    std::vector<Tuple> faces;
    std::vector<long long> weights;
    faces.reserve(order.size());
    weights.reserve(order.size());
    for (int i : order) {
      faces.push_back(X.faces_[k][i]);
      weights.push_back(X.weights_[k][i]);
    }
    X.faces_[k] = std::move(faces);
    X.weights_[k] = std::move(weights);
    X.face_index_[k].clear();
    for (int i = 0; i < X.face_count(k); ++i) X.face_index_[k].emplace(X.faces_[k][i], i);
  }
  return X;
}

const std::vector<Tuple>& SimplicialComplex::faces(int k) const {
  if (k < 0 || k > dim_)
    fail(Errc::index_out_of_range, "degree " + std::to_string(k) + " out of range");
  return faces_[k];
}

int SimplicialComplex::face_index(const Tuple& t) const {
  const int k = degree(t);
  if (k < 0 || k > dim_) return -1;
  const Tuple s = sorted(t);
  auto it = face_index_[k].find(s);
  return it == face_index_[k].end() ? -1 : it->second;
}

long long SimplicialComplex::weight(const Tuple& t) const {
  const int idx = face_index(t);
  if (idx < 0) fail(Errc::not_a_simplex, "weight of a non-simplex");
  return weights_[degree(t)][idx];
}

std::vector<VertexId> SimplicialComplex::link_vertices(const Tuple& tau) const {
  if (!contains(tau)) fail(Errc::not_a_simplex, "link of a non-simplex");
  const Tuple ts = sorted(tau);
  std::set<VertexId> out;
  for (int ti : tops_by_vertex_.at(ts.front())) {
    const Tuple& top = faces_[dim_][ti];
    if (!std::includes(top.begin(), top.end(), ts.begin(), ts.end())) continue;
    for (VertexId v : top)
      if (!std::binary_search(ts.begin(), ts.end(), v)) out.insert(v);
  }
  std::vector<VertexId> verts(out.begin(), out.end());
  // A candidate v is a link vertex iff tau + {v} is a simplex; by closure the
  // union sits inside the top simplex found above, so all candidates qualify.
  return verts;
}

std::vector<int> SimplicialComplex::coface_indices(const Tuple& tau) const {
  const int k = degree(tau);
  if (k + 1 > dim_) return {};
  const Tuple ts = sorted(tau);
  std::vector<int> out;
  for (VertexId v : link_vertices(tau)) {
    Tuple up = ts;
    up.insert(std::lower_bound(up.begin(), up.end(), v), v);
    out.push_back(face_index_[k + 1].at(up));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinkComplex SimplicialComplex::link(const Tuple& tau) const {
  const int l = degree(tau);
  if (!contains(tau)) fail(Errc::not_a_simplex, "link of a non-simplex");
  if (l >= dim_) fail(Errc::index_out_of_range, "link needs a simplex of degree < n");

  const Tuple ts = sorted(tau);
  std::vector<Tuple> link_tops;
  for (int ti : tops_by_vertex_.at(ts.front())) {
    const Tuple& top = faces_[dim_][ti];
    if (!std::includes(top.begin(), top.end(), ts.begin(), ts.end())) continue;
    Tuple rest;
    for (VertexId v : top)
      if (!std::binary_search(ts.begin(), ts.end(), v)) rest.push_back(v);
    link_tops.push_back(rest);
  }
  if (link_tops.empty()) fail(Errc::link_empty, "simplex contained in no top simplex");

  // The count of ambient top simplexes containing tau * sigma equals the count
  // of link tops containing sigma, so intrinsic link weights are the localized
  // weights w_tau.
  return LinkComplex(tau, from_top_simplexes(link_tops, 1));
}

Tuple SimplicialComplex::join_checked(const Tuple& base, const Tuple& link_part) const {
  Tuple j = join(base, link_part);
  if (!contains(j)) fail(Errc::join_not_a_simplex, "join does not lie in the complex");
  return j;
}

bool SimplicialComplex::check_weight_identity(int k) const {
  if (k < 0 || k >= dim_) fail(Errc::index_out_of_range, "identity needs 0 <= k < n");
  const long long orderings = factorial(k + 2);  // orderings of each coface
  for (int i = 0; i < face_count(k); ++i) {
    const Tuple& tau = faces_[k][i];
    long long lhs = 0;
    for (int ci : coface_indices(tau)) lhs += weights_[k + 1][ci];
    lhs *= orderings;
    const long long rhs = (dim_ - k) * orderings * weights_[k][i];
    if (lhs != rhs) return false;
  }
  return true;
}

void SimplicialComplex::for_each_ordered(int k, const std::function<void(const Tuple&)>& fn) const {
  for (const Tuple& s : faces(k))
    for_each_pattern(k + 1, [&](const std::vector<int>& pattern) { fn(apply_pattern(s, pattern)); });
}

void SimplicialComplex::override_weight(const Tuple& t, long long w) {
  const int idx = face_index(t);
  if (idx < 0) fail(Errc::not_a_simplex, "weight override of a non-simplex");
  if (w < 1) fail(Errc::schema_error, "weights must be positive");
  weights_[degree(t)][idx] = w;
}

}  // namespace linkgap
