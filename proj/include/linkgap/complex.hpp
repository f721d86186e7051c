#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkgap/simplex.hpp"

namespace linkgap {

class LinkComplex;

/// A finite pure n-dimensional weighted simplicial complex. The weight of a
/// simplex is the number of top-dimensional simplexes containing it, so every
/// weight is >= 1 by construction (downward closure from the top simplexes).
class SimplicialComplex {
 public:
  /// Builds the downward closure of a set of equal-size vertex sets.
  /// Duplicate top simplexes are collapsed. `min_top_size` is 2 for user
  /// input; links of codimension-1 simplexes need vertex-only tops.
  static SimplicialComplex from_top_simplexes(const std::vector<Tuple>& tops,
                                              int min_top_size = 1);

  int dimension() const { return dim_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  int face_count(int k) const { return static_cast<int>(faces(k).size()); }
  const std::vector<Tuple>& faces(int k) const;

  /// Index of an unordered simplex (input in any order), or -1.
  int face_index(const Tuple& t) const;
  bool contains(const Tuple& t) const { return face_index(t) >= 0; }

  long long weight_at(int k, int index) const { return weights_[k][index]; }
  long long weight(const Tuple& t) const;

  /// Vertices v such that set(tau) + {v} is a simplex.
  std::vector<VertexId> link_vertices(const Tuple& tau) const;

  /// Unordered (k+1)-simplexes containing set(tau), as indices into faces(k+1).
  std::vector<int> coface_indices(const Tuple& tau) const;

  LinkComplex link(const Tuple& tau) const;

  /// Joins and verifies membership; raises NotDisjoint / JoinNotASimplex.
  Tuple join_checked(const Tuple& base, const Tuple& link_part) const;

  /// Sum over ordered cofaces of each tau in Sigma(k) of their weight must
  /// equal (n-k)(k+2)! w(tau). Exact integer arithmetic.
  bool check_weight_identity(int k) const;

  /// Generates all orderings of every k-simplex, lexicographic within each.
  void for_each_ordered(int k, const std::function<void(const Tuple&)>& fn) const;

  /// Testing hook: replaces the derived weight of one unordered simplex.
  void override_weight(const Tuple& t, long long w);

 private:
  int dim_ = -1;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<Tuple>> faces_;                               // per degree, sorted
  std::vector<std::unordered_map<Tuple, int, TupleHash>> face_index_;   // sorted tuple -> index
  std::vector<std::vector<long long>> weights_;                         // per degree, per index
  std::unordered_map<VertexId, std::vector<int>> tops_by_vertex_;       // vertex -> top indices
};

/// The link of tau: simplexes disjoint from tau whose join with tau lies in
/// the ambient complex. Its intrinsic weight equals the localized weight
/// w_tau(sigma) = w(tau * sigma) of the ambient complex.
class LinkComplex {
 public:
  LinkComplex(Tuple base, SimplicialComplex complex)
      : base_(std::move(base)), complex_(std::move(complex)) {}

  const Tuple& base() const { return base_; }
  const SimplicialComplex& complex() const { return complex_; }

  long long localized_weight(const Tuple& sigma) const { return complex_.weight(sigma); }

 private:
  Tuple base_;
  SimplicialComplex complex_;
};

}  // namespace linkgap
