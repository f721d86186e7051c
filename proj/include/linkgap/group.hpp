#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkgap/complex.hpp"
#include "linkgap/simplex.hpp"

namespace linkgap {

/// A vertex permutation over a fixed universe [0, n): image[v] = g(v).
struct Permutation {
  std::vector<VertexId> image;

  bool operator==(const Permutation& o) const { return image == o.image; }
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return TupleHash{}(p.image); }
};

Permutation identity_permutation(int universe);
Permutation compose(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse(const Permutation& g);
bool is_bijection(const Permutation& g);

/// A finite permutation group with a deterministic element order: identity
/// first, then breadth-first closure over the generators. Element 0 is always
/// the identity.
class Group {
 public:
  static constexpr int kDefaultCap = 10000;

  static Group close(int universe, const std::vector<Permutation>& generators,
                     int cap = kDefaultCap);

  /// Wraps an already-closed element set (e.g. a stabilizer subgroup).
  static Group from_elements(int universe, std::vector<Permutation> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  int universe() const { return universe_; }
  const Permutation& element(int id) const { return elements_[id]; }
  const std::vector<int>& generator_ids() const { return generator_ids_; }

  int compose_ids(int g, int h) const;
  int inverse_id(int g) const;
  int index_of(const Permutation& p) const;

  VertexId act(int g, VertexId v) const { return elements_[g].image[v]; }
  Tuple act(int g, const Tuple& t) const;

  /// Parity of the vertex permutation.
  int parity(int g) const;

  /// BFS word structure: element = generator(via) composed with parent.
  int bfs_parent(int id) const { return bfs_parent_[id]; }
  int bfs_via(int id) const { return bfs_via_[id]; }

 private:
  int universe_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> generator_ids_;
  std::vector<int> bfs_parent_;
  std::vector<int> bfs_via_;
};

struct ActionReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks that every group element maps simplexes to simplexes of equal
/// weight. Violations are reported, not thrown.
ActionReport verify_action(const SimplicialComplex& X, const Group& G);

/// Orbit decomposition of the ordered k-simplexes under a valid action, plus
/// the unordered orbit partition. Canonical representative of an orbit is its
/// lexicographically smallest tuple; representatives are listed ascending.
class OrbitData {
 public:
  OrbitData(const SimplicialComplex& X, const Group& G, int k);

  int degree() const { return degree_; }
  const Group& group() const { return *group_; }

  // Ordered orbits.
  int orbit_count() const { return static_cast<int>(reps_.size()); }
  const Tuple& representative(int orbit) const { return reps_[orbit]; }
  const std::vector<int>& stabilizer(int orbit) const { return stabilizers_[orbit]; }
  long long orbit_size(int orbit) const { return orbit_sizes_[orbit]; }

  /// (orbit id, transporter g with g * representative == sigma).
  std::pair<int, int> locate(const Tuple& sigma) const;

  // Unordered orbits.
  int set_orbit_count() const { return static_cast<int>(set_orbit_members_.size()); }
  const std::vector<int>& set_orbit_members(int orbit) const { return set_orbit_members_[orbit]; }
  int set_orbit_of(int face_index) const { return set_orbit_of_[face_index]; }
  int set_representative(int orbit) const { return set_reps_[orbit]; }

  /// Setwise stabilizer of the unordered orbit representative, with the sign
  /// of the vertex reordering each element induces on it.
  const std::vector<std::pair<int, int>>& setwise_stabilizer(int set_orbit) const {
    return setwise_stabilizers_[set_orbit];
  }

  /// Alternative representative set (one random orbit member each) with its
  /// own transporters; used to confirm representative independence.
  OrbitData randomized(std::uint64_t seed) const;

 private:
  OrbitData() = default;
  void index_orbit_from(const Tuple& rep, int orbit_id);

  const SimplicialComplex* complex_ = nullptr;
  const Group* group_ = nullptr;
  int degree_ = 0;

  std::vector<Tuple> reps_;
  std::vector<std::vector<int>> stabilizers_;
  std::vector<long long> orbit_sizes_;
  std::unordered_map<Tuple, std::pair<int, int>, TupleHash> lookup_;

  std::vector<std::vector<int>> set_orbit_members_;
  std::vector<int> set_orbit_of_;
  std::vector<int> set_reps_;
  std::vector<std::vector<std::pair<int, int>>> setwise_stabilizers_;
};

/// Both sides of the orbit-sum exchange for a Gamma-invariant pair function
/// f(tau, sigma), tau an ordered l-simplex contained in the ordered k-simplex
/// sigma. Invariance is spot-checked; returns true when the two double sums
/// agree to `rel_tol`.
bool check_switching_sums(const SimplicialComplex& X, const Group& G, int l, int k,
                          const std::function<double(const Tuple&, const Tuple&)>& f,
                          double rel_tol = 1e-10, std::uint64_t spot_check_seed = 7);

/// The two sums separately, for tests.
std::pair<double, double> switching_sums(const SimplicialComplex& X, const Group& G, int l, int k,
                                         const std::function<double(const Tuple&, const Tuple&)>& f);

}  // namespace linkgap
