#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "linkgap/errors.hpp"

namespace linkgap {

using VertexId = int;

/// An ordered simplex is a tuple of distinct vertex ids; the underlying
/// unordered simplex is its sorted form.
using Tuple = std::vector<VertexId>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : t) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline int degree(const Tuple& t) { return static_cast<int>(t.size()) - 1; }

inline Tuple sorted(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline bool has_duplicates(const Tuple& t) {
  Tuple s = sorted(t);
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

/// i-th face of an ordered simplex with its incidence sign (-1)^i.
inline std::pair<Tuple, int> face(const Tuple& s, int i) {
  if (i < 0 || i >= static_cast<int>(s.size()))
    fail(Errc::index_out_of_range, "face index " + std::to_string(i) + " of a degree-" +
                                       std::to_string(degree(s)) + " simplex");
  Tuple out;
  out.reserve(s.size() - 1);
  for (int j = 0; j < static_cast<int>(s.size()); ++j)
    if (j != i) out.push_back(s[j]);
  return {out, (i % 2 == 0) ? 1 : -1};
}

/// Juxtaposition base * link. Disjointness is checked here; membership in a
/// complex is the caller's concern (see SimplicialComplex::join_checked).
inline Tuple join(const Tuple& base, const Tuple& link) {
  Tuple out = base;
  out.insert(out.end(), link.begin(), link.end());
  if (has_duplicates(out)) fail(Errc::not_disjoint, "join of overlapping simplexes");
  return out;
}

/// Sign of a permutation given as the image pattern (p[i] = position of the
/// i-th element), by inversion count.
inline int permutation_sign(const std::vector<int>& pattern) {
  int inv = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = i + 1; j < pattern.size(); ++j)
      if (pattern[i] > pattern[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

inline Tuple apply_pattern(const Tuple& t, const std::vector<int>& pattern) {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[pattern[i]];
  return out;
}

/// Calls fn once per permutation pattern of {0..k}, in lexicographic order.
template <typename Fn>
void for_each_pattern(int arity, Fn&& fn) {
  std::vector<int> pattern(arity);
  for (int i = 0; i < arity; ++i) pattern[i] = i;
  do {
    fn(const_cast<const std::vector<int>&>(pattern));
  } while (std::next_permutation(pattern.begin(), pattern.end()));
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace linkgap
