#include "linkgap/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "linkgap/errors.hpp"

namespace linkgap {

Permutation identity_permutation(int universe) {
  Permutation p;
  p.image.resize(universe);
  for (int v = 0; v < universe; ++v) p.image[v] = v;
  return p;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out;
  out.image.resize(h.image.size());
  for (std::size_t v = 0; v < h.image.size(); ++v) out.image[v] = g.image[h.image[v]];
  return out;
}

Permutation inverse(const Permutation& g) {
  Permutation out;
  out.image.resize(g.image.size());
  for (std::size_t v = 0; v < g.image.size(); ++v) out.image[g.image[v]] = static_cast<VertexId>(v);
  return out;
}

bool is_bijection(const Permutation& g) {
  std::vector<bool> seen(g.image.size(), false);
  for (VertexId w : g.image) {
    if (w < 0 || w >= static_cast<VertexId>(g.image.size()) || seen[w]) return false;
    seen[w] = true;
  }
  return true;
}

Group Group::close(int universe, const std::vector<Permutation>& generators, int cap) {
  if (cap < 1) fail(Errc::cap_exceeded, "closure cap must be positive");
  for (const Permutation& g : generators) {
    if (static_cast<int>(g.image.size()) != universe || !is_bijection(g))
      fail(Errc::not_a_bijection, "generator is not a vertex bijection");
  }

  Group G;
  G.universe_ = universe;
  G.elements_.push_back(identity_permutation(universe));
  G.index_.emplace(G.elements_[0], 0);
  G.bfs_parent_.push_back(0);
  G.bfs_via_.push_back(-1);

  std::vector<int> gen_ids;
  std::deque<int> queue;
  queue.push_back(0);
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation next = compose(generators[gi], G.elements_[cur]);
      auto [it, fresh] = G.index_.try_emplace(next, G.size());
      if (fresh) {
        if (G.size() >= cap) fail(Errc::cap_exceeded, "group closure exceeded cap of " +
                                                          std::to_string(cap));
        G.elements_.push_back(std::move(next));
        G.bfs_parent_.push_back(cur);
        G.bfs_via_.push_back(static_cast<int>(gi));
        queue.push_back(it->second);
      }
    }
  }
  for (const Permutation& g : generators) G.generator_ids_.push_back(G.index_.at(g));
  return G;
}

Group Group::from_elements(int universe, std::vector<Permutation> elements) {
  const Permutation id = identity_permutation(universe);
  std::sort(elements.begin(), elements.end(),
            [](const Permutation& a, const Permutation& b) { return a.image < b.image; });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  Group G;
  G.universe_ = universe;
  G.elements_.push_back(id);
  for (Permutation& p : elements) {
    if (!(p == id)) G.elements_.push_back(std::move(p));
  }
  for (int i = 0; i < G.size(); ++i) {
    G.index_.emplace(G.elements_[i], i);
    G.bfs_parent_.push_back(0);
    G.bfs_via_.push_back(-1);
  }
  // Sanity: closed under composition.
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      if (G.index_.find(compose(G.elements_[a], G.elements_[b])) == G.index_.end())
        fail(Errc::invalid_action, "element list is not closed under composition");
  return G;
}

int Group::compose_ids(int g, int h) const {
  auto it = index_.find(compose(elements_[g], elements_[h]));
  if (it == index_.end()) fail(Errc::invalid_action, "composition left the group");
  return it->second;
}

int Group::inverse_id(int g) const {
  auto it = index_.find(inverse(elements_[g]));
  if (it == index_.end()) fail(Errc::invalid_action, "inverse left the group");
  return it->second;
}

int Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

Tuple Group::act(int g, const Tuple& t) const {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = elements_[g].image[t[i]];
  return out;
}

int Group::parity(int g) const {
  // Cycle decomposition parity.
  const Permutation& p = elements_[g];
  std::vector<bool> seen(p.image.size(), false);
  int sign = 1;
  for (std::size_t v = 0; v < p.image.size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (std::size_t u = v; !seen[u]; u = p.image[u]) {
      seen[u] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

ActionReport verify_action(const SimplicialComplex& X, const Group& G) {
  ActionReport report;
  for (int g = 1; g < G.size(); ++g) {
    for (int k = 0; k <= X.dimension(); ++k) {
      for (const Tuple& s : X.faces(k)) {
        const Tuple img = G.act(g, s);
        if (!X.contains(img)) {
          report.valid = false;
          report.violations.push_back("element " + std::to_string(g) +
                                      " maps a simplex outside the complex");
          continue;
        }
        if (X.weight(img) != X.weight(s)) {
          report.valid = false;
          report.violations.push_back("element " + std::to_string(g) +
                                      " does not preserve weights");
        }
      }
    }
  }
  return report;
}

OrbitData::OrbitData(const SimplicialComplex& X, const Group& G, int k)
    : complex_(&X), group_(&G), degree_(k) {
  const auto& faces = X.faces(k);
  const int nfaces = static_cast<int>(faces.size());
  set_orbit_of_.assign(nfaces, -1);

  // Unordered orbits, ascending by first unassigned face.
  for (int i = 0; i < nfaces; ++i) {
    if (set_orbit_of_[i] >= 0) continue;
    const int oid = set_orbit_count();
    std::set<int> members;
    for (int g = 0; g < G.size(); ++g) {
      const int j = X.face_index(G.act(g, faces[i]));
      if (j < 0) fail(Errc::invalid_action, "orbit left the complex");
      members.insert(j);
    }
    std::vector<int> sorted_members(members.begin(), members.end());
    for (int j : sorted_members) set_orbit_of_[j] = oid;
    set_reps_.push_back(sorted_members.front());
    set_orbit_members_.push_back(std::move(sorted_members));

    std::vector<std::pair<int, int>> setstab;
    const Tuple& rep_face = faces[set_reps_[oid]];
    for (int g = 0; g < G.size(); ++g) {
      const Tuple img = G.act(g, rep_face);
      if (sorted(img) != rep_face) continue;
      std::vector<int> pattern(img.size());
      for (std::size_t a = 0; a < img.size(); ++a)
        pattern[a] = static_cast<int>(std::lower_bound(rep_face.begin(), rep_face.end(), img[a]) -
                                      rep_face.begin());
      setstab.emplace_back(g, permutation_sign(pattern));
    }
    setwise_stabilizers_.push_back(std::move(setstab));
  }

  // Ordered orbits: sweep every ordering of every face, seeding a new orbit
  // whenever a tuple has not been reached yet.
  std::vector<Tuple> seeds;
  for (const Tuple& s : faces)
    for_each_pattern(k + 1, [&](const std::vector<int>& pattern) {
      seeds.push_back(apply_pattern(s, pattern));
    });
  std::sort(seeds.begin(), seeds.end());

  for (const Tuple& seed : seeds) {
    if (lookup_.count(seed)) continue;
    // Lexicographic sweep guarantees the seed is the orbit minimum.
    const int oid = orbit_count();
    reps_.push_back(seed);
    index_orbit_from(seed, oid);
  }
}

void OrbitData::index_orbit_from(const Tuple& rep, int orbit_id) {
  const Group& G = *group_;
  std::vector<int> stab;
  std::set<Tuple> members;
  for (int g = 0; g < G.size(); ++g) {
    Tuple img = G.act(g, rep);
    if (img == rep) stab.push_back(g);
    members.insert(img);
    lookup_.try_emplace(std::move(img), orbit_id, g);  // smallest transporter wins
  }
  if (static_cast<int>(stabilizers_.size()) <= orbit_id) {
    stabilizers_.resize(orbit_id + 1);
    orbit_sizes_.resize(orbit_id + 1);
  }
  stabilizers_[orbit_id] = std::move(stab);
  orbit_sizes_[orbit_id] = static_cast<long long>(members.size());
}

std::pair<int, int> OrbitData::locate(const Tuple& sigma) const {
  auto it = lookup_.find(sigma);
  if (it == lookup_.end()) fail(Errc::not_a_simplex, "tuple is not an ordered simplex here");
  return it->second;
}

OrbitData OrbitData::randomized(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  OrbitData alt;
  alt.complex_ = complex_;
  alt.group_ = group_;
  alt.degree_ = degree_;
  alt.set_orbit_members_ = set_orbit_members_;
  alt.set_orbit_of_ = set_orbit_of_;
  alt.set_reps_ = set_reps_;
  alt.setwise_stabilizers_ = setwise_stabilizers_;

  for (int o = 0; o < orbit_count(); ++o) {
    std::uniform_int_distribution<int> pick(0, group_->size() - 1);
    const Tuple rep = group_->act(pick(rng), reps_[o]);
    alt.reps_.push_back(rep);
    alt.index_orbit_from(rep, o);
  }
  return alt;
}

namespace {

// Ordered sub-tuples of sigma of length l+1, i.e. the tau in Sigma(l) with
// tau contained in sigma.
void for_each_subtuple(const Tuple& sigma, int l, const std::function<void(const Tuple&)>& fn) {
  const int k1 = static_cast<int>(sigma.size());
  std::vector<int> idx(l + 1, 0);
  Tuple tau(l + 1);
  std::function<void(int, unsigned)> rec = [&](int pos, unsigned used) {
    if (pos == l + 1) {
      fn(tau);
      return;
    }
    for (int i = 0; i < k1; ++i) {
      if (used & (1u << i)) continue;
      tau[pos] = sigma[i];
      rec(pos + 1, used | (1u << i));
    }
  };
  rec(0, 0);
}

}  // namespace

std::pair<double, double> switching_sums(const SimplicialComplex& X, const Group& G, int l, int k,
                                         const std::function<double(const Tuple&, const Tuple&)>& f) {
  if (!(0 <= l && l < k && k <= X.dimension()))
    fail(Errc::index_out_of_range, "switching sums need 0 <= l < k <= n");
  OrbitData high(X, G, k);
  OrbitData low(X, G, l);

  double lhs = 0.0;
  for (int o = 0; o < high.orbit_count(); ++o) {
    const Tuple& sigma = high.representative(o);
    const double stab = static_cast<double>(high.stabilizer(o).size());
    for_each_subtuple(sigma, l, [&](const Tuple& tau) { lhs += f(tau, sigma) / stab; });
  }

  double rhs = 0.0;
  for (int o = 0; o < low.orbit_count(); ++o) {
    const Tuple& tau = low.representative(o);
    const double stab = static_cast<double>(low.stabilizer(o).size());
    const Tuple tset = sorted(tau);
    for (const Tuple& s : X.faces(k)) {
      if (!std::includes(s.begin(), s.end(), tset.begin(), tset.end())) continue;
      for_each_pattern(k + 1, [&](const std::vector<int>& pattern) {
        rhs += f(tau, apply_pattern(s, pattern)) / stab;
      });
    }
  }
  return {lhs, rhs};
}

bool check_switching_sums(const SimplicialComplex& X, const Group& G, int l, int k,
                          const std::function<double(const Tuple&, const Tuple&)>& f,
                          double rel_tol, std::uint64_t spot_check_seed) {
  // Spot-check invariance on a few random (g, pair) combinations.
  std::mt19937_64 rng(spot_check_seed);
  OrbitData high(X, G, k);
  std::uniform_int_distribution<int> pick_g(0, G.size() - 1);
  std::uniform_int_distribution<int> pick_o(0, high.orbit_count() - 1);
  for (int trial = 0; trial < 16; ++trial) {
    const Tuple& sigma = high.representative(pick_o(rng));
    Tuple tau(sigma.begin(), sigma.begin() + l + 1);
    const int g = pick_g(rng);
    const double a = f(tau, sigma);
    const double b = f(G.act(g, tau), G.act(g, sigma));
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
      fail(Errc::not_invariant, "pair function is not invariant under the action");
  }

  auto [lhs, rhs] = switching_sums(X, G, l, k, f);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= rel_tol * scale;
}

}  // namespace linkgap
