#include "linkgap/cochain.hpp"

#include <cmath>

#include "linkgap/errors.hpp"

namespace linkgap {

CochainContext::CochainContext(const SimplicialComplex& X, const Group& G,
                               const Representation& rep, double p, CoeffNorm coeff)
    : p_(p), coeff_(coeff) {
  if (p < 1.0) fail(Errc::index_out_of_range, "exponent p must be >= 1");
  auto core = std::make_shared<Core>();
  core->X = X;
  core->G = G;
  core->rep = rep.rebound(core->G);
  core->contra = core->rep.contragredient();
  for (int k = 0; k <= X.dimension(); ++k) core->orbits.emplace_back(core->X, core->G, k);
  core_ = std::move(core);
  sup_primal_ = std::make_shared<const std::vector<Eigen::MatrixXd>>(core_->rep.matrices());
  sup_dual_ = std::make_shared<const std::vector<Eigen::MatrixXd>>(core_->contra.matrices());
}

const OrbitData& CochainContext::orbits(int k) const {
  if (k < 0 || k > top_dimension())
    fail(Errc::index_out_of_range, "no orbit data for degree " + std::to_string(k));
  return core_->orbits[k];
}

double CochainContext::pstar() const {
  if (p_ <= 1.0) fail(Errc::index_out_of_range, "the adjoint index requires p > 1");
  return p_ / (p_ - 1.0);
}

CochainContext CochainContext::with_p(double p) const {
  CochainContext out = *this;
  out.p_ = p;
  return out;
}

CochainContext CochainContext::with_coeff(CoeffNorm coeff) const {
  CochainContext out = *this;
  out.coeff_ = coeff;
  return out;
}

double CochainContext::coeff_norm(const Eigen::VectorXd& x, Side side) const {
  if (coeff_ == CoeffNorm::euclidean) return x.norm();
  const auto& mats = side == Side::primal ? *sup_primal_ : *sup_dual_;
  double best = 0.0;
  for (const Eigen::MatrixXd& M : mats) best = std::max(best, (M * x).norm());
  return best;
}

TwistedCochain TwistedCochain::zero(const CochainContext& ctx, int degree, Side side) {
  std::vector<Eigen::VectorXd> values(ctx.orbits(degree).orbit_count(),
                                      Eigen::VectorXd::Zero(ctx.dim()));
  return TwistedCochain(degree, side, std::move(values));
}

Eigen::VectorXd TwistedCochain::at(const Tuple& sigma, const CochainContext& ctx) const {
  const auto [orbit, transporter] = ctx.orbits(degree_).locate(sigma);
  if (transporter == 0) return values_[orbit];
  return ctx.action(transporter, side_) * values_[orbit];
}

TwistedCochain& TwistedCochain::operator+=(const TwistedCochain& other) {
  if (other.degree_ != degree_) fail(Errc::degree_mismatch, "adding cochains of unequal degree");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

TwistedCochain& TwistedCochain::operator*=(double c) {
  for (auto& v : values_) v *= c;
  return *this;
}

Eigen::VectorXd DenseCochain::at(const Tuple& sigma) const {
  auto it = values_.find(sigma);
  if (it == values_.end()) return Eigen::VectorXd::Zero(dim_);
  return it->second;
}

// -- Norms and pairing ------------------------------------------------------

namespace {

template <typename ValueAt>
double norm_impl(const CochainContext& ctx, const OrbitData& orbits, int degree, Side side,
                 ValueAt&& value_at) {
  const double p = ctx.p();
  const double fact = static_cast<double>(factorial(degree + 1));
  double acc = 0.0;
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    const Tuple& rep = orbits.representative(o);
    const double w = static_cast<double>(ctx.complex().weight(rep));
    const double stab = static_cast<double>(orbits.stabilizer(o).size());
    acc += std::pow(ctx.coeff_norm(value_at(o, rep), side), p) * w / (fact * stab);
  }
  return std::pow(acc, 1.0 / p);
}

template <typename PhiAt, typename FAt>
double pairing_impl(const CochainContext& ctx, int degree, PhiAt&& phi_at, FAt&& f_at) {
  const OrbitData& orbits = ctx.orbits(degree);
  const double fact = static_cast<double>(factorial(degree + 1));
  double acc = 0.0;
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    const Tuple& rep = orbits.representative(o);
    const double w = static_cast<double>(ctx.complex().weight(rep));
    const double stab = static_cast<double>(orbits.stabilizer(o).size());
    acc += phi_at(o, rep).dot(f_at(o, rep)) * w / (fact * stab);
  }
  return acc;
}

}  // namespace

double norm(const TwistedCochain& f, const CochainContext& ctx) {
  return norm_impl(ctx, ctx.orbits(f.degree()), f.degree(), f.side(),
                   [&](int o, const Tuple&) { return f.values()[o]; });
}

double norm(const DenseCochain& f, const CochainContext& ctx) {
  return norm_impl(ctx, ctx.orbits(f.degree()), f.degree(), f.side(),
                   [&](int, const Tuple& rep) { return f.at(rep); });
}

double norm_with_orbits(const TwistedCochain& f, const CochainContext& ctx, const OrbitData& alt) {
  return norm_impl(ctx, alt, f.degree(), f.side(),
                   [&](int, const Tuple& rep) { return f.at(rep, ctx); });
}

double pairing(const TwistedCochain& phi, const TwistedCochain& f, const CochainContext& ctx) {
  if (phi.degree() != f.degree()) fail(Errc::degree_mismatch, "pairing of unequal degrees");
  return pairing_impl(
      ctx, f.degree(), [&](int o, const Tuple&) { return phi.values()[o]; },
      [&](int o, const Tuple&) { return f.values()[o]; });
}

double pairing(const DenseCochain& phi, const TwistedCochain& f, const CochainContext& ctx) {
  if (phi.degree() != f.degree()) fail(Errc::degree_mismatch, "pairing of unequal degrees");
  return pairing_impl(
      ctx, f.degree(), [&](int, const Tuple& rep) { return phi.at(rep); },
      [&](int o, const Tuple&) { return f.values()[o]; });
}

double pairing(const DenseCochain& phi, const DenseCochain& f, const CochainContext& ctx) {
  if (phi.degree() != f.degree()) fail(Errc::degree_mismatch, "pairing of unequal degrees");
  return pairing_impl(
      ctx, f.degree(), [&](int, const Tuple& rep) { return phi.at(rep); },
      [&](int, const Tuple& rep) { return f.at(rep); });
}

// -- Projections ------------------------------------------------------------

namespace {

template <typename ValueAt>
Eigen::VectorXd alternate_at(const Tuple& sigma, int dim, ValueAt&& value_at) {
  const int arity = static_cast<int>(sigma.size());
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
  for_each_pattern(arity, [&](const std::vector<int>& pattern) {
    acc += permutation_sign(pattern) * value_at(apply_pattern(sigma, pattern));
  });
  return acc / static_cast<double>(factorial(arity));
}

}  // namespace

DenseCochain alternation(const DenseCochain& f) {
  DenseCochain out(f.degree(), f.side(), f.dim());
  // Alternation reads every ordering of every simplex carrying a value.
  std::unordered_map<Tuple, bool, TupleHash> seen;
  for (const auto& [sigma, v] : f.values()) {
    for_each_pattern(static_cast<int>(sigma.size()), [&](const std::vector<int>& pattern) {
      const Tuple reordered = apply_pattern(sigma, pattern);
      if (!seen.emplace(reordered, true).second) return;
      out.set(reordered,
              alternate_at(reordered, f.dim(), [&](const Tuple& t) { return f.at(t); }));
    });
  }
  return out;
}

TwistedCochain alternation(const TwistedCochain& f, const CochainContext& ctx) {
  const OrbitData& orbits = ctx.orbits(f.degree());
  TwistedCochain out = TwistedCochain::zero(ctx, f.degree(), f.side());
  for (int o = 0; o < orbits.orbit_count(); ++o)
    out.values()[o] = alternate_at(orbits.representative(o), ctx.dim(),
                                   [&](const Tuple& t) { return f.at(t, ctx); });
  return out;
}

namespace {

template <typename ValueAtRep>
TwistedCochain project_impl(const CochainContext& ctx, int degree, Side side,
                            ValueAtRep&& value_at_rep) {
  const OrbitData& orbits = ctx.orbits(degree);
  TwistedCochain out = TwistedCochain::zero(ctx, degree, side);
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    const std::vector<int>& stab = orbits.stabilizer(o);
    const Eigen::VectorXd v = value_at_rep(o, orbits.representative(o));
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(ctx.dim());
    for (int s : stab) acc += ctx.action(s, side) * v;
    out.values()[o] = acc / static_cast<double>(stab.size());
  }
  return out;
}

}  // namespace

TwistedCochain project_twisted(const DenseCochain& f, const CochainContext& ctx) {
  return project_impl(ctx, f.degree(), f.side(),
                      [&](int, const Tuple& rep) { return f.at(rep); });
}

TwistedCochain project_twisted(const TwistedCochain& f, const CochainContext& ctx) {
  return project_impl(ctx, f.degree(), f.side(),
                      [&](int o, const Tuple&) { return f.values()[o]; });
}

TwistedCochain project_L(const DenseCochain& f, const CochainContext& ctx) {
  return alternation(project_twisted(f, ctx), ctx);
}

TwistedCochain project_L(const TwistedCochain& f, const CochainContext& ctx) {
  return alternation(project_twisted(f, ctx), ctx);
}

double extension_coherence_residual(const TwistedCochain& f, const CochainContext& ctx) {
  const OrbitData& orbits = ctx.orbits(f.degree());
  double worst = 0.0;
  for (int o = 0; o < orbits.orbit_count(); ++o) {
    for (int s : orbits.stabilizer(o)) {
      const double err = (ctx.action(s, f.side()) * f.values()[o] - f.values()[o]).norm();
      worst = std::max(worst, err);
    }
  }
  return worst;
}

// -- Differentials ----------------------------------------------------------

namespace {

template <typename ValueAt>
Eigen::VectorXd differential_at(const Tuple& sigma, int dim, ValueAt&& value_at) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
    auto [fc, sign] = face(sigma, i);
    acc += static_cast<double>(sign) * value_at(fc);
  }
  return acc;
}

}  // namespace

TwistedCochain differential(const TwistedCochain& f, const CochainContext& ctx) {
  const int k = f.degree();
  if (k + 1 > ctx.top_dimension())
    fail(Errc::degree_overflow, "differential exceeds the top dimension");
  const OrbitData& up = ctx.orbits(k + 1);
  TwistedCochain out = TwistedCochain::zero(ctx, k + 1, f.side());
  for (int o = 0; o < up.orbit_count(); ++o)
    out.values()[o] = differential_at(up.representative(o), ctx.dim(),
                                      [&](const Tuple& t) { return f.at(t, ctx); });
  return out;
}

DenseCochain differential(const DenseCochain& f, const CochainContext& ctx) {
  const int k = f.degree();
  if (k + 1 > ctx.top_dimension())
    fail(Errc::degree_overflow, "differential exceeds the top dimension");
  DenseCochain out(k + 1, f.side(), f.dim());
  ctx.complex().for_each_ordered(k + 1, [&](const Tuple& sigma) {
    out.set(sigma, differential_at(sigma, f.dim(), [&](const Tuple& t) { return f.at(t); }));
  });
  return out;
}

TwistedCochain codifferential(const TwistedCochain& f, const CochainContext& ctx) {
  const int k = f.degree();
  if (k - 1 < 0) fail(Errc::degree_underflow, "codifferential of a degree-0 cochain");
  const OrbitData& down = ctx.orbits(k - 1);
  TwistedCochain out = TwistedCochain::zero(ctx, k - 1, f.side());
  for (int o = 0; o < down.orbit_count(); ++o) {
    const Tuple& tau = down.representative(o);
    const double wtau = static_cast<double>(ctx.complex().weight(tau));
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(ctx.dim());
    for (VertexId v : ctx.complex().link_vertices(tau)) {
      Tuple cone;
      cone.reserve(tau.size() + 1);
      cone.push_back(v);
      cone.insert(cone.end(), tau.begin(), tau.end());
      acc += (static_cast<double>(ctx.complex().weight(cone)) / wtau) * f.at(cone, ctx);
    }
    out.values()[o] = acc;
  }
  return out;
}

// -- Localization -----------------------------------------------------------

CochainContext make_link_context(const CochainContext& ambient, const Tuple& tau) {
  const LinkComplex lk = ambient.complex().link(tau);
  const Group& G = ambient.group();

  std::vector<Permutation> stab_elements;
  for (int g = 0; g < G.size(); ++g)
    if (G.act(g, tau) == tau) stab_elements.push_back(G.element(g));
  Group stabilizer = Group::from_elements(G.universe(), std::move(stab_elements));
  Representation restricted = ambient.rep(Side::primal).restricted(stabilizer);
  CochainContext link_ctx(lk.complex(), stabilizer, restricted, ambient.p(), ambient.coeff());
  link_ctx.sup_primal_ = ambient.sup_primal_;
  link_ctx.sup_dual_ = ambient.sup_dual_;
  return link_ctx;
}

TwistedCochain localize(const TwistedCochain& f, const Tuple& tau, const CochainContext& ambient,
                        const CochainContext& link_ctx) {
  const int out_degree = f.degree() - degree(tau) - 1;
  if (out_degree < 0) fail(Errc::degree_underflow, "localization needs degree > deg(tau)");
  const OrbitData& orbits = link_ctx.orbits(out_degree);
  TwistedCochain out = TwistedCochain::zero(link_ctx, out_degree, f.side());
  for (int o = 0; o < orbits.orbit_count(); ++o)
    out.values()[o] = f.at(join(tau, orbits.representative(o)), ambient);
  return out;
}

TwistedCochain restrict_to_link(const TwistedCochain& f, const Tuple& tau,
                                const CochainContext& ambient, const CochainContext& link_ctx) {
  const int k = f.degree();
  if (k + degree(tau) + 1 > ambient.top_dimension())
    fail(Errc::degree_overflow, "restriction needs deg(f) + deg(tau) + 1 <= n");
  const OrbitData& orbits = link_ctx.orbits(k);
  TwistedCochain out = TwistedCochain::zero(link_ctx, k, f.side());
  for (int o = 0; o < orbits.orbit_count(); ++o)
    out.values()[o] = f.at(orbits.representative(o), ambient);
  return out;
}

TwistedCochain average(const TwistedCochain& f_link, const CochainContext& link_ctx) {
  const int k = f_link.degree();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(link_ctx.dim());
  double mass = 0.0;
  link_ctx.complex().for_each_ordered(k, [&](const Tuple& sigma) {
    const double w = static_cast<double>(link_ctx.complex().weight(sigma));
    acc += w * f_link.at(sigma, link_ctx);
    mass += w;
  });
  acc /= mass;

  TwistedCochain out = TwistedCochain::zero(link_ctx, k, f_link.side());
  for (auto& v : out.values()) v = acc;
  return out;
}

double q_form(const TwistedCochain& f_link, const CochainContext& link_ctx,
              int ambient_dimension) {
  const double p = link_ctx.p();
  const double dpart = std::pow(norm(differential(f_link, link_ctx), link_ctx), p);
  const double fpart = std::pow(norm(f_link, link_ctx), p);
  return dpart - 0.5 * (ambient_dimension - 1) * fpart;
}

// -- Construction helpers ---------------------------------------------------

DenseCochain random_dense_cochain(const CochainContext& ctx, int degree, Side side,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  DenseCochain out(degree, side, ctx.dim());
  ctx.complex().for_each_ordered(degree, [&](const Tuple& sigma) {
    Eigen::VectorXd v(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) v(i) = coef(rng);
    out.set(sigma, std::move(v));
  });
  return out;
}

TwistedCochain random_twisted_cochain(const CochainContext& ctx, int degree, Side side,
                                      std::mt19937_64& rng) {
  return project_twisted(random_dense_cochain(ctx, degree, side, rng), ctx);
}

TwistedCochain random_L_cochain(const CochainContext& ctx, int degree, Side side,
                                std::mt19937_64& rng) {
  return project_L(random_dense_cochain(ctx, degree, side, rng), ctx);
}

DenseCochain delta_cochain(const CochainContext& ctx, const Tuple& sigma, int coefficient,
                           Side side) {
  DenseCochain out(degree(sigma), side, ctx.dim());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ctx.dim());
  v(coefficient) = 1.0;
  out.set(sigma, std::move(v));
  return out;
}

Eigen::VectorXd coordinates(const TwistedCochain& f) {
  const int d = f.values().empty() ? 0 : static_cast<int>(f.values().front().size());
  Eigen::VectorXd out(static_cast<int>(f.values().size()) * d);
  for (std::size_t i = 0; i < f.values().size(); ++i)
    out.segment(static_cast<int>(i) * d, d) = f.values()[i];
  return out;
}

TwistedCochain from_coordinates(const CochainContext& ctx, int degree, Side side,
                                const Eigen::VectorXd& coords) {
  TwistedCochain out = TwistedCochain::zero(ctx, degree, side);
  const int d = ctx.dim();
  for (std::size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = coords.segment(static_cast<int>(i) * d, d);
  return out;
}

}  // namespace linkgap
