#pragma once

#include <Eigen/Dense>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "linkgap/complex.hpp"
#include "linkgap/group.hpp"
#include "linkgap/representation.hpp"

namespace linkgap {

/// Primal cochains are twisted by pi, dual ones by the contragredient; the
/// dual side is what the codifferential and the pairing identities live on.
enum class Side { primal, dual };

/// Coefficient norm: plain Euclidean, or the orbit sup-norm in which the
/// representation acts isometrically.
enum class CoeffNorm { euclidean, sup_orbit };

/// Everything a cochain operation needs: complex, group action with orbit
/// data per degree, the representation and its contragredient, the exponent p
/// and the coefficient norm. Copies created by with_p / with_coeff share the
/// underlying (immutable) core.
class CochainContext {
 public:
  CochainContext(const SimplicialComplex& X, const Group& G, const Representation& rep,
                 double p = 2.0, CoeffNorm coeff = CoeffNorm::euclidean);

  const SimplicialComplex& complex() const { return core_->X; }
  const Group& group() const { return core_->G; }
  const Representation& rep(Side side) const {
    return side == Side::primal ? core_->rep : core_->contra;
  }
  const OrbitData& orbits(int k) const;
  int dim() const { return core_->rep.dim(); }
  int top_dimension() const { return core_->X.dimension(); }

  double p() const { return p_; }
  double pstar() const;
  CoeffNorm coeff() const { return coeff_; }

  CochainContext with_p(double p) const;
  CochainContext with_coeff(CoeffNorm coeff) const;

  /// The sup-norm ranges over the matrices the context was created with; a
  /// link context inherits them from its ambient context, so local and global
  /// norms refer to the same Banach norm on the coefficients.
  double coeff_norm(const Eigen::VectorXd& x, Side side) const;
  const Eigen::MatrixXd& action(int element, Side side) const {
    return rep(side).matrix(element);
  }

 private:
  friend CochainContext make_link_context(const CochainContext&, const Tuple&);

  struct Core {
    SimplicialComplex X;
    Group G;
    Representation rep;
    Representation contra;
    std::vector<OrbitData> orbits;
  };

  std::shared_ptr<const Core> core_;
  std::shared_ptr<const std::vector<Eigen::MatrixXd>> sup_primal_, sup_dual_;
  double p_;
  CoeffNorm coeff_;
};

/// A twisted alternating cochain determined by its values on the ordered
/// orbit representatives; values elsewhere extend through the twisting
/// f(g.sigma) = pi_g f(sigma).
class TwistedCochain {
 public:
  TwistedCochain() = default;
  TwistedCochain(int degree, Side side, std::vector<Eigen::VectorXd> values)
      : degree_(degree), side_(side), values_(std::move(values)) {}

  static TwistedCochain zero(const CochainContext& ctx, int degree, Side side);

  int degree() const { return degree_; }
  Side side() const { return side_; }
  const std::vector<Eigen::VectorXd>& values() const { return values_; }
  std::vector<Eigen::VectorXd>& values() { return values_; }

  Eigen::VectorXd at(const Tuple& sigma, const CochainContext& ctx) const;

  TwistedCochain& operator+=(const TwistedCochain& other);
  TwistedCochain& operator*=(double c);

 private:
  int degree_ = 0;
  Side side_ = Side::primal;
  std::vector<Eigen::VectorXd> values_;
};

/// A raw cochain with explicit values on ordered simplexes; absent entries
/// read as zero. Dense cochains are the inputs to the projections and the
/// oracle side of cross-checks.
class DenseCochain {
 public:
  DenseCochain() = default;
  DenseCochain(int degree, Side side, int dim) : degree_(degree), side_(side), dim_(dim) {}

  int degree() const { return degree_; }
  Side side() const { return side_; }
  int dim() const { return dim_; }

  void set(const Tuple& sigma, Eigen::VectorXd v) { values_[sigma] = std::move(v); }
  Eigen::VectorXd at(const Tuple& sigma) const;
  const std::unordered_map<Tuple, Eigen::VectorXd, TupleHash>& values() const { return values_; }

 private:
  int degree_ = 0;
  Side side_ = Side::primal;
  int dim_ = 0;
  std::unordered_map<Tuple, Eigen::VectorXd, TupleHash> values_;
};

// -- Norms and pairing ------------------------------------------------------

double norm(const TwistedCochain& f, const CochainContext& ctx);
double norm(const DenseCochain& f, const CochainContext& ctx);

/// Norm over an alternative representative set (representative independence).
double norm_with_orbits(const TwistedCochain& f, const CochainContext& ctx, const OrbitData& alt);

double pairing(const TwistedCochain& phi, const TwistedCochain& f, const CochainContext& ctx);
double pairing(const DenseCochain& phi, const TwistedCochain& f, const CochainContext& ctx);
double pairing(const DenseCochain& phi, const DenseCochain& f, const CochainContext& ctx);

// -- Projections ------------------------------------------------------------

DenseCochain alternation(const DenseCochain& f);
TwistedCochain alternation(const TwistedCochain& f, const CochainContext& ctx);

/// P: stabilizer average on representatives, extended by twisting.
TwistedCochain project_twisted(const DenseCochain& f, const CochainContext& ctx);
TwistedCochain project_twisted(const TwistedCochain& f, const CochainContext& ctx);

/// P_L = Alt o P, the projection onto the twisted alternating cochains.
TwistedCochain project_L(const DenseCochain& f, const CochainContext& ctx);
TwistedCochain project_L(const TwistedCochain& f, const CochainContext& ctx);

/// Max over representatives and stabilizer elements of |pi_s v - v|; zero
/// (up to rounding) iff the stored values extend coherently.
double extension_coherence_residual(const TwistedCochain& f, const CochainContext& ctx);

// -- Differentials ----------------------------------------------------------

TwistedCochain differential(const TwistedCochain& f, const CochainContext& ctx);
DenseCochain differential(const DenseCochain& f, const CochainContext& ctx);

/// Pointwise codifferential: weighted sum over cone extensions v * tau.
TwistedCochain codifferential(const TwistedCochain& f, const CochainContext& ctx);

// -- Localization -----------------------------------------------------------

/// Context over the link of tau: the stabilizer of tau acting on the link
/// complex with the restricted representation and localized weights.
CochainContext make_link_context(const CochainContext& ambient, const Tuple& tau);

/// f_tau(sigma) = f(tau * sigma), a (k - l - 1)-cochain on the link.
TwistedCochain localize(const TwistedCochain& f, const Tuple& tau, const CochainContext& ambient,
                        const CochainContext& link_ctx);

/// f^tau(sigma) = f(sigma) over the link simplexes, same degree.
TwistedCochain restrict_to_link(const TwistedCochain& f, const Tuple& tau,
                                const CochainContext& ambient, const CochainContext& link_ctx);

/// Weighted average projection onto constants.
TwistedCochain average(const TwistedCochain& f_link, const CochainContext& link_ctx);

/// Q form on degree-0 link cochains: |d f|^p - ((n-1)/2)|f|^p in link norms.
double q_form(const TwistedCochain& f_link, const CochainContext& link_ctx, int ambient_dimension);

// -- Construction helpers ---------------------------------------------------

DenseCochain random_dense_cochain(const CochainContext& ctx, int degree, Side side,
                                  std::mt19937_64& rng);
TwistedCochain random_twisted_cochain(const CochainContext& ctx, int degree, Side side,
                                      std::mt19937_64& rng);
TwistedCochain random_L_cochain(const CochainContext& ctx, int degree, Side side,
                                std::mt19937_64& rng);

/// Dense cochain supported on one ordered simplex with one coefficient basis
/// vector; P_L images of these span the twisted alternating cochains.
DenseCochain delta_cochain(const CochainContext& ctx, const Tuple& sigma, int coefficient,
                           Side side);

Eigen::VectorXd coordinates(const TwistedCochain& f);
TwistedCochain from_coordinates(const CochainContext& ctx, int degree, Side side,
                                const Eigen::VectorXd& coords);

}  // namespace linkgap
