#pragma once

#include <Eigen/Dense>
#include <vector>

#include "linkgap/group.hpp"

namespace linkgap {

/// A finite-dimensional real representation of a finite permutation group:
/// one invertible matrix per group element, built by word closure along the
/// group's BFS tree. The uniform bound C = max over elements of the operator
/// 2-norm; C = 1 for orthogonal representations.
class Representation {
 public:
  Representation() = default;

  static Representation close(const Group& G, const std::vector<Eigen::MatrixXd>& generator_matrices);
  static Representation trivial(const Group& G, int dim = 1);
  static Representation permutation(const Group& G);
  static Representation sign(const Group& G);

  const Group& group() const { return *group_; }
  int dim() const { return dim_; }
  const Eigen::MatrixXd& matrix(int element) const { return matrices_[element]; }
  const std::vector<Eigen::MatrixXd>& matrices() const { return matrices_; }

  /// pi_g |-> S pi_g S^{-1}. For orthogonal input the bound of the result is
  /// verified against cond(S).
  Representation conjugated(const Eigen::MatrixXd& S) const;

  /// g |-> transpose-inverse; pairs invariantly with the original.
  Representation contragredient() const;

  /// Exact max over elements of the largest singular value.
  double uniform_bound() const { return uniform_bound_; }

  bool is_orthogonal() const { return orthogonal_; }

  /// max over elements of |pi_g x|_2; the norm in which the representation
  /// acts isometrically.
  double sup_norm(const Eigen::VectorXd& x) const;

  /// Restriction to a subgroup given as its own Group over the same universe.
  Representation restricted(const Group& subgroup) const;

  /// Same matrices bound to another Group instance with identical elements.
  Representation rebound(const Group& same_group) const;

 private:
  void analyze();

  const Group* group_ = nullptr;
  int dim_ = 0;
  std::vector<Eigen::MatrixXd> matrices_;
  double uniform_bound_ = 1.0;
  bool orthogonal_ = true;
};

/// Frobenius check of matrix(gh) = matrix(g) matrix(h) over random triples.
double homomorphism_residual(const Representation& rep, int trials = 100,
                             std::uint64_t seed = 11);

}  // namespace linkgap
