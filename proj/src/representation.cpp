#include "linkgap/representation.hpp"

#include <random>

#include "linkgap/errors.hpp"

namespace linkgap {

namespace {

double condition_number(const Eigen::MatrixXd& S) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-10 * sv(0)) fail(Errc::singular, "matrix is numerically singular");
  return sv(0) / (sv(sv.size() - 1));
}

double operator_norm(const Eigen::MatrixXd& M) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues()(0);
}

}  // namespace

Representation Representation::close(const Group& G,
                                     const std::vector<Eigen::MatrixXd>& generator_matrices) {
  if (generator_matrices.size() != G.generator_ids().size())
    fail(Errc::dimension_mismatch, "one matrix per group generator required");

  Representation rep;
  rep.group_ = &G;
  rep.dim_ = generator_matrices.empty() ? 1 : static_cast<int>(generator_matrices.front().rows());

  for (const Eigen::MatrixXd& M : generator_matrices) {
    if (M.rows() != rep.dim_ || M.cols() != rep.dim_)
      fail(Errc::dimension_mismatch, "generator matrices of differing shape");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    if (svd.singularValues()(rep.dim_ - 1) <= 1e-10)
      fail(Errc::singular, "generator matrix is singular");
  }

  rep.matrices_.assign(G.size(), Eigen::MatrixXd());
  rep.matrices_[0] = Eigen::MatrixXd::Identity(rep.dim_, rep.dim_);
  for (int id = 1; id < G.size(); ++id)
    rep.matrices_[id] = generator_matrices[G.bfs_via(id)] * rep.matrices_[G.bfs_parent(id)];

  // Two words reaching the same element must give the same matrix: check all
  // one-generator extensions against the stored product.
  for (int id = 0; id < G.size(); ++id) {
    for (std::size_t gi = 0; gi < generator_matrices.size(); ++gi) {
      const int target = G.compose_ids(G.generator_ids()[gi], id);
      const double err =
          (generator_matrices[gi] * rep.matrices_[id] - rep.matrices_[target]).cwiseAbs().maxCoeff();
      if (err > 1e-8)
        fail(Errc::inconsistent_relations,
             "generator matrices do not satisfy the group relations");
    }
  }

  rep.analyze();
  return rep;
}

Representation Representation::trivial(const Group& G, int dim) {
  Representation rep;
  rep.group_ = &G;
  rep.dim_ = dim;
  rep.matrices_.assign(G.size(), Eigen::MatrixXd::Identity(dim, dim));
  rep.analyze();
  return rep;
}

Representation Representation::permutation(const Group& G) {
  Representation rep;
  rep.group_ = &G;
  rep.dim_ = G.universe();
  rep.matrices_.reserve(G.size());
  for (int id = 0; id < G.size(); ++id) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rep.dim_, rep.dim_);
    for (int v = 0; v < rep.dim_; ++v) M(G.act(id, v), v) = 1.0;
    rep.matrices_.push_back(std::move(M));
  }
  rep.analyze();
  return rep;
}

Representation Representation::sign(const Group& G) {
  Representation rep;
  rep.group_ = &G;
  rep.dim_ = 1;
  rep.matrices_.reserve(G.size());
  for (int id = 0; id < G.size(); ++id) {
    Eigen::MatrixXd M(1, 1);
    M(0, 0) = static_cast<double>(G.parity(id));
    rep.matrices_.push_back(std::move(M));
  }
  rep.analyze();
  return rep;
}

Representation Representation::conjugated(const Eigen::MatrixXd& S) const {
  if (S.rows() != dim_ || S.cols() != dim_)
    fail(Errc::dimension_mismatch, "similarity matrix shape mismatch");
  const double cond = condition_number(S);
  const Eigen::MatrixXd Sinv = S.inverse();

  Representation rep;
  rep.group_ = group_;
  rep.dim_ = dim_;
  rep.matrices_.reserve(matrices_.size());
  for (const Eigen::MatrixXd& M : matrices_) rep.matrices_.push_back(S * M * Sinv);
  rep.analyze();

  if (orthogonal_ && rep.uniform_bound_ > cond * (1.0 + 1e-10))
    fail(Errc::inconsistent_relations, "conjugated bound exceeds the condition number");
  return rep;
}

Representation Representation::contragredient() const {
  Representation rep;
  rep.group_ = group_;
  rep.dim_ = dim_;
  rep.matrices_.reserve(matrices_.size());
  for (const Eigen::MatrixXd& M : matrices_) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M.transpose());
    if (!lu.isInvertible()) fail(Errc::singular, "matrix is singular");
    rep.matrices_.push_back(lu.inverse());
  }
  rep.analyze();
  return rep;
}

double Representation::sup_norm(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) fail(Errc::dimension_mismatch, "vector dimension mismatch");
  double best = 0.0;
  for (const Eigen::MatrixXd& M : matrices_) best = std::max(best, (M * x).norm());
  return best;
}

Representation Representation::restricted(const Group& subgroup) const {
  Representation rep;
  rep.group_ = &subgroup;
  rep.dim_ = dim_;
  rep.matrices_.reserve(subgroup.size());
  for (int id = 0; id < subgroup.size(); ++id) {
    const int parent_id = group_->index_of(subgroup.element(id));
    if (parent_id < 0) fail(Errc::invalid_action, "subgroup element missing from parent group");
    rep.matrices_.push_back(matrices_[parent_id]);
  }
  rep.analyze();
  return rep;
}

Representation Representation::rebound(const Group& same_group) const {
  if (same_group.size() != group_->size() || same_group.universe() != group_->universe())
    fail(Errc::invalid_action, "rebinding to a different group");
  Representation rep;
  rep.group_ = &same_group;
  rep.dim_ = dim_;
  rep.matrices_ = matrices_;
  rep.uniform_bound_ = uniform_bound_;
  rep.orthogonal_ = orthogonal_;
  return rep;
}

void Representation::analyze() {
  uniform_bound_ = 0.0;
  orthogonal_ = true;
  for (const Eigen::MatrixXd& M : matrices_) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-10) fail(Errc::singular, "representation matrix is singular");
    uniform_bound_ = std::max(uniform_bound_, sv(0));
    if ((M.transpose() * M - Eigen::MatrixXd::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > 1e-10)
      orthogonal_ = false;
  }
  if (matrices_.empty()) uniform_bound_ = 1.0;
}

double homomorphism_residual(const Representation& rep, int trials, std::uint64_t seed) {
  const Group& G = rep.group();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int g = pick(rng), h = pick(rng);
    const double err =
        (rep.matrix(g) * rep.matrix(h) - rep.matrix(G.compose_ids(g, h))).cwiseAbs().maxCoeff();
    worst = std::max(worst, err);
  }
  worst = std::max(worst, (rep.matrix(0) - Eigen::MatrixXd::Identity(rep.dim(), rep.dim()))
                              .cwiseAbs()
                              .maxCoeff());
  return worst;
}

}  // namespace linkgap
