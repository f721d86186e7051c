#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkgap/cochain.hpp"

namespace linkgap {

struct IdentityResult {
  std::string id;
  std::string description;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct IdentitySuiteOptions {
  int samples = 20;
  std::uint64_t seed = 1;
};

/// Runs the full verification battery on one instance: the weight and
/// orbit-sum identities, projection algebra and norm bounds, differential /
/// codifferential duality, the local-to-global norm identities on links, and
/// the Poincare facts. Exponent and coefficient norm come from the context;
/// checks that require the adjoint index use p/(p-1).
std::vector<IdentityResult> run_identity_suite(const CochainContext& ctx,
                                               const IdentitySuiteOptions& opts = {});

}  // namespace linkgap
