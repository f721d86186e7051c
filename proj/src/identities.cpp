#include "linkgap/identities.hpp"

#include <cmath>

#include "linkgap/cohomology.hpp"
#include "linkgap/errors.hpp"
#include "linkgap/spectral.hpp"

namespace linkgap {

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double overshoot(double value, double bound) {
  return std::max(0.0, value - bound) / std::max(1.0, std::abs(bound));
}

double coords_diff(const TwistedCochain& a, const TwistedCochain& b) {
  const Eigen::VectorXd ca = coordinates(a), cb = coordinates(b);
  return (ca - cb).cwiseAbs().maxCoeff() / std::max(1.0, ca.cwiseAbs().maxCoeff());
}

/// Deterministic Gamma-invariant pair function keyed by the orbit of the pair.
std::function<double(const Tuple&, const Tuple&)> invariant_pair_function(const Group& G,
                                                                          std::uint64_t salt) {
  return [&G, salt](const Tuple& tau, const Tuple& sigma) {
    Tuple best;
    for (int g = 0; g < G.size(); ++g) {
      Tuple cat = G.act(g, tau);
      const Tuple s2 = G.act(g, sigma);
      cat.insert(cat.end(), s2.begin(), s2.end());
      if (best.empty() || cat < best) best = cat;
    }
    std::uint64_t h = static_cast<std::uint64_t>(TupleHash{}(best)) ^ salt;
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    h ^= h >> 31;
    return static_cast<double>(h % 2000001ull) / 1000000.0 - 1.0;
  };
}

double twisting_residual(const TwistedCochain& f, const CochainContext& ctx, std::mt19937_64& rng,
                         int trials) {
  const OrbitData& orbits = ctx.orbits(f.degree());
  std::uniform_int_distribution<int> pick_g(0, ctx.group().size() - 1);
  std::uniform_int_distribution<int> pick_o(0, orbits.orbit_count() - 1);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int g = pick_g(rng);
    const Tuple& sigma = orbits.representative(pick_o(rng));
    const Eigen::VectorXd lhs = f.at(ctx.group().act(g, sigma), ctx);
    const Eigen::VectorXd rhs = ctx.action(g, f.side()) * f.at(sigma, ctx);
    worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
  }
  return worst;
}

double alternating_residual(const TwistedCochain& f, const CochainContext& ctx) {
  return coords_diff(alternation(f, ctx), f);
}

/// Plain unfolding of a localized norm: sum over every ordered link simplex
/// against w_tau, divided by (k+1)! |Gamma_tau|.
double unfolded_link_norm(const TwistedCochain& f_link, const CochainContext& link_ctx) {
  const int k = f_link.degree();
  const double p = link_ctx.p();
  double acc = 0.0;
  link_ctx.complex().for_each_ordered(k, [&](const Tuple& sigma) {
    const double w = static_cast<double>(link_ctx.complex().weight(sigma));
    acc += std::pow(link_ctx.coeff_norm(f_link.at(sigma, link_ctx), f_link.side()), p) * w;
  });
  acc /= static_cast<double>(factorial(k + 1)) * link_ctx.group().size();
  return std::pow(acc, 1.0 / p);
}

struct LinkData {
  Tuple tau;
  CochainContext ctx;
};

}  // namespace

std::vector<IdentityResult> run_identity_suite(const CochainContext& ctx,
                                               const IdentitySuiteOptions& opts) {
  std::vector<IdentityResult> results;
  auto add = [&](const char* id, const char* desc, double residual, double tol) {
    results.push_back({id, desc, residual, tol, residual <= tol});
  };

  const SimplicialComplex& X = ctx.complex();
  const Group& G = ctx.group();
  const int n = X.dimension();
  const double p = ctx.p();
  const double pstar = ctx.pstar();
  std::mt19937_64 rng(opts.seed);
  const CochainContext ectx = ctx.with_coeff(CoeffNorm::sup_orbit);

  // Weight-coface sum: integer identity relating coface weights to (n-k)(k+2)!.
  {
    double residual = 0.0;
    for (int k = 0; k < n; ++k)
      if (!X.check_weight_identity(k)) residual = 1.0;
    add("weight_coface_sum", "sum of coface weights equals (n-k)(k+2)! w(tau)", residual, 0.0);
  }

  // Orbit-sum exchange over invariant pair functions.
  {
    double worst = 0.0;
    for (int l = 0; l < n; ++l)
      for (int k = l + 1; k <= n; ++k)
        for (int s = 0; s < opts.samples; ++s) {
          auto [lhs, rhs] = switching_sums(X, G, l, k, invariant_pair_function(G, 1000 * s + k));
          worst = std::max(worst, rel_diff(lhs, rhs));
        }
    add("orbit_sum_exchange", "representative double sums agree for invariant pair functions",
        worst, 1e-10);
  }

  // Alternation: idempotent, twisting-preserving, norm bound on twisted input.
  {
    double idem = 0.0, twist = 0.0, bound = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const DenseCochain f = random_dense_cochain(ctx, k, Side::primal, rng);
        const DenseCochain a1 = alternation(f);
        const DenseCochain a2 = alternation(a1);
        for (const auto& [sigma, v] : a1.values())
          idem = std::max(idem, (a2.at(sigma) - v).norm() / std::max(1.0, v.norm()));

        const TwistedCochain t = random_twisted_cochain(ctx, k, Side::primal, rng);
        const TwistedCochain at = alternation(t, ctx);
        twist = std::max(twist, twisting_residual(at, ctx, rng, 8));
        const double lhs = std::pow(norm(at, ectx), p);
        const double rhs = static_cast<double>(factorial(k + 1)) * std::pow(norm(t, ectx), p);
        bound = std::max(bound, overshoot(lhs, rhs));
      }
    }
    add("alternation_idempotent", "Alt Alt f = Alt f", idem, 1e-12);
    add("alternation_preserves_twisting", "Alt of a twisted cochain stays twisted", twist, 1e-10);
    add("alternation_norm_bound", "|Alt f|^p <= (k+1)! |f|^p in the isometric norm", bound, 1e-12);
  }

  // Stabilizer-average projection P.
  {
    double fixes = 0.0, idem = 0.0, twist = 0.0, contraction = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain t = random_twisted_cochain(ctx, k, Side::primal, rng);
        fixes = std::max(fixes, coords_diff(project_twisted(t, ctx), t));

        const DenseCochain f = random_dense_cochain(ctx, k, Side::primal, rng);
        const TwistedCochain pf = project_twisted(f, ctx);
        idem = std::max(idem, coords_diff(project_twisted(pf, ctx), pf));
        twist = std::max(twist, twisting_residual(pf, ctx, rng, 8));
        contraction = std::max(contraction, overshoot(norm(pf, ectx), norm(f, ectx)));
      }
    }
    add("twist_projection_fixes_twisted", "P f = f for twisted f", fixes, 1e-10);
    add("twist_projection_idempotent", "P P f = P f", idem, 1e-12);
    add("twist_projection_twists", "P f is twisted", twist, 1e-10);
    add("twist_projection_contraction", "|P f| <= |f| in the isometric norm", contraction, 1e-12);
  }

  // Combined projection onto the twisted alternating cochains.
  {
    double idem = 0.0, fixes = 0.0, image = 0.0, bound = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const DenseCochain f = random_dense_cochain(ctx, k, Side::primal, rng);
        const TwistedCochain pl = project_L(f, ctx);
        idem = std::max(idem, coords_diff(project_L(pl, ctx), pl));
        image = std::max(image, alternating_residual(pl, ctx));
        image = std::max(image, twisting_residual(pl, ctx, rng, 8));
        image = std::max(image, extension_coherence_residual(pl, ctx));
        bound = std::max(bound, overshoot(std::pow(norm(pl, ectx), p),
                                          static_cast<double>(factorial(k + 1)) *
                                              std::pow(norm(f, ectx), p)));

        const TwistedCochain t = random_L_cochain(ctx, k, Side::primal, rng);
        fixes = std::max(fixes, coords_diff(project_L(t, ctx), t));
      }
    }
    add("alt_twist_projection_idempotent", "P_L P_L f = P_L f", idem, 1e-12);
    add("alt_twist_projection_fixes", "P_L f = f on twisted alternating cochains", fixes, 1e-10);
    add("alt_twist_projection_image", "P_L lands in the twisted alternating cochains", image,
        1e-10);
    add("alt_twist_projection_bound", "|P_L f|^p <= (k+1)! |f|^p in the isometric norm", bound,
        1e-12);
  }

  // Adjoint of the projection against the contragredient side; annihilator
  // orthogonality.
  {
    double adj = 0.0, ann = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const DenseCochain f = random_dense_cochain(ctx, k, Side::primal, rng);
        const DenseCochain phi = random_dense_cochain(ctx, k, Side::dual, rng);
        const TwistedCochain plf = project_L(f, ctx);
        const TwistedCochain plphi = project_L(phi, ctx);
        adj = std::max(adj, rel_diff(pairing(phi, plf, ctx), pairing(f, plphi, ctx)));
        // <f_L, phi - P_L phi> and <f - P_L f, P_L phi> both vanish.
        ann = std::max(ann, rel_diff(pairing(phi, plf, ctx), pairing(plphi, plf, ctx)));
        ann = std::max(ann, rel_diff(pairing(f, plphi, ctx), pairing(plf, plphi, ctx)));
      }
    }
    add("projection_adjoint", "<P_L f, phi> = <f, P_L' phi> against the contragredient", adj,
        1e-9);
    add("annihilator_orthogonality", "twisted alternating cochains annihilate ker of the dual",
        ann, 1e-9);
  }

  // Norm independence of the representative choice. The Euclidean variant is
  // only claimed when the representation is isometric for it.
  {
    const bool orthogonal = ctx.rep(Side::primal).is_orthogonal();
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      const OrbitData alt = ctx.orbits(k).randomized(opts.seed + 101 * k);
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain t = random_L_cochain(ctx, k, Side::primal, rng);
        if (orthogonal)
          worst = std::max(worst, rel_diff(norm(t, ctx), norm_with_orbits(t, ctx, alt)));
        worst = std::max(worst, rel_diff(norm(t, ectx), norm_with_orbits(t, ectx, alt)));
      }
    }
    add("norm_representative_invariance", "(k,p)-norm is representative-independent", worst,
        1e-12);
  }

  // Pairing bound (Hoelder) in both coefficient norms.
  {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain f = random_L_cochain(ctx, k, Side::primal, rng);
        const TwistedCochain phi = random_L_cochain(ctx, k, Side::dual, rng);
        const double pr = std::abs(pairing(phi, f, ctx));
        worst = std::max(worst, overshoot(pr, norm(phi, ctx.with_p(pstar)) * norm(f, ctx)));
        worst = std::max(worst, overshoot(pr, norm(phi, ectx.with_p(pstar)) * norm(f, ectx)));
      }
    }
    add("pairing_holder", "|<phi, f>| <= |phi|_(k,p*) |f|_(k,p)", worst, 1e-12);
  }

  // Differential: chain property, norm bound, adjointness, pointwise
  // codifferential against the pairing-solved one.
  {
    double chain = 0.0, bound = 0.0;
    for (int k = 0; k + 1 <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain f = random_L_cochain(ctx, k, Side::primal, rng);
        const TwistedCochain df = differential(f, ctx);
        if (k + 2 <= n)
          chain = std::max(chain, coordinates(differential(df, ctx)).cwiseAbs().maxCoeff() /
                                      std::max(1.0, coordinates(f).cwiseAbs().maxCoeff()));
        bound = std::max(bound,
                         overshoot(std::pow(norm(df, ectx), p),
                                   (n - k) * std::pow(k + 2.0, p) * std::pow(norm(f, ectx), p)));
      }
    }
    add("chain_property", "d d f = 0", chain, 1e-12);
    add("differential_norm_bound", "|d f|^p <= (n-k)(k+2)^p |f|^p in the isometric norm", bound,
        1e-12);
  }
  {
    double adj = 0.0;
    for (int k = 1; k <= n; ++k) {
      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain phi = random_L_cochain(ctx, k, Side::dual, rng);
        const TwistedCochain psi = random_L_cochain(ctx, k - 1, Side::primal, rng);
        adj = std::max(adj, rel_diff(pairing(phi, differential(psi, ctx), ctx),
                                     pairing(codifferential(phi, ctx), psi, ctx)));
      }
    }
    add("differential_adjointness", "<phi, d psi> = <delta phi, psi>", adj, 1e-10);
  }
  {
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
      const CochainBasis primal = build_basis(ctx, k - 1, Side::primal);
      const CochainBasis dual = build_basis(ctx, k - 1, Side::dual);
      if (primal.dim() == 0 || dual.dim() != primal.dim()) continue;

      Eigen::MatrixXd pairings(dual.dim(), primal.dim());
      for (int i = 0; i < dual.dim(); ++i)
        for (int j = 0; j < primal.dim(); ++j)
          pairings(i, j) = pairing(dual.vectors[i], primal.vectors[j], ctx);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(pairings.transpose());
      if (!lu.isInvertible()) fail(Errc::singular, "degenerate pairing between dual bases");

      for (int s = 0; s < std::max(2, opts.samples / 4); ++s) {
        const TwistedCochain phi = random_L_cochain(ctx, k, Side::dual, rng);
        Eigen::VectorXd rhs(primal.dim());
        for (int j = 0; j < primal.dim(); ++j)
          rhs(j) = pairing(phi, differential(primal.vectors[j], ctx), ctx);
        const Eigen::VectorXd solved = lu.solve(rhs);

        const TwistedCochain direct = codifferential(phi, ctx);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(dual.coords);
        const Eigen::VectorXd expressed = qr.solve(coordinates(direct));
        worst = std::max(worst, (solved - expressed).cwiseAbs().maxCoeff() /
                                    std::max(1.0, solved.cwiseAbs().maxCoeff()));
      }
    }
    add("codifferential_pointwise", "pointwise codifferential matches the adjointness solution",
        worst, 1e-8);
  }

  // Localization suite. The norm identities hold in the isometric norm, so
  // the link contexts carry the orbit sup-norm; pointwise checks are
  // norm-agnostic. Kernel samples live at k = 1.
  if (n == 2) {
    std::vector<LinkData> vlinks;
    const OrbitData& vorbits = ctx.orbits(0);
    for (int o = 0; o < vorbits.orbit_count(); ++o) {
      const Tuple tau = vorbits.representative(o);
      vlinks.push_back({tau, make_link_context(ectx, tau)});
    }
    std::vector<LinkData> elinks;
    const OrbitData& eorbits = ctx.orbits(1);
    for (int o = 0; o < eorbits.orbit_count(); ++o) {
      const Tuple tau = eorbits.representative(o);
      elinks.push_back({tau, make_link_context(ectx, tau)});
    }

    const int nsamples = std::max(2, opts.samples / 4);
    std::vector<TwistedCochain> ones, twos;
    for (int s = 0; s < nsamples; ++s) {
      ones.push_back(random_L_cochain(ctx, 1, Side::primal, rng));
      twos.push_back(random_L_cochain(ctx, 2, Side::primal, rng));
    }
    std::vector<TwistedCochain> kernel = kernel_d1_samples(ctx, nsamples, opts.seed + 5);

    // Localized norm unfolding.
    {
      double worst = 0.0;
      auto check = [&](const TwistedCochain& f, const LinkData& ld) {
        const TwistedCochain floc = localize(f, ld.tau, ectx, ld.ctx);
        worst = std::max(worst, rel_diff(norm(floc, ld.ctx), unfolded_link_norm(floc, ld.ctx)));
      };
      for (const TwistedCochain& f : ones)
        for (const LinkData& ld : vlinks) check(f, ld);
      for (const TwistedCochain& f : twos) {
        for (const LinkData& ld : vlinks) check(f, ld);
        for (const LinkData& ld : elinks) check(f, ld);
      }
      add("localized_norm_unfolding",
          "representative link norm equals the plain weighted sum over the link", worst, 1e-9);
    }

    // Restriction norm sum over vertex orbits.
    {
      double worst = 0.0;
      for (int k = 0; k + 1 <= n; ++k) {
        for (int s = 0; s < nsamples; ++s) {
          const TwistedCochain f = k == 1 ? ones[s] : random_L_cochain(ctx, k, Side::primal, rng);
          double sum = 0.0;
          for (const LinkData& ld : vlinks)
            sum += std::pow(norm(restrict_to_link(f, ld.tau, ectx, ld.ctx), ld.ctx), p);
          worst = std::max(worst, rel_diff((n - k) * std::pow(norm(f, ectx), p), sum));
        }
      }
      add("restriction_norm_sum", "(n-k) |f|^p equals the sum of restricted norms", worst, 1e-9);
    }

    // Localization norm sum over representative bases of degree j.
    {
      double worst = 0.0;
      auto run = [&](const TwistedCochain& f, const std::vector<LinkData>& links, int j) {
        const int k = f.degree();
        double sum = 0.0;
        for (const LinkData& ld : links)
          sum += std::pow(norm(localize(f, ld.tau, ectx, ld.ctx), ld.ctx), p);
        worst = std::max(worst, rel_diff(factorial(k + 1) * std::pow(norm(f, ectx), p),
                                         factorial(k - j) * sum));
      };
      for (int s = 0; s < nsamples; ++s) {
        run(ones[s], vlinks, 0);
        run(twos[s], vlinks, 0);
        run(twos[s], elinks, 1);
      }
      add("localization_norm_sum", "(k+1)! |f|^p = (k-j)! sum of localized norms", worst, 1e-9);
    }

    // Ratio between restricted and localized sums at k = 1.
    {
      double worst = 0.0;
      for (const TwistedCochain& f : ones) {
        double restr = 0.0, loc = 0.0;
        for (const LinkData& ld : vlinks) {
          restr += std::pow(norm(restrict_to_link(f, ld.tau, ectx, ld.ctx), ld.ctx), p);
          loc += std::pow(norm(localize(f, ld.tau, ectx, ld.ctx), ld.ctx), p);
        }
        worst = std::max(worst, rel_diff(restr, (n - 1.0) / 2.0 * loc));
      }
      add("restriction_localization_ratio",
          "restricted norm sum is ((n-k)/(k+1)) times the localized one", worst, 1e-9);
    }

    // Localized codifferential commutes up to the cone sign (j < k-1).
    {
      double worst = 0.0;
      for (int s = 0; s < nsamples; ++s) {
        const TwistedCochain phi = random_L_cochain(ctx, 2, Side::dual, rng);
        const TwistedCochain dphi = codifferential(phi, ctx);
        for (const LinkData& ld : vlinks) {
          const TwistedCochain lhs = codifferential(localize(phi, ld.tau, ectx, ld.ctx), ld.ctx);
          const TwistedCochain rhs = localize(dphi, ld.tau, ectx, ld.ctx);
          TwistedCochain expect = rhs;
          expect *= -1.0;  // (-1)^{j+1} with j = 0
          worst = std::max(worst, coords_diff(lhs, expect));
        }
      }
      add("localized_codifferential_commutes",
          "link codifferential of a localization matches the localized codifferential", worst,
          1e-9);
    }

    // Average against the codifferential (j = k-1) plus the norm identity.
    {
      double worst = 0.0;
      auto run = [&](const TwistedCochain& phi, const std::vector<LinkData>& links, int k) {
        const TwistedCochain dphi = codifferential(phi, ctx);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (const LinkData& ld : links) {
          const TwistedCochain floc = localize(phi, ld.tau, ectx, ld.ctx);
          const Eigen::VectorXd avg = average(floc, ld.ctx).values().front();
          const Eigen::VectorXd lhs = dphi.at(ld.tau, ctx);
          const Eigen::VectorXd expect = sign * (n - k + 1.0) * avg;
          worst = std::max(worst, (lhs - expect).norm() / std::max(1.0, expect.norm()));

          const double lhs_norm =
              std::pow(norm(average(floc, ld.ctx), ld.ctx.with_p(pstar)), pstar);
          const double rhs_norm = static_cast<double>(ctx.complex().weight(ld.tau)) /
                                  (std::pow(n - k + 1.0, pstar - 1.0) * ld.ctx.group().size()) *
                                  std::pow(ectx.coeff_norm(lhs, Side::dual), pstar);
          worst = std::max(worst, rel_diff(lhs_norm, rhs_norm));
        }
      };
      for (int s = 0; s < nsamples; ++s) {
        run(random_L_cochain(ctx, 1, Side::dual, rng), vlinks, 1);
        run(random_L_cochain(ctx, 2, Side::dual, rng), elinks, 2);
      }
      add("average_codifferential_identity",
          "codifferential at tau is (-1)^k (n-k+1) times the localized average", worst, 1e-9);
    }

    // Localized differential identity at vertices (k = 1).
    {
      double worst = 0.0;
      auto run = [&](const TwistedCochain& phi) {
        const TwistedCochain dphi = differential(phi, ctx);
        for (const LinkData& ld : vlinks) {
          const TwistedCochain lhs = localize(dphi, ld.tau, ectx, ld.ctx);
          TwistedCochain rhs = differential(localize(phi, ld.tau, ectx, ld.ctx), ld.ctx);
          rhs *= -1.0;
          rhs += restrict_to_link(phi, ld.tau, ectx, ld.ctx);
          worst = std::max(worst, coords_diff(lhs, rhs));
        }
      };
      for (const TwistedCochain& f : ones) run(f);
      for (const TwistedCochain& f : kernel) run(f);
      add("localized_differential_identity",
          "localized differential is the restriction minus the link differential", worst, 1e-9);
    }

    // Kernel-only identities at k = 1.
    if (!kernel.empty()) {
      double h1r = 0.0, t2 = 0.0, bs = 0.0, t3 = 0.0, q = 0.0;
      for (const TwistedCochain& f : kernel) {
        double dsum = 0.0, locsum = 0.0, qsum = 0.0, qscale = 0.0;
        for (const LinkData& ld : vlinks) {
          const TwistedCochain floc = localize(f, ld.tau, ectx, ld.ctx);
          const TwistedCochain dloc = differential(floc, ld.ctx);
          const double dn = norm(dloc, ld.ctx);
          const double rn = norm(restrict_to_link(f, ld.tau, ectx, ld.ctx), ld.ctx);
          h1r = std::max(h1r, rel_diff(dn, rn));
          dsum += std::pow(dn, p);
          locsum += std::pow(norm(floc, ld.ctx), p);
          const double qt = q_form(floc, ld.ctx, n);
          qsum += qt;
          qscale += std::abs(qt);
        }
        const double fp = std::pow(norm(f, ectx), p);
        t2 = std::max(t2, rel_diff(dsum, (n - 1.0) / 2.0 * locsum));
        bs = std::max(bs, rel_diff(-(n - 1.0) * fp, dsum - (n - 1.0) * locsum));
        t3 = std::max(t3, rel_diff(dsum, (n - 1.0) * fp));
        q = std::max(q, std::abs(qsum) / std::max(1.0, qscale));
      }
      add("kernel_localized_differential_norm",
          "|d_tau f_tau| = |f^tau| for kernel cochains", h1r, 1e-9);
      add("kernel_localized_sum_ratio",
          "link differential energies sum to ((n-k)/(k+1)) of the localized norms", t2, 1e-9);
      add("kernel_global_localized_balance",
          "-(n-1)|f|^p equals the summed link balance", bs, 1e-9);
      add("kernel_differential_energy_sum",
          "link differential energies sum to (n-1)|f|^p", t3, 1e-9);
      add("link_form_kernel_sum", "the link forms sum to zero over kernel cochains", q, 1e-9);
    }

    // Weighted average is a projection onto constants.
    {
      double worst = 0.0;
      for (const LinkData& ld : vlinks) {
        for (int s = 0; s < 3; ++s) {
          const TwistedCochain f = random_twisted_cochain(ld.ctx, 0, Side::primal, rng);
          const TwistedCochain mf = average(f, ld.ctx);
          worst = std::max(worst, coords_diff(average(mf, ld.ctx), mf));
          TwistedCochain centered = f;
          TwistedCochain neg = mf;
          neg *= -1.0;
          centered += neg;
          worst = std::max(worst, norm(average(centered, ld.ctx), ld.ctx) /
                                      std::max(1.0, norm(f, ld.ctx)));
        }
      }
      add("average_projection", "the weighted average is a projection onto constants", worst,
          1e-9);
    }

    // Poincare inequality with the spectral constant, and its tightness.
    {
      double slack = 0.0, tight = 0.0, range = 0.0;
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (const LinkData& ld : vlinks) {
        const LinkGraph L = LinkGraph::from_link(X.link(ld.tau));
        if (!L.connected) continue;
        const double k2 = kappa2(L);
        for (int s = 0; s < opts.samples; ++s) {
          Eigen::MatrixXd f(L.size(), 3);
          for (int i = 0; i < f.size(); ++i) f(i) = gauss(rng);
          slack = std::max(slack, overshoot(poincare_ratio(L, f), k2));
        }
        const Eigen::VectorXd w = poincare_extremizer(L);
        tight = std::max(tight, rel_diff(poincare_ratio(L, w), k2));

        const Eigen::VectorXd ev = laplacian_spectrum(L);
        range = std::max(range, std::max(-ev(0), ev(ev.size() - 1) - 2.0));
        Eigen::VectorXd ones_vec(L.size());
        for (int v = 0; v < L.size(); ++v) ones_vec(v) = std::sqrt(L.vweight[v]);
        range = std::max(range, (link_laplacian(L) * ones_vec).norm() / ones_vec.norm());
      }
      add("poincare_inequality", "|f - Mf| <= kappa_2 |d f| on every vertex link", slack, 1e-12);
      add("poincare_tightness", "the spectral witness achieves kappa_2", tight, 1e-6);
      add("laplacian_spectrum_range", "normalized Laplacian spectrum lies in [0,2]", range,
          1e-10);
    }
  }

  return results;
}

}  // namespace linkgap
