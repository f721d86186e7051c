#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkgap/cohomology.hpp"
#include "linkgap/complex.hpp"
#include "linkgap/group.hpp"
#include "linkgap/identities.hpp"
#include "linkgap/representation.hpp"
#include "linkgap/spectral.hpp"

namespace linkgap {

/// A complex plus the vertex naming used by the file formats.
struct NamedComplex {
  SimplicialComplex complex;
  std::vector<std::string> names;                  // dense id -> name
  std::unordered_map<std::string, VertexId> ids;   // name -> dense id
};

/// JSON: {"vertices": [names], "top_simplexes": [[names]]}, with an optional
/// "weights" object mapping comma-joined sorted simplexes to integers for
/// adversarial fixtures.
NamedComplex parse_complex(const std::string& path);

/// JSON: {"generators": [{vertex: image, ...}]}; omitted vertices are fixed.
Group parse_group(const std::string& path, const NamedComplex& named, int cap = Group::kDefaultCap);

/// JSON: {"dim": d, "generator_matrices": [row-major lists], "similarity": rows}.
Representation parse_representation(const std::string& path, const Group& G);

NamedComplex parse_complex_json(const std::string& text, const std::string& origin);
Group parse_group_json(const std::string& text, const std::string& origin,
                       const NamedComplex& named, int cap = Group::kDefaultCap);
Representation parse_representation_json(const std::string& text, const std::string& origin,
                                         const Group& G);

struct AnalysisConfig {
  std::string complex_path;
  std::optional<std::string> group_path;
  std::optional<std::string> rep_path;
  double p = 2.0;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string format = "human";  // human | json | csv
  int cap = Group::kDefaultCap;
  double tol_rank = 1e-8;
  double tol_eig = 1e-8;
  bool timestamp = true;

  /// Applies LINKGAP_TOL_RANK / LINKGAP_TOL_EIG when set.
  void apply_env_overrides();
};

enum class RunStatus { ok = 0, input_error = 1, inconsistent = 2 };

struct RunReport {
  AnalysisConfig config;
  std::uint64_t complex_digest = 0, group_digest = 0, rep_digest = 0;
  ActionReport action;
  bool has_spectral = false;
  SpectralReport spectral;
  bool has_cohomology = false;
  CohomologyReport cohomology;
  bool has_identities = false;
  std::vector<IdentityResult> identities;
  TheoremVerdict verdict;
  std::vector<std::string> notes;
  std::vector<std::string> vertex_names;  // for rendering spectral entries

  RunStatus status = RunStatus::ok;
};

/// Full pipeline: action check, criterion, cohomology, identity battery,
/// theorem cross-check. Inconsistent results (criterion passed but H1 != 0,
/// or a failed identity) yield RunStatus::inconsistent.
RunReport run_analyze(const AnalysisConfig& config);

/// Identity battery only.
RunReport run_check_identities(const AnalysisConfig& config);

/// Spectral or cohomology stage only.
RunReport run_spectrum(const AnalysisConfig& config);
RunReport run_cohomology(const AnalysisConfig& config);

std::string render_json(const RunReport& report);
std::string render_human(const RunReport& report);
std::string render_csv(const RunReport& report);  // per-link spectral table
std::string render(const RunReport& report);      // by config.format

std::uint64_t fnv1a_digest(const std::string& bytes);

}  // namespace linkgap
