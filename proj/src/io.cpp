#include "linkgap/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "linkgap/errors.hpp"

namespace linkgap {

using Json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, origin + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const std::string& origin) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::schema_error, origin + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

std::uint64_t fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

NamedComplex parse_complex_json(const std::string& text, const std::string& origin) {
  const Json doc = parse_json(text, origin);
  NamedComplex named;

  for (const Json& v : require(doc, "vertices", origin)) {
    if (!v.is_string()) fail(Errc::schema_error, origin + ": vertex names must be strings");
    const std::string name = v.get<std::string>();
    if (named.ids.count(name)) fail(Errc::schema_error, origin + ": duplicate vertex " + name);
    named.ids.emplace(name, static_cast<VertexId>(named.names.size()));
    named.names.push_back(name);
  }

  auto vertex_id = [&](const std::string& name) {
    auto it = named.ids.find(name);
    if (it == named.ids.end()) fail(Errc::unknown_vertex, origin + ": unknown vertex " + name);
    return it->second;
  };

  std::vector<Tuple> tops;
  for (const Json& simplex : require(doc, "top_simplexes", origin)) {
    Tuple t;
    for (const Json& v : simplex) t.push_back(vertex_id(v.get<std::string>()));
    tops.push_back(std::move(t));
  }
  named.complex = SimplicialComplex::from_top_simplexes(tops, 2);

  if (doc.contains("weights")) {
    for (auto it = doc["weights"].begin(); it != doc["weights"].end(); ++it) {
      Tuple t;
      std::stringstream ss(it.key());
      std::string part;
      while (std::getline(ss, part, ',')) t.push_back(vertex_id(part));
      named.complex.override_weight(t, it.value().get<long long>());
    }
  }
  return named;
}

NamedComplex parse_complex(const std::string& path) {
  return parse_complex_json(slurp(path), path);
}

Group parse_group_json(const std::string& text, const std::string& origin,
                       const NamedComplex& named, int cap) {
  const Json doc = parse_json(text, origin);
  const int universe = static_cast<int>(named.names.size());

  std::vector<Permutation> generators;
  for (const Json& gen : require(doc, "generators", origin)) {
    Permutation p = identity_permutation(universe);
    for (auto it = gen.begin(); it != gen.end(); ++it) {
      auto from = named.ids.find(it.key());
      auto to = named.ids.find(it.value().get<std::string>());
      if (from == named.ids.end() || to == named.ids.end())
        fail(Errc::unknown_vertex, origin + ": permutation over unknown vertices");
      p.image[from->second] = to->second;
    }
    if (!is_bijection(p)) fail(Errc::not_a_bijection, origin + ": generator is not a bijection");
    generators.push_back(std::move(p));
  }
  return Group::close(universe, generators, cap);
}

Group parse_group(const std::string& path, const NamedComplex& named, int cap) {
  return parse_group_json(slurp(path), path, named, cap);
}

Representation parse_representation_json(const std::string& text, const std::string& origin,
                                         const Group& G) {
  const Json doc = parse_json(text, origin);
  const int dim = require(doc, "dim", origin).get<int>();
  if (dim < 1) fail(Errc::schema_error, origin + ": dim must be positive");

  std::vector<Eigen::MatrixXd> mats;
  for (const Json& entry : require(doc, "generator_matrices", origin)) {
    if (static_cast<int>(entry.size()) != dim * dim)
      fail(Errc::dimension_mismatch, origin + ": generator matrix is not dim x dim");
    Eigen::MatrixXd M(dim, dim);
    int i = 0;
    for (const Json& x : entry) {
      M(i / dim, i % dim) = x.get<double>();
      ++i;
    }
    mats.push_back(std::move(M));
  }

  Representation rep = Representation::close(G, mats);
  if (rep.dim() != dim) fail(Errc::dimension_mismatch, origin + ": dim disagrees with matrices");

  if (doc.contains("similarity")) {
    const Json& rows = doc["similarity"];
    if (static_cast<int>(rows.size()) != dim)
      fail(Errc::dimension_mismatch, origin + ": similarity matrix is not dim x dim");
    Eigen::MatrixXd S(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (static_cast<int>(rows[r].size()) != dim)
        fail(Errc::dimension_mismatch, origin + ": similarity matrix is not dim x dim");
      for (int c = 0; c < dim; ++c) S(r, c) = rows[r][c].get<double>();
    }
    rep = rep.conjugated(S);
  }
  return rep;
}

Representation parse_representation(const std::string& path, const Group& G) {
  return parse_representation_json(slurp(path), path, G);
}

void AnalysisConfig::apply_env_overrides() {
  if (const char* v = std::getenv("LINKGAP_TOL_RANK")) tol_rank = std::strtod(v, nullptr);
  if (const char* v = std::getenv("LINKGAP_TOL_EIG")) tol_eig = std::strtod(v, nullptr);
}

namespace {

struct Instance {
  NamedComplex named;
  Group group;
  Representation rep;
};

Instance load_instance(const AnalysisConfig& config, RunReport& report) {
  Instance inst;
  const std::string complex_text = slurp(config.complex_path);
  report.complex_digest = fnv1a_digest(complex_text);
  inst.named = parse_complex_json(complex_text, config.complex_path);
  report.vertex_names = inst.named.names;

  if (config.group_path) {
    const std::string text = slurp(*config.group_path);
    report.group_digest = fnv1a_digest(text);
    inst.group = parse_group_json(text, *config.group_path, inst.named, config.cap);
  } else {
    inst.group = Group::close(static_cast<int>(inst.named.names.size()), {});
  }

  if (config.rep_path) {
    const std::string text = slurp(*config.rep_path);
    report.rep_digest = fnv1a_digest(text);
    inst.rep = parse_representation_json(text, *config.rep_path, inst.group);
  } else {
    inst.rep = Representation::trivial(inst.group);
  }
  return inst;
}

void run_stages(RunReport& report, const Instance& inst, bool spectral_stage,
                bool cohomology_stage, bool identity_stage) {
  const AnalysisConfig& config = report.config;
  report.action = verify_action(inst.named.complex, inst.group);
  if (!report.action.valid) {
    report.status = RunStatus::input_error;
    report.notes.push_back("group does not act by weight-preserving automorphisms");
    return;
  }

  if (spectral_stage)
    report.spectral =
        evaluate_criterion(inst.named.complex, inst.group, inst.rep, config.tol_eig);
  report.has_spectral = spectral_stage;

  const CochainContext ctx(inst.named.complex, inst.group, inst.rep, config.p);

  if (cohomology_stage) {
    if (inst.named.complex.dimension() == 2) {
      report.cohomology = h1_dimension(ctx.with_p(2.0), config.tol_rank);
      report.has_cohomology = true;
    } else {
      report.notes.push_back("cohomology stage skipped: complex is not 2-dimensional");
    }
  }

  if (identity_stage) {
    IdentitySuiteOptions opts;
    opts.samples = config.samples;
    opts.seed = config.seed;
    report.identities = run_identity_suite(ctx, opts);
    report.has_identities = true;
    for (const IdentityResult& r : report.identities)
      if (!r.pass) report.status = RunStatus::inconsistent;
  }

  if (spectral_stage && report.has_cohomology) {
    report.verdict = theorem_crosscheck(report.spectral, report.cohomology);
    if (!report.verdict.consistent) report.status = RunStatus::inconsistent;
  }
}

}  // namespace

RunReport run_analyze(const AnalysisConfig& config) {
  RunReport report;
  report.config = config;
  Instance inst = load_instance(config, report);
  run_stages(report, inst, true, true, true);
  return report;
}

RunReport run_check_identities(const AnalysisConfig& config) {
  RunReport report;
  report.config = config;
  Instance inst = load_instance(config, report);
  run_stages(report, inst, false, false, true);
  return report;
}

RunReport run_spectrum(const AnalysisConfig& config) {
  RunReport report;
  report.config = config;
  Instance inst = load_instance(config, report);
  run_stages(report, inst, true, false, false);
  return report;
}

RunReport run_cohomology(const AnalysisConfig& config) {
  RunReport report;
  report.config = config;
  Instance inst = load_instance(config, report);
  run_stages(report, inst, false, true, false);
  return report;
}

namespace {

std::string hex_digest(std::uint64_t d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

Json spectral_json(const RunReport& report) {
  const SpectralReport& s = report.spectral;
  Json links = Json::array();
  for (const LinkSpectralEntry& e : s.links) {
    Json entry;
    entry["vertex"] = report.vertex_names.empty() ? std::to_string(e.vertex)
                                                  : report.vertex_names[e.vertex];
    entry["orbit_size"] = e.orbit_size;
    entry["connected"] = e.connected;
    if (e.connected) {
      entry["lambda1"] = e.lambda1;
      entry["kappa2"] = e.kappa2;
      entry["threshold"] = e.threshold;
    }
    links.push_back(std::move(entry));
  }
  Json out;
  out["links"] = std::move(links);
  out["kappa2_max"] = s.kappa2_max;
  out["uniform_bound"] = s.uniform_bound;
  out["threshold"] = s.threshold;
  out["verdict"] = to_string(s.verdict);
  out["boundary_case"] = s.boundary_case;
  out["hypothesis_failures"] = s.hypothesis_failures;
  return out;
}

Json cohomology_json(const CohomologyReport& c) {
  Json out;
  out["dim_L"] = c.dim_L;
  out["rank_d0"] = c.rank_d0;
  out["rank_d1"] = c.rank_d1;
  out["dim_ker_d1"] = c.dim_ker_d1;
  out["dim_h0"] = c.dim_h0;
  out["dim_h1"] = c.dim_h1;
  out["dim_h2"] = c.dim_h2;
  out["chain_residual"] = c.chain_residual;
  if (c.delta_bound_vacuous)
    out["delta_lower_bound"] = "vacuous";
  else
    out["delta_lower_bound"] = c.delta_lower_bound;
  out["rank_gaps"] = {
      {"d0_smallest_kept", c.rank_d0_info.smallest_kept},
      {"d0_largest_dropped", c.rank_d0_info.largest_dropped},
      {"d1_smallest_kept", c.rank_d1_info.smallest_kept},
      {"d1_largest_dropped", c.rank_d1_info.largest_dropped},
  };
  return out;
}

}  // namespace

std::string render_json(const RunReport& report) {
  Json out;
  Json meta;
  meta["tool"] = "linkgap";
  meta["version"] = "0.1.0";
  Json inputs;
  inputs["complex"] = {{"path", report.config.complex_path},
                       {"digest", hex_digest(report.complex_digest)}};
  if (report.config.group_path)
    inputs["group"] = {{"path", *report.config.group_path},
                       {"digest", hex_digest(report.group_digest)}};
  if (report.config.rep_path)
    inputs["representation"] = {{"path", *report.config.rep_path},
                                {"digest", hex_digest(report.rep_digest)}};
  meta["inputs"] = std::move(inputs);
  meta["p"] = report.config.p;
  meta["seed"] = report.config.seed;
  meta["samples"] = report.config.samples;
  if (report.config.timestamp) meta["timestamp"] = iso_timestamp();
  out["meta"] = std::move(meta);

  out["action"] = {{"valid", report.action.valid}, {"violations", report.action.violations}};
  if (report.has_spectral) out["spectral"] = spectral_json(report);
  if (report.has_cohomology) out["cohomology"] = cohomology_json(report.cohomology);
  if (report.has_identities) {
    Json checks = Json::array();
    for (const IdentityResult& r : report.identities)
      checks.push_back({{"id", r.id},
                        {"description", r.description},
                        {"max_residual", r.residual},
                        {"tolerance", r.tolerance},
                        {"status", r.pass ? "pass" : "fail"}});
    out["identities"] = std::move(checks);
  }
  if (report.has_spectral && report.has_cohomology)
    out["consistency"] = {{"theorem", report.verdict.consistent ? "consistent" : "inconsistent"},
                          {"informative", report.verdict.informative},
                          {"note", report.verdict.note}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  out["status"] = static_cast<int>(report.status);
  return out.dump(2) + "\n";
}

std::string render_human(const RunReport& report) {
  std::ostringstream os;
  os << "linkgap report for " << report.config.complex_path << "\n";
  os << "  action: " << (report.action.valid ? "valid" : "INVALID") << "\n";
  for (const std::string& v : report.action.violations) os << "    violation: " << v << "\n";

  if (report.has_spectral) {
    const SpectralReport& s = report.spectral;
    os << "  links (one per vertex orbit):\n";
    for (const LinkSpectralEntry& e : s.links) {
      os << "    vertex " << (report.vertex_names.empty() ? std::to_string(e.vertex)
                                                          : report.vertex_names[e.vertex])
         << "  orbit size " << e.orbit_size;
      if (e.connected)
        os << "  lambda1 " << e.lambda1 << "  kappa2 " << e.kappa2 << "  threshold "
           << e.threshold;
      else
        os << "  DISCONNECTED";
      os << "\n";
    }
    os << "  criterion: C = " << s.uniform_bound << " vs sqrt(2)/kappa2_max = " << s.threshold
       << " -> " << to_string(s.verdict) << (s.boundary_case ? " (boundary case)" : "") << "\n";
  }

  if (report.has_cohomology) {
    const CohomologyReport& c = report.cohomology;
    os << "  cochain dims (k=0,1,2): " << c.dim_L[0] << ", " << c.dim_L[1] << ", " << c.dim_L[2]
       << "\n";
    os << "  rank d0 " << c.rank_d0 << ", dim ker d1 " << c.dim_ker_d1 << ", dim H^1 " << c.dim_h1
       << " (H^0 " << c.dim_h0 << ", H^2 " << c.dim_h2 << ")\n";
    os << "  delta lower bound: ";
    if (c.delta_bound_vacuous)
      os << "vacuous (trivial kernel)";
    else
      os << c.delta_lower_bound;
    os << "\n";
  }

  if (report.has_identities) {
    int failed = 0;
    for (const IdentityResult& r : report.identities)
      if (!r.pass) ++failed;
    os << "  identities: " << (report.identities.size() - failed) << "/"
       << report.identities.size() << " passed\n";
    for (const IdentityResult& r : report.identities) {
      os << "    [" << (r.pass ? "pass" : "FAIL") << "] " << r.id << "  residual " << r.residual
         << " (tol " << r.tolerance << ")\n";
    }
  }

  if (report.has_spectral && report.has_cohomology)
    os << "  theorem: " << report.verdict.note << "\n";
  for (const std::string& n : report.notes) os << "  note: " << n << "\n";
  os << "  status: " << static_cast<int>(report.status) << "\n";
  return os.str();
}

std::string render_csv(const RunReport& report) {
  std::ostringstream os;
  os << "vertex,orbit_size,connected,lambda1,kappa2,threshold\n";
  char buf[128];
  for (const LinkSpectralEntry& e : report.spectral.links) {
    const std::string name = report.vertex_names.empty() ? std::to_string(e.vertex)
                                                         : report.vertex_names[e.vertex];
    if (e.connected) {
      std::snprintf(buf, sizeof buf, "%s,%lld,true,%.17g,%.17g,%.17g", name.c_str(),
                    static_cast<long long>(e.orbit_size), e.lambda1, e.kappa2, e.threshold);
    } else {
      std::snprintf(buf, sizeof buf, "%s,%lld,false,,,", name.c_str(),
                    static_cast<long long>(e.orbit_size));
    }
    os << buf << "\n";
  }
  return os.str();
}

std::string render(const RunReport& report) {
  if (report.config.format == "json") return render_json(report);
  if (report.config.format == "csv") return render_csv(report);
  return render_human(report);
}

}  // namespace linkgap
