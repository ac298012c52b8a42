#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "phantomkit/phantomkit.hpp"

namespace phantomkit {

namespace {

// Rings by name; module files name their algebra, and catalog names
// ("truncated_poly:2@p=2") resolve without a ring file.
class Workspace {
 public:
  void load(const std::string& ring_file, const std::string& builtin) {
    if (!ring_file.empty() && !builtin.empty())
      throw Error(ErrorKind::BadParams, "give either --ring or --builtin, not both");
    if (!ring_file.empty()) {
      const std::string text = read_text_file(ring_file);
      primary_ = Ring::make(parse_algebra(text, ring_file));
      rings_[primary_->name()] = primary_;
    } else if (!builtin.empty()) {
      primary_ = Ring::make(catalog_algebra(builtin));
      rings_[primary_->name()] = primary_;
      rings_[builtin] = primary_;
    }
  }

  RingPtr resolve(const std::string& name) {
    if (auto it = rings_.find(name); it != rings_.end()) return it->second;
    try {
      RingPtr r = Ring::make(catalog_algebra(name));
      if (auto it = rings_.find(r->name()); it != rings_.end()) r = it->second;
      rings_[name] = r;
      rings_[r->name()] = r;
      return r;
    } catch (const Error&) {
      return nullptr;
    }
  }

  RingPtr primary() const {
    if (!primary_) throw Error(ErrorKind::BadParams, "no algebra given; use --ring <file> or --builtin <key>");
    return primary_;
  }

  RingResolver resolver() {
    return [this](const std::string& name) { return resolve(name); };
  }

  ModuleRep module(const std::string& path) {
    return check_ring(parse_module(read_text_file(path), path, resolver()), path);
  }

  ModuleMorphism morphism(const std::string& path) {
    const std::filesystem::path p(path);
    auto f = parse_morphism(read_text_file(path), path, resolver(), p.parent_path());
    check_ring(f.source(), path);
    return f;
  }

 private:
  ModuleRep check_ring(ModuleRep m, const std::string& path) {
    if (primary_ && m.ring() != primary_)
      throw Error(ErrorKind::ParseError, path + ":1: module lives over " + m.ring()->name() +
                                             ", expected " + primary_->name());
    if (!primary_) primary_ = m.ring();
    return m;
  }

  std::map<std::string, RingPtr> rings_;
  RingPtr primary_;
};

std::string functor_text(const TestWitness& w) {
  const std::string i = std::to_string(w.degree);
  switch (w.functor) {
    case FunctorKind::ExtContra: return "Ext^" + i + "(f, X)";
    case FunctorKind::ExtCov: return "Ext^" + i + "(X, f)";
    case FunctorKind::Tor: return "Tor_" + i + "(f, Y)";
  }
  return "?";
}

std::string failure_text(TestWitness::Failure f) {
  switch (f) {
    case TestWitness::Failure::Nonzero: return "nonzero";
    case TestWitness::Failure::NotMonic: return "not monic";
    case TestWitness::Failure::NotEpic: return "not epic";
  }
  return "?";
}

std::string clause(const DecisionReport& r) {
  std::string s;
  if (r.verdict) {
    if (r.justification == Justification::ZeroShortcut) return "witness h=0";
    if (r.factorization)
      s = "witness h through a module of dim " + std::to_string(r.factorization->first.target().dim()) + "; ";
    s += std::string(to_string(r.justification));
  } else {
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      const auto& w = r.witnesses[k];
      s += (k ? "; " : "") + std::string("witness ") + functor_text(w) + " " + failure_text(w.failure) +
           " at a test module of dim " + std::to_string(w.module.dim());
    }
    if (s.empty()) s = std::string(to_string(r.justification));
    else s += "; " + std::string(to_string(r.justification));
  }
  if (r.confidence == Confidence::Sampled) s += "; sampled";
  return s;
}

void line(std::ostream& out, const std::string& label, const DecisionReport& r) {
  out << label << ": " << (r.verdict ? "yes" : "no") << " (" << clause(r) << ")\n";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, path + ":0: cannot write file");
  f << text << "\n";
}

struct Common {
  std::string ring_file;
  std::string builtin;
  void attach(CLI::App* cmd) {
    cmd->add_option("--ring", ring_file, "algebra JSON file");
    cmd->add_option("--builtin", builtin, "catalog algebra, e.g. truncated_poly:2@p=2");
  }
};

int cmd_check(Workspace& ws, const std::string& morphism_file, std::size_t degree, std::size_t samples,
              std::uint64_t seed, bool as_json, std::ostream& out) {
  ModuleMorphism f = ws.morphism(morphism_file);
  const std::size_t i = std::max<std::size_t>(1, degree);
  Classification c = classify_morphism(f, i);
  DecisionReport epic = decide_epic_contra(f, i);

  std::optional<GorensteinCertificate> cert;
  try {
    cert = certify(f.source().ring());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoCertificate) throw;
  }
  std::vector<std::pair<std::string, DecisionReport>> extra;
  if (cert && i == 1 && gp_test(f.source(), *cert).verdict && gp_test(f.target(), *cert).verdict) {
    extra.emplace_back("GP vanishing", decide_gp_trio(f, Trio::Vanishing, *cert));
    extra.emplace_back("GP Tor_1(f,-) epic", decide_gp_trio(f, Trio::TorEpic, *cert));
    extra.emplace_back("GP Tor_1(f,-) monic", decide_gp_trio(f, Trio::TorMonic, *cert));
  }
  if (cert && i > cert->n) {
    HighDegreeBundle b = decide_gorenstein_high_degree(f, i, *cert);
    const std::string d = std::to_string(i);
    extra.emplace_back("all degree-" + d + " functors vanish", b.vanishing);
    extra.emplace_back("Tor_" + d + "(f,-) epic", b.tor_epic);
    extra.emplace_back("Tor_" + d + "(f,-) monic", b.tor_monic);
  }
  std::optional<OneDirectional> sampled;
  if (samples > 0) {
    PoolOptions po;
    po.seed = seed;
    po.random_count = samples;
    Pool pool = standard_pool(f.source().ring(), po);
    std::vector<ModuleRep> xs, ys;
    for (const auto& e : pool.right) xs.push_back(e.module);
    for (const auto& e : pool.left) ys.push_back(e.module);
    sampled = decide_one_directional(f, i, xs, ys);
  }

  if (as_json) {
    Json j;
    j["degree"] = i;
    j["phantom"] = report_to_json(c.phantom);
    j["projective_morphism"] = report_to_json(c.projective_morphism);
    j["ext_phantom"] = report_to_json(c.ext_phantom);
    j["injective_morphism"] = report_to_json(c.injective_morphism);
    j["ext_epic"] = report_to_json(epic);
    Json more = Json::array();
    for (const auto& [label, r] : extra) more.push_back({{"label", label}, {"report", report_to_json(r)}});
    j["gorenstein"] = std::move(more);
    if (sampled) {
      j["sampled"] = {{"tor_epic", report_to_json(sampled->tor_epic)},
                      {"ext_monic", report_to_json(sampled->ext_monic)},
                      {"implication_holds", sampled->implication_holds},
                      {"converse_candidate", sampled->converse_candidate}};
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  const std::string d = std::to_string(i);
  out << "f: dim " << f.source().dim() << " -> dim " << f.target().dim() << " over " << f.source().ring()->name()
      << ", degree " << d << "\n";
  line(out, "phantom", c.phantom);
  line(out, "projective morphism", c.projective_morphism);
  line(out, "Ext-phantom", c.ext_phantom);
  line(out, "injective morphism", c.injective_morphism);
  line(out, "Ext^" + d + "(f,-) epic", epic);
  for (const auto& [label, r] : extra) line(out, label, r);
  if (sampled) {
    line(out, "Tor_" + d + "(f,-) epic on the pool", sampled->tor_epic);
    line(out, "Ext^" + d + "(f,-) monic on the pool", sampled->ext_monic);
    out << "one-directional clause on the pool: " << (sampled->implication_holds ? "holds" : "violated")
        << (sampled->converse_candidate ? " (converse candidate)" : "") << "\n";
  }
  return 0;
}

int cmd_homology(Workspace& ws, bool ext, const std::string& m_file, const std::string& n_file,
                 std::size_t max_i, bool as_json, std::ostream& out) {
  ModuleRep m = ws.module(m_file);
  ModuleRep n = ws.module(n_file);
  HomologyOptions opts;
  opts.max_degree = std::max<std::size_t>(opts.max_degree, max_i);
  Json table = Json::array();
  if (!as_json) out << "i\t" << (ext ? "dim Ext^i(M,N)" : "dim Tor_i(M,Y)") << "\n";
  for (std::size_t i = 0; i <= max_i; ++i) {
    const std::size_t dim = ext ? ext_space(m, n, i, opts).dim() : tor_space(m, n, i, opts).dim();
    if (as_json) table.push_back({{"i", i}, {"dim", dim}});
    else out << i << "\t" << dim << "\n";
  }
  if (as_json) out << table.dump(2) << "\n";
  return 0;
}

int cmd_ringinfo(Workspace& ws, std::size_t cutoff, std::ostream& out) {
  RingPtr ring = ws.primary();
  auto res = self_injective_dimension(ring, cutoff);
  auto show = [&](const char* side, const std::optional<std::size_t>& v, const std::vector<bool>& evidence) {
    out << side << " self-injective dimension: ";
    if (v) out << *v << "\n";
    else if (evidence.size() <= cutoff) out << "undetermined (size budget hit after " << evidence.size() << " steps)\n";
    else out << "> " << cutoff << "\n";
  };
  out << "algebra: " << ring->name() << " (dim " << ring->dim() << ", p = " << ring->field().p() << ")\n";
  show("right", res.right, res.right_evidence);
  show("left", res.left, res.left_evidence);
  try {
    auto cert = certify(ring, cutoff);
    out << "certificate: " << cert.n << "-Gorenstein\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoCertificate) throw;
    out << "refusal: " << e.what() << "\n";
  }
  return 0;
}

int cmd_gp_test(Workspace& ws, const std::string& m_file, std::size_t cutoff, std::ostream& out) {
  ModuleRep m = ws.module(m_file);
  GorensteinCertificate cert;
  try {
    cert = certify(m.ring(), cutoff);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoCertificate) throw;
    throw Error(ErrorKind::ConfigError, std::string("gp-test needs a certified algebra: ") + e.what());
  }
  DecisionReport r = gp_test(m, cert);
  line(out, "gorenstein projective", r);
  if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& theorems, const std::vector<std::string>& algebras,
               const TrialConfig& base, const std::string& out_file, std::ostream& out) {
  TrialConfig cfg = base;
  cfg.algebras = algebras;
  for (const auto& t : theorems)
    if (t != "all") cfg.theorems.push_back(t);
  for (const auto& t : cfg.theorems) default_algebras(t);  // rejects unknown ids early
  VerificationReport report = verify_all(cfg);
  for (const auto& r : report.results)
    out << r.theorem << " " << r.algebra << ": " << r.passes << "/" << r.trials << (r.pass() ? " pass" : " FAIL")
        << "\n";
  if (!out_file.empty()) write_output(out_file, report.to_json(), out);
  out << (report.pass() ? "all suites passed" : "verification failures found") << "\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"phantomkit: vanishing and exactness of induced maps on Ext and Tor"};
  app.require_subcommand(1);

  Common common_check, common_ext, common_tor, common_info, common_gp;
  std::string morphism_file, m_file, n_file, y_file, gp_file, out_file;
  std::size_t degree = 1, samples = 0, max_i = 4, cutoff = 6;
  std::uint64_t seed = 42;
  bool as_json = false;
  std::vector<std::string> theorems{"all"};
  std::vector<std::string> verify_algebras;
  TrialConfig tc;

  auto* check = app.add_subcommand("check", "classify a morphism");
  common_check.attach(check);
  check->add_option("morphism", morphism_file, "morphism JSON file")->required();
  check->add_option("--degree", degree, "degree i >= 1");
  check->add_option("--samples", samples, "random pool members for the sampled one-directional clause");
  check->add_option("--seed", seed, "pool seed");
  check->add_flag("--json", as_json, "JSON output");

  auto* ext = app.add_subcommand("ext", "dimensions of Ext^i(M, N)");
  common_ext.attach(ext);
  ext->add_option("M", m_file, "module file")->required();
  ext->add_option("N", n_file, "module file")->required();
  ext->add_option("--i", max_i, "largest degree");
  ext->add_flag("--json", as_json, "JSON output");

  auto* tor = app.add_subcommand("tor", "dimensions of Tor_i(M, Y)");
  common_tor.attach(tor);
  tor->add_option("M", m_file, "right module file")->required();
  tor->add_option("Y", y_file, "left module file")->required();
  tor->add_option("--i", max_i, "largest degree");
  tor->add_flag("--json", as_json, "JSON output");

  auto* info = app.add_subcommand("ringinfo", "self-injective dimensions and Gorenstein certificate");
  common_info.attach(info);
  info->add_option("--cutoff", cutoff, "largest dimension searched");

  auto* gp = app.add_subcommand("gp-test", "Gorenstein projectivity of a module");
  common_gp.attach(gp);
  gp->add_option("M", gp_file, "module file")->required();
  gp->add_option("--cutoff", cutoff, "largest dimension searched");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--theorem", theorems, "suite ids or 'all'");
  ver->add_option("--trials", tc.trials, "trials per algebra");
  ver->add_option("--seed", tc.seed, "seed");
  ver->add_option("--builtin", verify_algebras, "catalog algebras (default: per suite)");
  ver->add_option("--max-dim", tc.max_dim, "largest random module");
  ver->add_option("--min-degree", tc.min_degree, "smallest degree for degree-ranged suites");
  ver->add_option("--max-degree", tc.max_degree, "largest degree for degree-ranged suites");
  ver->add_option("--threads", tc.threads, "worker threads (default PHANTOMKIT_THREADS or all cores)");
  ver->add_flag("--time", tc.record_time, "record wall time in the report");
  ver->add_option("--out", out_file, "report file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Workspace ws;
    if (check->parsed()) {
      ws.load(common_check.ring_file, common_check.builtin);
      return cmd_check(ws, morphism_file, degree, samples, seed, as_json, out);
    }
    if (ext->parsed()) {
      ws.load(common_ext.ring_file, common_ext.builtin);
      return cmd_homology(ws, true, m_file, n_file, max_i, as_json, out);
    }
    if (tor->parsed()) {
      ws.load(common_tor.ring_file, common_tor.builtin);
      return cmd_homology(ws, false, m_file, y_file, max_i, as_json, out);
    }
    if (info->parsed()) {
      ws.load(common_info.ring_file, common_info.builtin);
      return cmd_ringinfo(ws, cutoff, out);
    }
    if (gp->parsed()) {
      ws.load(common_gp.ring_file, common_gp.builtin);
      return cmd_gp_test(ws, gp_file, cutoff, out);
    }
    if (ver->parsed()) return cmd_verify(theorems, verify_algebras, tc, out_file, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace phantomkit
