#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "phantomkit/error.hpp"
#include "phantomkit/hom.hpp"
#include "phantomkit/io.hpp"
#include "phantomkit/theoremlab.hpp"

namespace phantomkit {

namespace {

enum class Kind {
  Thm11,
  CorI1,
  CorCC,
  CorII1,
  PropProp,
  Thm12,
  Lem,
  Cor22,
  Cor222,
  CorGor,
  PropCo,
  CorCCC,
  CorCCCC,
  CorFinal,
  Duality,
  Structural,
  Hull,
};

struct SuiteInfo {
  const char* id;
  Kind kind;
  bool needs_cert;
  bool gp_inputs;
  const char* regime;
};

const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> table = {
      {"thm11", Kind::Thm11, false, false,
       "decider: lift along the free cover of N; sampled: Ext^1(f,X) on the right pool, Tor_1(f,Y) on the left pool"},
      {"cor_i1", Kind::CorI1, false, false,
       "decider: cover lift of the syzygy-shifted map; sampled: Ext^i(f,X), Tor_i(f,Y) on the pools"},
      {"cor_cc", Kind::CorCC, false, false,
       "decider: kernel construction; sampled: Ext^1(f,X) epic, Tor_1(f,Y) monic; Tor epic => Ext monic checked on the pools only"},
      {"cor_ii1", Kind::CorII1, false, false,
       "decider: kernel construction on the syzygy-shifted map; sampled: Ext^i(f,X) epic, Tor_i(f,Y) monic"},
      {"prop_prop", Kind::PropProp, true, true,
       "GP inputs; decider: factorization through a projective and through an injective; sampled: Ext^1(f,X), Ext^1(X,f) on the GP pool"},
      {"thm12", Kind::Thm12, true, true,
       "GP inputs; decider: GP vanishing; sampled: Tor_1(f,Y) on left GP modules, Ext^1(f,X), Ext^1(X,f) on right GP modules"},
      {"lem", Kind::Lem, true, true, "GP inputs; construction postconditions: exactness, projective middle term, gp_test of the cokernel"},
      {"cor_22", Kind::Cor22, true, true,
       "GP inputs; decider: cokernel construction; sampled: Ext^1(X,f) epic, Ext^1(f,X) monic, Tor_1(f,Y) epic"},
      {"cor_222", Kind::Cor222, true, true,
       "GP inputs; decider: kernel construction; sampled: Ext^1(X,f) monic, Ext^1(f,X) epic, Tor_1(f,Y) monic"},
      {"cor_gor", Kind::CorGor, true, true, "GP inputs; decider: conjunction of both constructions; sampled: all six flags"},
      {"prop_co", Kind::PropCo, true, false,
       "degrees n+1, n+2; decider: syzygy shift over a certified algebra; sampled: Ext^i(f,X), Ext^i(X,f), Tor_i(f,Y)"},
      {"cor_ccc", Kind::CorCCC, true, false,
       "degrees n+1, n+2; decider: hull construction; sampled: Ext^i(X,f) epic, Ext^i(f,X) monic, Tor_i(f,Y) epic"},
      {"cor_cccc", Kind::CorCCCC, true, false,
       "degrees n+1, n+2; decider: kernel construction; sampled: Ext^i(X,f) monic, Ext^i(f,X) epic, Tor_i(f,Y) monic"},
      {"cor_final", Kind::CorFinal, true, false, "degrees n+1, n+2; decider: conjunction; sampled: all six flags"},
      {"duality", Kind::Duality, false, false, "dim Ext^i(M,X) = dim Tor_i(M,DX) and rank Ext^i(f,X) = rank Tor_i(f,DX), i <= 3"},
      {"structural", Kind::Structural, false, false,
       "Ext^0 = Hom, Tor_0 = tensor, d d = 0, dims and ranks unchanged under a shuffled generator scan"},
      {"hull", Kind::Hull, true, false, "finite_pd_hull postconditions rechecked independently"},
  };
  return table;
}

const SuiteInfo& suite_info(const std::string& id) {
  for (const auto& s : suite_table())
    if (id == s.id) return s;
  throw Error(ErrorKind::BadParams, "unknown theorem id \"" + id + "\"");
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

struct Context {
  std::string spec;
  RingPtr ring;
  Pool pool;
  std::optional<GorensteinCertificate> cert;
  Pool gp;
  ResolutionCache cache;

  HomologyOptions opts() {
    HomologyOptions o;
    o.cache = &cache;
    return o;
  }
};

std::unique_ptr<Context> make_context(const SuiteInfo& s, const std::string& spec, const TrialConfig& cfg) {
  auto ctx = std::make_unique<Context>();
  ctx->spec = spec;
  ctx->ring = Ring::make(catalog_algebra(spec));
  if (s.needs_cert) {
    try {
      ctx->cert = certify(ctx->ring);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoCertificate) throw;
      throw Error(ErrorKind::ConfigError,
                  std::string("suite ") + s.id + " needs a Gorenstein certificate; " + spec + ": " + e.what());
    }
  }
  PoolOptions po;
  po.seed = cfg.seed;
  po.random_count = cfg.pool_random;
  po.random_max_dim = cfg.pool_max_dim;
  ctx->pool = standard_pool(ctx->ring, po);
  if (s.gp_inputs) ctx->gp = gp_pool(ctx->pool, *ctx->cert);
  return ctx;
}

using Entries = std::vector<PoolEntry>;

struct Sweep {
  std::size_t evaluated = 0, nonzero = 0, not_monic = 0, not_epic = 0;
  std::string first_nonzero, first_not_monic, first_not_epic;

  void record(const std::string& label, const InducedMap& m) {
    ++evaluated;
    if (!m.is_zero() && nonzero++ == 0) first_nonzero = label;
    if (!m.is_monic() && not_monic++ == 0) first_not_monic = label;
    if (!m.is_epic() && not_epic++ == 0) first_not_epic = label;
  }
  bool zero() const { return nonzero == 0; }
  bool monic() const { return not_monic == 0; }
  bool epic() const { return not_epic == 0; }

  Json to_json() const {
    Json j;
    j["evaluated"] = evaluated;
    j["nonzero"] = nonzero;
    j["not_monic"] = not_monic;
    j["not_epic"] = not_epic;
    if (!zero()) j["first_nonzero"] = first_nonzero;
    if (!monic()) j["first_not_monic"] = first_not_monic;
    if (!epic()) j["first_not_epic"] = first_not_epic;
    return j;
  }
};

Sweep sweep_contra(const ChainMap& lift, const Entries& xs, std::size_t i) {
  Sweep s;
  for (const auto& x : xs) s.record(x.label, ext_map_contra(lift, x.module, i));
  return s;
}

Sweep sweep_tor(const ChainMap& lift, const Entries& ys, std::size_t i) {
  Sweep s;
  for (const auto& y : ys) s.record(y.label, tor_map(lift, y.module, i));
  return s;
}

Sweep sweep_cov(const ModuleMorphism& f, const Entries& xs, std::size_t i, Context& ctx) {
  Sweep s;
  for (const auto& x : xs) s.record(x.label, ext_map_cov(resolution_of(x.module, i + 1, {}, &ctx.cache), f, i));
  return s;
}

struct TrialResult {
  std::vector<std::string> problems;
  Json instance = Json::object();
  Json decider = Json::object();
  Json sampled = Json::object();
  std::map<std::string, std::size_t> counters;
};

// Verdict against one sampled flag. "decider true, pool refutes" is always a
// failure. "decider false, pool agrees" is a failure only when `strict`, i.e.
// when the pool holds the test module on which the theory says f must fail.
void compare(TrialResult& out, const std::string& what, bool verdict, bool sampled, bool strict) {
  if (verdict && !sampled) {
    out.problems.push_back(what + ": decider true, pool counterexample");
  } else if (!verdict && sampled) {
    if (strict) out.problems.push_back(what + ": decider false, no failure on the pool");
    else ++out.counters["false_unseen_by_pool"];
  }
}

void check_report(TrialResult& out, const std::string& what, const ModuleMorphism& f, const DecisionReport& r,
                  const HomologyOptions& opts) {
  if (r.verdict) {
    if (r.factorization && !factorization_recomposes(f, *r.factorization))
      out.problems.push_back(what + ": factorization does not recompose");
    return;
  }
  if (r.witnesses.empty()) out.problems.push_back(what + ": false verdict without a witness");
  for (const auto& w : r.witnesses)
    if (!witness_holds(f, w, opts))
      out.problems.push_back(what + ": witness " + std::string(to_string(w.functor)) + " does not reproduce");
}

void count_verdict(TrialResult& out, bool verdict) { ++out.counters[verdict ? "verdict_true" : "verdict_false"]; }

Entries with_extras(const Entries& base, const Entries& extras) {
  Entries out = base;
  for (const auto& e : extras)
    if (e.module.dim() > 0) out.push_back(e);
  return out;
}

Entries duals_of(const Entries& xs) {
  Entries out;
  for (const auto& x : xs)
    if (x.module.dim() > 0) out.push_back({"D(" + x.label + ")", dual_module(x.module)});
  return out;
}

ModuleRep cosyzygy(const ModuleRep& m) { return gp_cosyzygy(m).cokernel.module; }

std::vector<std::size_t> degree_range(const TrialConfig& cfg) {
  std::vector<std::size_t> out;
  for (std::size_t i = std::max<std::size_t>(1, cfg.min_degree); i <= cfg.max_degree; ++i) out.push_back(i);
  return out;
}

std::string deg_key(std::size_t i) { return "i=" + std::to_string(i); }

class TrialRunner {
 public:
  TrialRunner(const SuiteInfo& s, Context& ctx, const TrialConfig& cfg) : s_(s), ctx_(ctx), cfg_(cfg) {}

  TrialResult run(std::size_t trial) {
    TrialResult out;
    Rng rng = derived_rng(cfg_.seed ^ fnv1a(std::string(s_.id) + "/" + ctx_.spec), trial);
    switch (s_.kind) {
      case Kind::Duality: duality(out, rng); return out;
      case Kind::Structural: structural(out, rng); return out;
      case Kind::Hull: hull(out, rng); return out;
      default: break;
    }
    ModuleMorphism f = draw_morphism(rng);
    out.instance = morphism_to_json(f);
    switch (s_.kind) {
      case Kind::Thm11: vanishing(out, f, {1}); break;
      case Kind::CorI1: vanishing(out, f, degree_range(cfg_)); break;
      case Kind::CorCC: epic(out, f, {1}); break;
      case Kind::CorII1: epic(out, f, degree_range(cfg_)); break;
      case Kind::PropProp: prop(out, f); break;
      case Kind::Thm12: gp_trio(out, f, Trio::Vanishing); break;
      case Kind::Lem: lem(out, f); break;
      case Kind::Cor22: gp_trio(out, f, Trio::TorEpic); break;
      case Kind::Cor222: gp_trio(out, f, Trio::TorMonic); break;
      case Kind::CorGor: gp_trio(out, f, Trio::Equivalence); break;
      case Kind::PropCo: high(out, f, Trio::Vanishing); break;
      case Kind::CorCCC: high(out, f, Trio::TorEpic); break;
      case Kind::CorCCCC: high(out, f, Trio::TorMonic); break;
      case Kind::CorFinal: high(out, f, Trio::Equivalence); break;
      default: break;
    }
    return out;
  }

 private:
  // Half of the modules come from the pool, so that non-free modules with
  // nonzero homology show up often.
  ModuleRep draw_module(Rng& rng) {
    const Entries& from = s_.gp_inputs ? ctx_.gp.right : ctx_.pool.right;
    if (!from.empty() && draw_below(rng, 2) == 0) return from[draw_below(rng, from.size())].module;
    if (s_.gp_inputs) return gen_gp_module(*ctx_.cert, cfg_.max_dim, rng);
    return gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
  }

  ModuleMorphism draw_morphism(Rng& rng) {
    ModuleRep m = draw_module(rng);
    ModuleRep n = draw_below(rng, 4) == 0 ? m : draw_module(rng);
    ModuleMorphism f = gen_random_morphism(m, n, rng);
    if (f.is_zero()) f = gen_random_morphism(m, n, rng);
    return f;
  }

  // Test modules on which a negative verdict must show: Omega^i of source
  // and target, plus D of them on the other side.
  void syzygy_extras(const ModuleMorphism& f, std::size_t i, Entries& xs, Entries& ys) {
    Entries extra = {{"trial:Omega" + std::to_string(i) + "(M)", syzygy(f.source(), i)},
                     {"trial:Omega" + std::to_string(i) + "(N)", syzygy(f.target(), i)}};
    xs = with_extras(ctx_.pool.right, extra);
    ys = with_extras(ctx_.pool.left, duals_of(extra));
  }

  void vanishing(TrialResult& out, const ModuleMorphism& f, const std::vector<std::size_t>& degrees) {
    auto opts = ctx_.opts();
    for (std::size_t i : degrees) {
      Entries xs, ys;
      syzygy_extras(f, i, xs, ys);
      ChainMap lift = lift_for_degree(f, i, opts);
      Sweep e = sweep_contra(lift, xs, i);
      Sweep t = sweep_tor(lift, ys, i);
      DecisionReport r = i == 1 ? factors_through_projective(f) : classify_morphism(f, i).projective_morphism;
      const std::string d = "[" + deg_key(i) + "] ";
      compare(out, d + "Ext^i(f,-) = 0", r.verdict, e.zero(), true);
      compare(out, d + "Tor_i(f,-) = 0", r.verdict, t.zero(), true);
      if (e.zero() != t.zero()) out.problems.push_back(d + "Ext and Tor zero flags differ on dual pool members");
      check_report(out, d + "decider", f, r, opts);
      count_verdict(out, r.verdict);
      out.decider[deg_key(i)] = report_to_json(r);
      out.sampled[deg_key(i)] = {{"ext", e.to_json()}, {"tor", t.to_json()}};
    }
  }

  void epic(TrialResult& out, const ModuleMorphism& f, const std::vector<std::size_t>& degrees) {
    auto opts = ctx_.opts();
    for (std::size_t i : degrees) {
      Entries xs, ys;
      syzygy_extras(f, i, xs, ys);
      ChainMap lift = lift_for_degree(f, i, opts);
      Sweep e = sweep_contra(lift, xs, i);
      Sweep t = sweep_tor(lift, ys, i);
      DecisionReport r = decide_epic_contra(f, i);
      const std::string d = "[" + deg_key(i) + "] ";
      compare(out, d + "Ext^i(f,-) epic", r.verdict, e.epic(), true);
      compare(out, d + "Tor_i(f,-) monic", r.verdict, t.monic(), true);
      check_report(out, d + "decider", f, r, opts);
      if (t.epic() && !e.monic()) out.problems.push_back(d + "Tor_i(f,-) epic on the pool but Ext^i(f,-) not monic");
      if (t.epic()) ++out.counters["tor_epic_on_pool"];
      if (e.monic() && !t.epic()) ++out.counters["converse_candidate"];
      count_verdict(out, r.verdict);
      out.decider[deg_key(i)] = report_to_json(r);
      out.sampled[deg_key(i)] = {{"ext", e.to_json()}, {"tor", t.to_json()}};
    }
  }

  // GP test modules: syzygies and cosyzygies of source and target.
  void gp_extras(const ModuleMorphism& f, Entries& xs, Entries& ys) {
    Entries extra = {{"trial:Omega1(M)", syzygy(f.source(), 1)},
                     {"trial:Omega1(N)", syzygy(f.target(), 1)},
                     {"trial:Omega-1(M)", cosyzygy(f.source())},
                     {"trial:Omega-1(N)", cosyzygy(f.target())}};
    xs = with_extras(ctx_.gp.right, extra);
    // D(GP) is GP on the other side only over self-injective algebras.
    ys = ctx_.cert->n == 0 ? with_extras(ctx_.gp.left, duals_of(extra)) : ctx_.gp.left;
  }

  void prop(TrialResult& out, const ModuleMorphism& f) {
    auto opts = ctx_.opts();
    Entries xs, ys;
    gp_extras(f, xs, ys);
    ChainMap lift = lift_for_degree(f, 1, opts);
    Sweep e = sweep_contra(lift, xs, 1);
    Sweep c = sweep_cov(f, xs, 1, ctx_);
    DecisionReport p = factors_through_projective(f);
    compare(out, "Ext^1(f,-) = 0 on GP", p.verdict, e.zero(), true);
    compare(out, "Ext^1(-,f) = 0 on GP", p.verdict, c.zero(), true);
    check_report(out, "projective factorization", f, p, opts);
    out.decider["projective"] = report_to_json(p);
    if (ctx_.cert->n == 0) {
      DecisionReport q = factors_through_injective(f);
      if (q.verdict != p.verdict) out.problems.push_back("projective and injective factorization verdicts differ");
      check_report(out, "injective factorization", f, q, opts);
      out.decider["injective"] = report_to_json(q);
    }
    if (e.zero() && c.zero() && p.verdict && f.source().dim() * f.target().dim() > 0) {
      bool all_vanish = true;
      for (const auto& x : xs) all_vanish = all_vanish && ext_space(f.target(), x.module, 1, opts).dim() == 0;
      if (all_vanish) ++out.counters["vacuous"];
    }
    count_verdict(out, p.verdict);
    out.sampled = {{"ext_contra", e.to_json()}, {"ext_cov", c.to_json()}};
  }

  // Sampled flags for a trio question, from the three sweeps.
  struct Flags {
    std::vector<std::pair<std::string, bool>> items;
  };

  static Flags trio_flags(Trio trio, const Sweep& cov, const Sweep& contra, const Sweep& tor) {
    Flags fl;
    auto add = [&](const char* name, bool v) { fl.items.emplace_back(name, v); };
    switch (trio) {
      case Trio::Vanishing:
        add("Ext(-,f) = 0", cov.zero());
        add("Ext(f,-) = 0", contra.zero());
        add("Tor(f,-) = 0", tor.zero());
        break;
      case Trio::TorEpic:
        add("Ext(-,f) epic", cov.epic());
        add("Ext(f,-) monic", contra.monic());
        add("Tor(f,-) epic", tor.epic());
        break;
      case Trio::TorMonic:
        add("Ext(-,f) monic", cov.monic());
        add("Ext(f,-) epic", contra.epic());
        add("Tor(f,-) monic", tor.monic());
        break;
      case Trio::Equivalence:
        add("Ext(-,f) iso", cov.monic() && cov.epic());
        add("Ext(f,-) iso", contra.monic() && contra.epic());
        add("Tor(f,-) iso", tor.monic() && tor.epic());
        break;
    }
    return fl;
  }

  void gp_trio(TrialResult& out, const ModuleMorphism& f, Trio trio) {
    auto opts = ctx_.opts();
    Entries xs, ys;
    gp_extras(f, xs, ys);
    ChainMap lift = lift_for_degree(f, 1, opts);
    Sweep e = sweep_contra(lift, xs, 1);
    Sweep c = sweep_cov(f, xs, 1, ctx_);
    Sweep t = sweep_tor(lift, ys, 1);
    DecisionReport r = decide_gp_trio(f, trio, *ctx_.cert);
    Flags fl = trio_flags(trio, c, e, t);
    for (const auto& [name, value] : fl.items) {
      // Vanishing is strict: Omega N and the cosyzygy of M are in the pool.
      bool strict = trio == Trio::Vanishing && (name.rfind("Tor", 0) != 0 || ctx_.cert->n == 0);
      compare(out, name, r.verdict, value, strict);
    }
    check_report(out, "decider", f, r, opts);
    count_verdict(out, r.verdict);
    out.decider = report_to_json(r);
    out.sampled = {{"ext_cov", c.to_json()}, {"ext_contra", e.to_json()}, {"tor", t.to_json()}};
  }

  void lem(TrialResult& out, const ModuleMorphism& f) {
    CokernelConstruction cc = cokernel_construction(f, *ctx_.cert);
    const ModuleRep& c = cc.cokernel.module;
    if (!cc.exact) out.problems.push_back("construction reports a non-exact sequence");
    if (!is_injective_map(cc.combined)) out.problems.push_back("[f u] is not injective");
    if (!is_surjective_map(cc.cokernel.projection)) out.problems.push_back("N + P -> C is not surjective");
    if (!compose(cc.cokernel.projection, cc.combined).is_zero()) out.problems.push_back("composite is nonzero");
    if (f.source().dim() + c.dim() != cc.sum.module.dim()) out.problems.push_back("dimensions do not add up");
    if (!is_projective(cc.mono.target())) out.problems.push_back("middle summand is not projective");
    DecisionReport g = gp_test(c, *ctx_.cert);
    if (!g.verdict) out.problems.push_back("cokernel fails gp_test");
    ++out.counters[cc.route == MonoRoute::GpCosyzygy ? "route_gp_cosyzygy" : "route_envelope"];
    out.decider = {{"cokernel_dim", c.dim()}, {"exact", cc.exact}, {"gp", report_to_json(g)}};
  }

  void high(TrialResult& out, const ModuleMorphism& f, Trio trio) {
    auto opts = ctx_.opts();
    const std::size_t n = ctx_.cert->n;
    for (std::size_t i = n + 1; i <= n + 2; ++i) {
      Entries xs, ys;
      syzygy_extras(f, i, xs, ys);
      ChainMap lift = lift_for_degree(f, i, opts);
      Sweep e = sweep_contra(lift, xs, i);
      Sweep c = sweep_cov(f, xs, i, ctx_);
      Sweep t = sweep_tor(lift, ys, i);
      HighDegreeBundle b = decide_gorenstein_high_degree(f, i, *ctx_.cert);
      const DecisionReport& r = trio == Trio::Vanishing  ? b.vanishing
                                : trio == Trio::TorEpic  ? b.tor_epic
                                : trio == Trio::TorMonic ? b.tor_monic
                                                         : b.equivalence;
      Flags fl = trio_flags(trio, c, e, t);
      const std::string d = "[" + deg_key(i) + "] ";
      for (const auto& [name, value] : fl.items) {
        // Omega^i N (vanishing) and Omega^i M (Ext epic / Tor monic) are pool members.
        bool strict = name.rfind("Ext(-,f)", 0) != 0 && (trio == Trio::Vanishing || trio == Trio::TorMonic);
        compare(out, d + name, r.verdict, value, strict);
      }
      check_report(out, d + "decider", f, r, opts);
      count_verdict(out, r.verdict);
      if (!e.zero() || !c.zero() || !t.zero()) ++out.counters["nonzero_functor_instance"];
      out.decider[deg_key(i)] = report_to_json(r);
      out.sampled[deg_key(i)] = {{"ext_cov", c.to_json()}, {"ext_contra", e.to_json()}, {"tor", t.to_json()}};
    }
    ChainMap lift1 = lift_for_degree(f, 1, opts);
    if (!sweep_contra(lift1, ctx_.pool.right, 1).zero()) ++out.counters["nonzero_degree1"];
  }

  void duality(TrialResult& out, Rng& rng) {
    auto opts = ctx_.opts();
    ModuleRep m = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleRep x = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleRep n = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleMorphism f = gen_random_morphism(m, n, rng);
    ModuleRep dx = dual_module(x);
    out.instance = {{"f", morphism_to_json(f)}, {"X", module_to_json(x)}};
    ChainMap lift = lift_for_degree(f, 3, opts);
    for (std::size_t i = 0; i <= 3; ++i) {
      const std::size_t ext = ext_space(m, x, i, opts).dim();
      const std::size_t tor = tor_space(m, dx, i, opts).dim();
      InducedMap em = ext_map_contra(lift, x, i);
      InducedMap tm = tor_map(lift, dx, i);
      const std::string d = "[" + deg_key(i) + "] ";
      if (ext != tor) out.problems.push_back(d + "dim Ext^i(M,X) != dim Tor_i(M,DX)");
      if (em.is_zero() != tm.is_zero()) out.problems.push_back(d + "zero flags of Ext^i(f,X), Tor_i(f,DX) differ");
      if (em.rank != tm.rank) out.problems.push_back(d + "ranks of Ext^i(f,X), Tor_i(f,DX) differ");
      if (ext > 0) ++out.counters["nonzero_ext"];
      if (!em.is_zero()) ++out.counters["nonzero_map"];
      out.sampled[deg_key(i)] = {{"ext_dim", ext}, {"tor_dim", tor}, {"ext_rank", em.rank}, {"tor_rank", tm.rank}};
    }
  }

  void structural(TrialResult& out, Rng& rng) {
    auto natural = ctx_.opts();
    auto shuffled = ctx_.opts();
    shuffled.order = ScanOrder::shuffled(rng());
    ModuleRep m = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleRep n = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleRep x = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    ModuleRep y = gen_random_module(ctx_.ring, Side::Left, cfg_.max_dim, rng);
    ModuleMorphism f = gen_random_morphism(m, n, rng);
    out.instance = {{"f", morphism_to_json(f)}, {"X", module_to_json(x)}, {"Y", module_to_json(y)},
                    {"shuffle_seed", shuffled.order.seed}};

    if (ext_space(m, n, 0, natural).dim() != hom_space(m, n).dim()) out.problems.push_back("Ext^0 != Hom");
    if (tor_space(m, y, 0, natural).dim() != tensor_over_A(m, y).dim) out.problems.push_back("Tor_0 != tensor");
    for (const auto* o : {&natural, &shuffled}) {
      auto check = check_resolution(*resolution_of(m, 3, o->order, &ctx_.cache));
      if (!check.composites_vanish) out.problems.push_back("d d != 0");
      if (!check.exact) out.problems.push_back("resolution not exact");
    }
    ChainMap lift_a = lift_for_degree(f, 2, natural);
    ChainMap lift_b = lift_for_degree(f, 2, shuffled);
    for (std::size_t i = 0; i <= 2; ++i) {
      const std::string d = "[" + deg_key(i) + "] ";
      if (ext_space(m, n, i, natural).dim() != ext_space(m, n, i, shuffled).dim())
        out.problems.push_back(d + "dim Ext^i depends on the scan order");
      if (tor_space(m, y, i, natural).dim() != tor_space(m, y, i, shuffled).dim())
        out.problems.push_back(d + "dim Tor_i depends on the scan order");
      if (ext_map_contra(lift_a, x, i).rank != ext_map_contra(lift_b, x, i).rank)
        out.problems.push_back(d + "rank Ext^i(f,X) depends on the scan order");
      if (tor_map(lift_a, y, i).rank != tor_map(lift_b, y, i).rank)
        out.problems.push_back(d + "rank Tor_i(f,Y) depends on the scan order");
      if (ext_map_cov(x, f, i, natural).rank != ext_map_cov(x, f, i, shuffled).rank)
        out.problems.push_back(d + "rank Ext^i(X,f) depends on the scan order");
    }
    ++out.counters["instances"];
  }

  void hull(TrialResult& out, Rng& rng) {
    const auto& cert = *ctx_.cert;
    ModuleRep m = gen_random_module(ctx_.ring, Side::Right, cfg_.max_dim, rng);
    out.instance = {{"M", module_to_json(m)}};
    try {
      Hull h = finite_pd_hull(m, cert);
      const ModuleRep& big = h.embedding.target();
      const ModuleRep& g = h.quotient.module;
      if (!is_injective_map(h.embedding)) out.problems.push_back("M -> H is not injective");
      if (!is_surjective_map(h.quotient.projection)) out.problems.push_back("H -> G is not surjective");
      if (!compose(h.quotient.projection, h.embedding).is_zero()) out.problems.push_back("composite is nonzero");
      if (m.dim() + g.dim() != big.dim()) out.problems.push_back("sequence is not exact in the middle");
      if (!is_projective(syzygy(big, cert.n))) out.problems.push_back("pd H exceeds n");
      if (!gp_test(g, cert).verdict) out.problems.push_back("G fails gp_test");
      out.decider = {{"hull_dim", big.dim()}, {"gp_dim", g.dim()}};
      if (g.dim() > 0) ++out.counters["nonzero_gp_part"];
    } catch (const Error& e) {
      out.problems.push_back(std::string("hull construction failed: ") + e.what());
    }
  }

  const SuiteInfo& s_;
  Context& ctx_;
  const TrialConfig& cfg_;
};

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body) {
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : threads) t.join();
}

TrialResult guarded_trial(TrialRunner& runner, std::size_t trial) {
  try {
    return runner.run(trial);
  } catch (const std::exception& e) {
    TrialResult r;
    r.problems.push_back(std::string("exception: ") + e.what());
    return r;
  }
}

TrialFailure to_failure(const TrialResult& r, std::size_t trial, const std::string& algebra) {
  TrialFailure f;
  f.trial = trial;
  f.algebra = algebra;
  for (std::size_t k = 0; k < r.problems.size(); ++k) f.what += (k ? "; " : "") + r.problems[k];
  f.instance = r.instance.dump();
  f.decider = r.decider.dump();
  f.sampled = r.sampled.dump();
  return f;
}

bool has_nonprojective(const Pool& pool) {
  for (const auto& e : pool.right)
    if (!is_projective(e.module)) return true;
  return false;
}

SuiteResult run_suite(const SuiteInfo& s, const std::string& spec, const TrialConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto ctx = make_context(s, spec, cfg);
  TrialRunner runner(s, *ctx, cfg);
  std::vector<TrialResult> results(cfg.trials);
  parallel_for(cfg.trials, worker_count(cfg), [&](std::size_t t) { results[t] = guarded_trial(runner, t); });

  SuiteResult out;
  out.theorem = s.id;
  out.algebra = spec;
  out.regime = s.regime;
  out.trials = cfg.trials;
  for (std::size_t t = 0; t < results.size(); ++t) {
    for (const auto& [k, v] : results[t].counters) out.counters[k] += v;
    if (results[t].problems.empty()) ++out.passes;
    else out.failures.push_back(to_failure(results[t], t, spec));
  }

  // Every resolution the sampled side built must be a complex and exact.
  std::size_t checked = 0;
  for (const auto& res : ctx->cache.snapshot()) {
    auto c = check_resolution(*res);
    ++checked;
    if (!c.composites_vanish || !c.exact) {
      TrialFailure f;
      f.trial = cfg.trials;
      f.algebra = spec;
      f.what = "cached resolution failed check_resolution";
      f.instance = module_to_json(res->module()).dump();
      out.failures.push_back(f);
    }
  }
  out.counters["resolutions_checked"] = checked;

  const bool high = s.kind == Kind::PropCo || s.kind == Kind::CorCCC || s.kind == Kind::CorCCCC ||
                    s.kind == Kind::CorFinal;
  if (high && cfg.trials > 0 && out.counters["nonzero_degree1"] == 0 && has_nonprojective(ctx->pool)) {
    TrialFailure f;
    f.trial = cfg.trials;
    f.algebra = spec;
    f.what = "no trial produced a nonzero Ext^1(f,X) on the pool; the run is vacuous";
    out.failures.push_back(f);
  }

  for (const auto* list : {&ctx->pool.right, &ctx->pool.left})
    for (const auto& e : *list)
      out.pool.push_back(std::string(to_string(e.module.side())) + ":" + e.label + ":" + std::to_string(e.module.dim()));
  if (s.gp_inputs) {
    out.counters["gp_pool_right"] = ctx->gp.right.size();
    out.counters["gp_pool_left"] = ctx->gp.left.size();
  }
  if (ctx->cert) out.counters["certified_n"] = ctx->cert->n;
  if (cfg.record_time)
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Json failure_json(const TrialFailure& f) {
  Json j;
  j["trial"] = f.trial;
  j["algebra"] = f.algebra;
  j["what"] = f.what;
  j["instance"] = f.instance.empty() ? Json(nullptr) : Json::parse(f.instance);
  j["decider"] = f.decider.empty() ? Json(nullptr) : Json::parse(f.decider);
  j["sampled"] = f.sampled.empty() ? Json(nullptr) : Json::parse(f.sampled);
  return j;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : suite_table()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

std::vector<std::string> default_algebras(const std::string& theorem_id) {
  const SuiteInfo& s = suite_info(theorem_id);
  if (s.kind == Kind::Hull) return {"triangular_2", "nakayama:2,2,1@p=2"};
  if (s.gp_inputs) return {"truncated_poly:2@p=2", "truncated_poly:3@p=3"};
  if (s.needs_cert) return {"triangular_2", "truncated_poly:2@p=2"};
  return {"field@p=2",     "truncated_poly:2@p=2", "truncated_poly:3@p=3",
          "group_C2@p=2", "triangular_2",         "nakayama:2,2,1@p=2"};
}

std::size_t worker_count(const TrialConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* env = std::getenv("PHANTOMKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool VerificationReport::pass() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.pass(); });
}

std::string VerificationReport::to_json(int indent) const {
  Json cfg;
  cfg["seed"] = config.seed;
  cfg["trials"] = config.trials;
  cfg["algebras"] = config.algebras;
  cfg["max_dim"] = config.max_dim;
  cfg["pool_random"] = config.pool_random;
  cfg["pool_max_dim"] = config.pool_max_dim;
  cfg["min_degree"] = config.min_degree;
  cfg["max_degree"] = config.max_degree;
  cfg["theorems"] = config.theorems;

  Json results_j = Json::array();
  for (const auto& r : results) {
    Json j;
    j["theorem"] = r.theorem;
    j["algebra"] = r.algebra;
    j["regime"] = r.regime;
    j["trials"] = r.trials;
    j["passes"] = r.passes;
    j["pass"] = r.pass();
    j["counters"] = r.counters;
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back(failure_json(f));
    j["failures"] = std::move(fails);
    j["pool"] = r.pool;
    if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
    results_j.push_back(std::move(j));
  }
  Json root;
  root["config"] = std::move(cfg);
  root["pass"] = pass();
  root["results"] = std::move(results_j);
  return root.dump(indent);
}

VerificationReport verify(const std::string& theorem_id, const TrialConfig& config) {
  const SuiteInfo& s = suite_info(theorem_id);
  VerificationReport report;
  report.config = config;
  const auto algebras = config.algebras.empty() ? default_algebras(theorem_id) : config.algebras;
  for (const auto& spec : algebras) report.results.push_back(run_suite(s, spec, config));
  return report;
}

VerificationReport verify_all(const TrialConfig& config) {
  VerificationReport report;
  report.config = config;
  const auto& ids = config.theorems.empty() ? theorem_ids() : config.theorems;
  for (const auto& id : ids) {
    auto part = verify(id, config);
    for (auto& r : part.results) report.results.push_back(std::move(r));
  }
  return report;
}

std::optional<TrialFailure> replay(const std::string& theorem_id, const std::string& algebra, std::size_t trial,
                                   const TrialConfig& config) {
  const SuiteInfo& s = suite_info(theorem_id);
  auto ctx = make_context(s, algebra, config);
  TrialRunner runner(s, *ctx, config);
  TrialResult r = guarded_trial(runner, trial);
  if (r.problems.empty()) return std::nullopt;
  return to_failure(r, trial, algebra);
}

}  // namespace phantomkit
