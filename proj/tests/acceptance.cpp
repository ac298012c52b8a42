// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "phantomkit/phantomkit.hpp"

using namespace phantomkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kThm11Algebras = {"field@p=2",    "truncated_poly:2@p=2", "truncated_poly:3@p=3",
                                                 "group_C2@p=2", "triangular_2",         "nakayama:2,2,1@p=2"};

TrialConfig config(std::size_t trials, std::vector<std::string> algebras = {}) {
  TrialConfig c;
  c.seed = 42;
  c.trials = trials;
  c.algebras = std::move(algebras);
  return c;
}

// Folds a report into the outcome: every suite passes and runs every trial.
void require_suites(Outcome& o, const VerificationReport& rep) {
  for (const auto& r : rep.results) {
    if (r.pass() && r.passes == r.trials) continue;
    o.ok = false;
    std::ostringstream s;
    s << r.theorem << " on " << r.algebra << ": " << r.passes << "/" << r.trials;
    if (!r.failures.empty()) s << " first failure: " << r.failures.front().what;
    o.detail += (o.detail.empty() ? "" : "; ") + s.str();
  }
}

std::size_t total_trials(const VerificationReport& rep) {
  std::size_t n = 0;
  for (const auto& r : rep.results) n += r.passes;
  return n;
}

Outcome golden() {
  auto r = Ring::make(catalog_algebra("truncated_poly:2@p=2"));
  ModuleRep k(r, Side::Right, {Mat::identity(r->field(), 1), Mat(r->field(), 1, 1)});
  ModuleRep kl(r, Side::Left, {Mat::identity(r->field(), 1), Mat(r->field(), 1, 1)});
  Outcome o;
  std::ostringstream s;
  for (std::size_t i = 0; i <= 4; ++i) {
    const std::size_t e = ext_space(k, k, i).dim(), t = tor_space(k, kl, i).dim();
    s << (i ? " " : "") << e << "/" << t;
    o.ok = o.ok && e == 1 && t == 1;
  }
  o.detail = "dim Ext^i/Tor_i(k,k), i=0..4: " + s.str();
  return o;
}

Outcome thm11() {
  Outcome o;
  auto rep = verify("thm11", config(100, kThm11Algebras));
  require_suites(o, rep);
  if (rep.results.size() != kThm11Algebras.size()) o.ok = false;
  if (o.ok) o.detail = std::to_string(total_trials(rep)) + " trials agree on " + std::to_string(rep.results.size()) +
                       " algebras";
  return o;
}

Outcome duality() {
  Outcome o;
  auto rep = verify("duality", config(200));
  require_suites(o, rep);
  if (o.ok) o.detail = std::to_string(total_trials(rep)) + " triples, degrees 0..3";
  return o;
}

Outcome epic_monic() {
  Outcome o;
  TrialConfig c = config(100);
  c.min_degree = 1;
  c.max_degree = 2;
  c.theorems = {"cor_cc", "cor_ii1"};
  auto rep = verify_all(c);
  require_suites(o, rep);
  std::size_t tor_epic = 0;
  for (const auto& r : rep.results)
    if (auto it = r.counters.find("tor_epic_on_pool"); it != r.counters.end()) tor_epic += it->second;
  if (o.ok) o.detail = std::to_string(total_trials(rep)) + " trials, one-directional clause checked on " +
                       std::to_string(tor_epic) + " Tor-epic trials";
  return o;
}

Outcome gp_suites() {
  Outcome o;
  TrialConfig c = config(100, {"truncated_poly:2@p=2", "truncated_poly:3@p=3"});
  c.theorems = {"thm12", "lem", "cor_22", "cor_222", "cor_gor"};
  auto rep = verify_all(c);
  require_suites(o, rep);
  if (o.ok) o.detail = std::to_string(rep.results.size()) + " suite runs, " + std::to_string(total_trials(rep)) +
                       " trials";
  return o;
}

Outcome n_gorenstein() {
  Outcome o;
  auto ring = Ring::make(catalog_algebra("triangular_2"));
  auto sid = self_injective_dimension(ring, 6);
  if (!sid.certificate || sid.certificate->n != 1) {
    o.ok = false;
    o.detail = "triangular_2 not certified at n = 1";
    return o;
  }
  TrialConfig c = config(100, {"triangular_2"});
  c.theorems = {"prop_co", "cor_ccc", "cor_cccc", "cor_final"};
  auto rep = verify_all(c);
  require_suites(o, rep);
  std::size_t least = SIZE_MAX;
  for (const auto& r : rep.results) {
    auto it = r.counters.find("nonzero_degree1");
    least = std::min<std::size_t>(least, it == r.counters.end() ? 0 : it->second);
  }
  if (least == 0 || least == SIZE_MAX) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("no nonzero degree-1 instance");
  }
  if (o.ok) o.detail = "certified n = 1; degrees 2..3, " + std::to_string(total_trials(rep)) +
                       " trials; nonzero degree-1 instances per suite >= " + std::to_string(least);
  return o;
}

Outcome structural() {
  Outcome o;
  auto rep = verify("structural", config(200));
  require_suites(o, rep);
  auto hull = verify("hull", config(50, {"triangular_2"}));
  require_suites(o, hull);
  std::size_t checked = 0;
  for (const auto& r : rep.results)
    if (auto it = r.counters.find("resolutions_checked"); it != r.counters.end()) checked += it->second;
  if (checked == 0) {
    o.ok = false;
    o.detail += "no resolutions were checked";
  }
  if (o.ok) o.detail = std::to_string(total_trials(rep)) + " structural trials, " + std::to_string(checked) +
                       " resolutions checked, " + std::to_string(total_trials(hull)) + " hulls";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& id : theorem_ids()) {
    TrialConfig c = config(20);
    c.theorems = {id};
    c.threads = 1;
    const std::string a = verify_all(c).to_json();
    c.threads = 3;
    const std::string b = verify_all(c).to_json();
    if (a != b) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : ", ") + id;
    }
  }
  o.detail = o.ok ? "every suite byte-identical across repeated runs" : "reports differ: " + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden homology values", 1, golden},
      {2, "projective factorization vs sampled Ext/Tor vanishing", 180, thm11},
      {3, "duality bridge", 120, duality},
      {4, "Ext epic / Tor monic and the one-directional clause", 180, epic_monic},
      {5, "Gorenstein projective suites", 180, gp_suites},
      {6, "n-Gorenstein high-degree suites", 120, n_gorenstein},
      {7, "structural invariants and hulls", 180, structural},
      {8, "determinism", 300, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
