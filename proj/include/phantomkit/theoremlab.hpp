#pragma once

// Seeded instance generation and the verification suites. Each suite checks
// one biconditional two ways: through a decider, and through induced maps
// evaluated on a fixed pool of test modules.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phantomkit/deciders.hpp"
#include "phantomkit/random.hpp"

namespace phantomkit {

// ---------------------------------------------------------------- generators

/// Quotient of A^g (g <= 2) by a submodule generated from random elements,
/// with dim <= max_dim.
ModuleRep gen_random_module(const RingPtr& ring, Side side, std::size_t max_dim, Rng& rng);
/// Random F_p-combination of a basis of Hom(M, N).
ModuleMorphism gen_random_morphism(const ModuleRep& m, const ModuleRep& n, Rng& rng);
/// Omega^n of a random module; checked with gp_test.
ModuleRep gen_gp_module(const GorensteinCertificate& cert, std::size_t max_dim, Rng& rng);

/// Simple quotients of the regular module, one per isomorphism class found by
/// greedy maximal-submodule scans.
std::vector<ModuleRep> simple_modules(const RingPtr& ring, Side side);

// ---------------------------------------------------------------- pools

struct PoolEntry {
  std::string label;
  ModuleRep module;
};

/// Test modules for both sides. A standard pool is closed under D: the
/// left list is D of the right list, entry by entry.
struct Pool {
  std::vector<PoolEntry> right;
  std::vector<PoolEntry> left;
  /// Adds m and D(m) to their sides; zero modules and repeats are skipped.
  void add(const std::string& label, const ModuleRep& m);
  /// Adds m to its own side only.
  void add_one(const std::string& label, const ModuleRep& m);
};

struct PoolOptions {
  std::uint64_t seed = 42;
  std::size_t random_count = 16;
  std::size_t random_max_dim = 5;
  std::size_t syzygy_depth = 3;
};

/// Regular modules, simples, their syzygies, duals and stars of the standard
/// modules of both sides, then seeded random modules, closed under D.
Pool standard_pool(const RingPtr& ring, const PoolOptions& opts);
/// Members of either side passing gp_test, plus Omega^n of every member.
Pool gp_pool(const Pool& pool, const GorensteinCertificate& cert);

// ---------------------------------------------------------------- suites

struct TrialConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::vector<std::string> algebras;  // catalog specs; empty = suite default
  std::size_t max_dim = 4;
  std::size_t pool_random = 16;
  std::size_t pool_max_dim = 5;
  std::size_t min_degree = 1;
  std::size_t max_degree = 2;
  std::vector<std::string> theorems;  // empty = all
  std::size_t threads = 0;            // 0 = PHANTOMKIT_THREADS or hardware
  bool record_time = false;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string algebra;
  std::string what;
  std::string instance;  // JSON
  std::string decider;   // JSON
  std::string sampled;   // JSON
};

struct SuiteResult {
  std::string theorem;
  std::string algebra;
  std::string regime;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<TrialFailure> failures;
  std::map<std::string, std::size_t> counters;
  std::vector<std::string> pool;  // "label:dim" per right-side member
  std::optional<double> wall_seconds;
  bool pass() const noexcept { return failures.empty(); }
};

struct VerificationReport {
  TrialConfig config;
  std::vector<SuiteResult> results;
  bool pass() const noexcept;
  /// Deterministic JSON, fixed key order.
  std::string to_json(int indent = 2) const;
};

const std::vector<std::string>& theorem_ids();
/// Catalog specs a suite runs on when the config names none.
std::vector<std::string> default_algebras(const std::string& theorem_id);

/// Throws BadParams for an unknown id and ConfigError when a suite needing a
/// Gorenstein certificate meets an uncertified algebra.
VerificationReport verify(const std::string& theorem_id, const TrialConfig& config);
/// All selected suites (config.theorems, or every id).
VerificationReport verify_all(const TrialConfig& config);

/// Re-runs one trial; returns the failure it produces, if any.
std::optional<TrialFailure> replay(const std::string& theorem_id, const std::string& algebra,
                                   std::size_t trial, const TrialConfig& config);

/// Worker count: config.threads, else PHANTOMKIT_THREADS, else hardware.
std::size_t worker_count(const TrialConfig& config);

}  // namespace phantomkit
