#pragma once

// Finite decision procedures for vanishing, monic and epic behaviour of the
// natural transformations induced by a morphism, plus Gorenstein tooling.
//
// Every negative verdict names a test module on which the induced map of the
// original morphism visibly fails; `witness_holds` re-evaluates it.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phantomkit/functors.hpp"

namespace phantomkit {

enum class Question {
  FactorsThroughProjective,
  FactorsThroughInjective,
  Phantom,             // Tor_i(f, -) = 0
  ProjectiveMorphism,  // Ext^i(f, -) = 0
  ExtPhantom,          // Ext^i(-, f) = 0
  InjectiveMorphism,   // Ext^i(-, f) = 0
  ExtEpic,             // Ext^i(f, -) epic, equivalently Tor_i(f, -) monic
  TorEpic,
  ExtMonic,
  GorensteinProjective,
  GpVanishing,
  GpTorEpic,   // Tor_1(f, -) epic over GP modules
  GpTorMonic,  // Tor_1(f, -) monic over GP modules
  GpEquivalence,
  HighVanishing,
  HighTorEpic,
  HighTorMonic,
  HighEquivalence,
};
std::string_view to_string(Question q);

enum class Justification {
  ZeroShortcut,
  CoverLift,           // f lifts along the free cover of its target
  EnvelopeExtension,   // f extends along the injective envelope of its source
  SyzygyShift,         // degree i reduced to the first syzygy-shifted degree
  DualShift,           // Ext^i(-, f) read as Ext^i(D f, -) on the other side
  KernelConstruction,  // 0 -> K -> M + P -> N -> 0, then the h-test
  CokernelConstruction,
  HullConstruction,    // 0 -> M -> N + H -> C -> 0 with pd H <= n
  GDimensionZero,
  Conjunction,
  SampledPool,
};
std::string_view to_string(Justification j);

enum class Confidence { Proved, Sampled };
std::string_view to_string(Confidence c);

/// How the induced map of the original morphism fails on `module`.
struct TestWitness {
  enum class Failure { Nonzero, NotMonic, NotEpic };
  FunctorKind functor = FunctorKind::ExtContra;
  std::size_t degree = 1;
  Failure failure = Failure::Nonzero;
  ModuleRep module;
};
std::string_view to_string(TestWitness::Failure f);

/// f = second o first.
struct Factorization {
  ModuleMorphism first;
  ModuleMorphism second;
};

struct DecisionReport {
  Question question = Question::FactorsThroughProjective;
  std::size_t degree = 1;
  bool verdict = false;
  Confidence confidence = Confidence::Proved;
  Justification justification = Justification::CoverLift;
  std::optional<Factorization> factorization;
  std::vector<TestWitness> witnesses;
  std::string detail;
};

/// Re-evaluates the witness through the functors module.
bool witness_holds(const ModuleMorphism& f, const TestWitness& w, const HomologyOptions& opts = {});
bool factorization_recomposes(const ModuleMorphism& f, const Factorization& fac);

// ---------------------------------------------------------------- factorization tests

/// h: M -> F_0(N) with pi h = f. Negative witnesses: Ext^1(f, Omega N) != 0 and
/// Tor_1(f, D Omega N) != 0.
DecisionReport factors_through_projective(const ModuleMorphism& f);
/// g: E -> N with g iota = f for the envelope iota: M -> E. Negative witness:
/// Ext^1(D Omega D M, f) != 0.
DecisionReport factors_through_injective(const ModuleMorphism& f);

struct Classification {
  DecisionReport phantom;
  DecisionReport projective_morphism;
  DecisionReport ext_phantom;
  DecisionReport injective_morphism;
};
/// Degree i >= 1: the first two via Omega^{i-1} f, the last two via Omega^{i-1} D f.
Classification classify_morphism(const ModuleMorphism& f, std::size_t i);

struct KernelConstruction {
  DirectSum sum;             // M + P, P the free cover of N
  ModuleMorphism combined;   // f' = [f pi]: M + P -> N
  Kernel kernel;             // h = kernel.inclusion: K -> M + P
  bool exact = false;
};
KernelConstruction kernel_construction(const ModuleMorphism& f);

/// Ext^i(f, -) epic (equivalently Tor_i(f, -) monic).
DecisionReport decide_epic_contra(const ModuleMorphism& f, std::size_t i);

struct OneDirectional {
  DecisionReport tor_epic;
  DecisionReport ext_monic;
  bool implication_holds = true;    // tor_epic => ext_monic on the pools
  bool converse_candidate = false;  // ext_monic but not tor_epic
};
/// Sampled over the given pools: `xs` on the side of f, `ys` on the other.
OneDirectional decide_one_directional(const ModuleMorphism& f, std::size_t i, std::span<const ModuleRep> xs,
                                      std::span<const ModuleRep> ys, const HomologyOptions& opts = {});

// ---------------------------------------------------------------- Gorenstein

struct GorensteinCertificate {
  RingPtr ring;
  std::size_t n = 0;
  std::size_t cutoff = 0;
  std::size_t right_dim = 0;  // injective dimension of the right regular module
  std::size_t left_dim = 0;
  std::vector<bool> right_evidence;  // is_projective(Omega^j D(A_A)), j = 0..right_dim
  std::vector<bool> left_evidence;
};

struct SelfInjectiveResult {
  std::optional<std::size_t> right;
  std::optional<std::size_t> left;
  std::vector<bool> right_evidence;
  std::vector<bool> left_evidence;
  bool truncated = false;  // a side stopped early on the size budget
  std::optional<GorensteinCertificate> certificate;  // empty = refusal
};

/// Least j <= cutoff with Omega^j(D(A_side)) projective, per side.
SelfInjectiveResult self_injective_dimension(const RingPtr& ring, std::size_t cutoff = 6);
/// Certificate agreeing with the declared value when there is one; throws NoCertificate.
GorensteinCertificate certify(const RingPtr& ring, std::size_t cutoff = 6);

/// Reflexive and Ext^i(M, A) = 0 = Ext^i(M*, A) for 1 <= i <= n.
DecisionReport gp_test(const ModuleRep& m, const GorensteinCertificate& cert);

enum class MonoRoute { GpCosyzygy, InjectiveEnvelope };

struct CokernelConstruction {
  MonoRoute route = MonoRoute::GpCosyzygy;
  ModuleMorphism mono;      // u: M -> P
  DirectSum sum;            // N + P
  ModuleMorphism combined;  // f# = [f u]: M -> N + P
  Cokernel cokernel;        // h = cokernel.projection: N + P -> C
  bool exact = false;
};
/// Throws NoMonoIntoProjective when M is not GP and A is not self-injective.
CokernelConstruction cokernel_construction(const ModuleMorphism& f, const GorensteinCertificate& cert);

enum class Trio { Vanishing, TorEpic, TorMonic, Equivalence };
std::string_view to_string(Trio t);

/// Source and target must pass gp_test (throws NotGP).
DecisionReport decide_gp_trio(const ModuleMorphism& f, Trio trio, const GorensteinCertificate& cert);

struct Hull {
  ModuleMorphism embedding;  // M -> H, pd H <= n
  Cokernel quotient;         // H -> G, G Gorenstein projective
};
/// Postconditions are checked; throws HullVerificationFailed.
Hull finite_pd_hull(const ModuleRep& m, const GorensteinCertificate& cert);
/// The construction without the final checks, at depth n.
Hull hull_construction(const ModuleRep& m, std::size_t n);

struct HighDegreeBundle {
  DecisionReport vanishing;
  DecisionReport tor_epic;
  DecisionReport tor_monic;
  DecisionReport equivalence;
};
/// Needs i > n (throws DegreeTooLow).
HighDegreeBundle decide_gorenstein_high_degree(const ModuleMorphism& f, std::size_t i,
                                               const GorensteinCertificate& cert);

}  // namespace phantomkit
