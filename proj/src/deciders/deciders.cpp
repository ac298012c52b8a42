#include "phantomkit/deciders.hpp"

#include "phantomkit/error.hpp"

namespace phantomkit {

std::string_view to_string(Question q) {
  switch (q) {
    case Question::FactorsThroughProjective: return "factors_through_projective";
    case Question::FactorsThroughInjective: return "factors_through_injective";
    case Question::Phantom: return "phantom";
    case Question::ProjectiveMorphism: return "projective_morphism";
    case Question::ExtPhantom: return "ext_phantom";
    case Question::InjectiveMorphism: return "injective_morphism";
    case Question::ExtEpic: return "ext_epic";
    case Question::TorEpic: return "tor_epic";
    case Question::ExtMonic: return "ext_monic";
    case Question::GorensteinProjective: return "gorenstein_projective";
    case Question::GpVanishing: return "gp_vanishing";
    case Question::GpTorEpic: return "gp_tor_epic";
    case Question::GpTorMonic: return "gp_tor_monic";
    case Question::GpEquivalence: return "gp_equivalence";
    case Question::HighVanishing: return "high_vanishing";
    case Question::HighTorEpic: return "high_tor_epic";
    case Question::HighTorMonic: return "high_tor_monic";
    case Question::HighEquivalence: return "high_equivalence";
  }
  return "?";
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::ZeroShortcut: return "zero map";
    case Justification::CoverLift: return "lift along the free cover of the target";
    case Justification::EnvelopeExtension: return "extension along the injective envelope of the source";
    case Justification::SyzygyShift: return "syzygy shift to degree one, then cover lift";
    case Justification::DualShift: return "k-dual to the other side, syzygy shift, then cover lift";
    case Justification::KernelConstruction: return "kernel construction K -> M+P -> N, then cover lift of h";
    case Justification::CokernelConstruction: return "cokernel construction M -> N+P -> C, then cover lift of h";
    case Justification::HullConstruction: return "finite projective dimension hull M -> N+H -> C, then shifted cover lift of h";
    case Justification::GDimensionZero: return "reflexive with vanishing Ext against the ring on both sides";
    case Justification::Conjunction: return "conjunction of the epic and monic verdicts";
    case Justification::SampledPool: return "sampled over the test-module pool";
  }
  return "?";
}

std::string_view to_string(Confidence c) { return c == Confidence::Proved ? "proved" : "sampled"; }

std::string_view to_string(TestWitness::Failure f) {
  switch (f) {
    case TestWitness::Failure::Nonzero: return "nonzero";
    case TestWitness::Failure::NotMonic: return "not monic";
    case TestWitness::Failure::NotEpic: return "not epic";
  }
  return "?";
}

bool witness_holds(const ModuleMorphism& f, const TestWitness& w, const HomologyOptions& opts) {
  InducedMap m = [&] {
    switch (w.functor) {
      case FunctorKind::ExtContra: return ext_map_contra(f, w.module, w.degree, opts);
      case FunctorKind::ExtCov: return ext_map_cov(w.module, f, w.degree, opts);
      case FunctorKind::Tor: return tor_map(f, w.module, w.degree, opts);
    }
    throw Error(ErrorKind::Internal, "unknown functor");
  }();
  switch (w.failure) {
    case TestWitness::Failure::Nonzero: return !m.is_zero();
    case TestWitness::Failure::NotMonic: return !m.is_monic();
    case TestWitness::Failure::NotEpic: return !m.is_epic();
  }
  return false;
}

bool factorization_recomposes(const ModuleMorphism& f, const Factorization& fac) {
  return fac.first.source() == f.source() && fac.second.target() == f.target() &&
         fac.first.matrix() * fac.second.matrix() == f.matrix();
}

// ---------------------------------------------------------------- factorization tests

DecisionReport factors_through_projective(const ModuleMorphism& f) {
  const ModuleRep& m = f.source();
  const ModuleRep& n = f.target();
  const Presentation& pres = n.presentation();
  ModuleRep free = free_module(n.ring(), n.side(), pres.rank());
  ModuleMorphism pi = ModuleMorphism::trusted(free, n, pres.cover);
  DecisionReport r;
  r.question = Question::FactorsThroughProjective;
  r.degree = 1;
  if (f.is_zero()) {
    r.verdict = true;
    r.justification = Justification::ZeroShortcut;
    r.factorization = Factorization{ModuleMorphism::zero(m, free), pi};
    r.detail = "h = 0";
    return r;
  }
  r.justification = Justification::CoverLift;
  auto h = solve_hom_equation(m, free, Mat::identity(m.field(), m.dim()), pres.cover, f.matrix());
  if (h) {
    r.verdict = true;
    r.factorization = Factorization{ModuleMorphism::trusted(m, free, std::move(*h)), pi};
    r.detail = "h: M -> A^" + std::to_string(pres.rank());
    return r;
  }
  r.verdict = false;
  ModuleRep omega = FreeResolution(n, 0).syzygy(1);
  r.witnesses.push_back({FunctorKind::ExtContra, 1, TestWitness::Failure::Nonzero, omega});
  r.witnesses.push_back({FunctorKind::Tor, 1, TestWitness::Failure::Nonzero, dual_module(omega)});
  r.detail = "no lift along A^" + std::to_string(pres.rank()) + " -> N";
  return r;
}

DecisionReport factors_through_injective(const ModuleMorphism& f) {
  const ModuleRep& m = f.source();
  const ModuleRep& n = f.target();
  ModuleMorphism iota = injective_envelope_embed(m);
  DecisionReport r;
  r.question = Question::FactorsThroughInjective;
  r.degree = 1;
  if (f.is_zero()) {
    r.verdict = true;
    r.justification = Justification::ZeroShortcut;
    r.factorization = Factorization{iota, ModuleMorphism::zero(iota.target(), n)};
    r.detail = "g = 0";
    return r;
  }
  r.justification = Justification::EnvelopeExtension;
  auto g = solve_hom_equation(iota.target(), n, iota.matrix(), Mat::identity(n.field(), n.dim()), f.matrix());
  if (g) {
    r.verdict = true;
    r.factorization = Factorization{iota, ModuleMorphism::trusted(iota.target(), n, std::move(*g))};
    r.detail = "g: E -> N with dim E = " + std::to_string(iota.target().dim());
    return r;
  }
  r.verdict = false;
  ModuleRep x = dual_module(FreeResolution(dual_module(m), 0).syzygy(1));
  r.witnesses.push_back({FunctorKind::ExtCov, 1, TestWitness::Failure::Nonzero, x});
  r.detail = "no extension along M -> E";
  return r;
}

namespace {

DecisionReport relabel(DecisionReport r, Question q, std::size_t i, Justification shifted) {
  r.question = q;
  r.degree = i;
  if (i > 1 && r.justification != Justification::ZeroShortcut) r.justification = shifted;
  for (auto& w : r.witnesses) w.degree = i;
  if (i > 1) r.factorization.reset();  // the factorization is of the shifted map
  return r;
}

void require_degree(std::size_t i) {
  if (i < 1) throw Error(ErrorKind::BadParams, "degree must be at least 1");
}

}  // namespace

Classification classify_morphism(const ModuleMorphism& f, std::size_t i) {
  require_degree(i);
  DecisionReport contra = factors_through_projective(syzygy_morphism(f, i - 1));
  // Ext^i(-, f) on mod A is Ext^i(D f, -) on mod A^op.
  DecisionReport dual = factors_through_projective(syzygy_morphism(dual_morphism(f), i - 1));
  DecisionReport cov;
  cov.verdict = dual.verdict;
  cov.degree = i;
  cov.justification = dual.justification == Justification::ZeroShortcut ? dual.justification
                                                                        : Justification::DualShift;
  cov.detail = "dual: " + dual.detail;
  for (const auto& w : dual.witnesses)
    if (w.functor == FunctorKind::ExtContra)
      cov.witnesses.push_back({FunctorKind::ExtCov, i, TestWitness::Failure::Nonzero, dual_module(w.module)});
  if (i == 1 && dual.factorization) {
    // f = D(first) after D(second) up to the identification D D = id.
    cov.factorization = Factorization{dual_morphism(dual.factorization->second), dual_morphism(dual.factorization->first)};
  }
  Classification c{relabel(contra, Question::Phantom, i, Justification::SyzygyShift),
                   relabel(contra, Question::ProjectiveMorphism, i, Justification::SyzygyShift), cov, cov};
  c.ext_phantom.question = Question::ExtPhantom;
  c.injective_morphism.question = Question::InjectiveMorphism;
  if (i == 1) {
    c.phantom.factorization = contra.factorization;
    c.projective_morphism.factorization = contra.factorization;
  }
  return c;
}

KernelConstruction kernel_construction(const ModuleMorphism& f) {
  const ModuleRep& m = f.source();
  const ModuleRep& n = f.target();
  const Presentation& pres = n.presentation();
  ModuleRep free = free_module(n.ring(), n.side(), pres.rank());
  DirectSum sum = direct_sum(m, free);
  ModuleMorphism combined = ModuleMorphism::trusted(sum.module, n, vstack(f.matrix(), pres.cover));
  Kernel k = kernel_module(combined);
  bool exact = la::rank(combined.matrix()) == n.dim() && k.module.dim() + n.dim() == sum.module.dim() &&
               (k.inclusion.matrix() * combined.matrix()).is_zero();
  return KernelConstruction{std::move(sum), std::move(combined), std::move(k), exact};
}

DecisionReport decide_epic_contra(const ModuleMorphism& f, std::size_t i) {
  require_degree(i);
  KernelConstruction kc = kernel_construction(syzygy_morphism(f, i - 1));
  PHANTOMKIT_ENSURE(kc.exact, "kernel construction is not exact");
  DecisionReport h = factors_through_projective(kc.kernel.inclusion);
  DecisionReport r;
  r.question = Question::ExtEpic;
  r.degree = i;
  r.verdict = h.verdict;
  r.justification = Justification::KernelConstruction;
  r.detail = "h: K -> M+P with dim K = " + std::to_string(kc.kernel.module.dim());
  if (!h.verdict) {
    // Ext^1(h, X) != 0 for X = Omega(M + P) is the cokernel of Ext^1(f, X).
    ModuleRep x = FreeResolution(kc.sum.module, 0).syzygy(1);
    r.witnesses.push_back({FunctorKind::ExtContra, i, TestWitness::Failure::NotEpic, x});
    r.witnesses.push_back({FunctorKind::Tor, i, TestWitness::Failure::NotMonic, dual_module(x)});
  }
  return r;
}

OneDirectional decide_one_directional(const ModuleMorphism& f, std::size_t i, std::span<const ModuleRep> xs,
                                      std::span<const ModuleRep> ys, const HomologyOptions& opts) {
  require_degree(i);
  ChainMap lift = lift_for_degree(f, i, opts);
  OneDirectional out;
  for (auto* r : {&out.tor_epic, &out.ext_monic}) {
    r->degree = i;
    r->verdict = true;
    r->confidence = Confidence::Sampled;
    r->justification = Justification::SampledPool;
  }
  out.tor_epic.question = Question::TorEpic;
  out.ext_monic.question = Question::ExtMonic;
  for (const auto& y : ys) {
    if (!tor_map(lift, y, i).is_epic()) {
      out.tor_epic.verdict = false;
      out.tor_epic.witnesses.push_back({FunctorKind::Tor, i, TestWitness::Failure::NotEpic, y});
      break;
    }
  }
  for (const auto& x : xs) {
    if (!ext_map_contra(lift, x, i).is_monic()) {
      out.ext_monic.verdict = false;
      out.ext_monic.witnesses.push_back({FunctorKind::ExtContra, i, TestWitness::Failure::NotMonic, x});
      break;
    }
  }
  out.tor_epic.detail = "pool of " + std::to_string(ys.size());
  out.ext_monic.detail = "pool of " + std::to_string(xs.size());
  out.implication_holds = !out.tor_epic.verdict || out.ext_monic.verdict;
  out.converse_candidate = out.ext_monic.verdict && !out.tor_epic.verdict;
  return out;
}

}  // namespace phantomkit
