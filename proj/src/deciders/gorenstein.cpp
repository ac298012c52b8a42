#include "phantomkit/deciders.hpp"
#include "phantomkit/error.hpp"

namespace phantomkit {

// ---------------------------------------------------------------- certificates

namespace {

// Unknowns in the splitting system of one projectivity test. Syzygies over
// non-Gorenstein algebras can grow geometrically; past this the search stops.
constexpr std::size_t kSplittingBudget = 4096;

std::optional<std::size_t> regular_injective_dimension(const RingPtr& ring, Side side, std::size_t cutoff,
                                                       std::vector<bool>& evidence, bool& truncated) {
  // An injective coresolution of A_side dualizes to a free resolution of D(A_side).
  ModuleRep cur = dual_module(regular_module(ring, side));
  for (std::size_t j = 0; j <= cutoff; ++j) {
    if (cur.dim() * cur.presentation().rank() * ring->dim() > kSplittingBudget) {
      truncated = true;
      return std::nullopt;
    }
    bool proj = is_projective(cur);
    evidence.push_back(proj);
    if (proj) return j;
    cur = FreeResolution(cur, 0).syzygy(1);
  }
  return std::nullopt;
}

void require_certificate_for(const ModuleRep& m, const GorensteinCertificate& cert) {
  if (!cert.ring || !(cert.ring->base() == m.ring()->base()))
    throw Error(ErrorKind::NoCertificate, "certificate belongs to a different algebra");
}

}  // namespace

SelfInjectiveResult self_injective_dimension(const RingPtr& ring, std::size_t cutoff) {
  if (cutoff < 1) throw Error(ErrorKind::BadParams, "cutoff must be at least 1");
  SelfInjectiveResult r;
  r.right = regular_injective_dimension(ring, Side::Right, cutoff, r.right_evidence, r.truncated);
  r.left = regular_injective_dimension(ring, Side::Left, cutoff, r.left_evidence, r.truncated);
  if (r.right && r.left) {
    GorensteinCertificate c;
    c.ring = ring;
    c.n = std::max(*r.right, *r.left);
    c.cutoff = cutoff;
    c.right_dim = *r.right;
    c.left_dim = *r.left;
    c.right_evidence = r.right_evidence;
    c.left_evidence = r.left_evidence;
    r.certificate = std::move(c);
  }
  return r;
}

GorensteinCertificate certify(const RingPtr& ring, std::size_t cutoff) {
  SelfInjectiveResult r = self_injective_dimension(ring, cutoff);
  if (!r.certificate)
    throw Error(ErrorKind::NoCertificate, "self-injective dimension of " + ring->name() +
                                              " not reached within cutoff " + std::to_string(cutoff) +
                                              (r.truncated ? " (syzygies outgrew the size budget)" : ""));
  auto declared = ring->base().declared_gorenstein();
  if (declared && static_cast<std::size_t>(*declared) != r.certificate->n)
    throw Error(ErrorKind::NoCertificate, ring->name() + " declares n = " + std::to_string(*declared) +
                                              " but the computed value is " + std::to_string(r.certificate->n));
  return *r.certificate;
}

DecisionReport gp_test(const ModuleRep& m, const GorensteinCertificate& cert) {
  require_certificate_for(m, cert);
  DecisionReport r;
  r.question = Question::GorensteinProjective;
  r.degree = cert.n;
  r.justification = Justification::GDimensionZero;
  r.verdict = true;
  if (!is_reflexive(m)) {
    r.verdict = false;
    r.detail = "evaluation M -> M** is not bijective";
    return r;
  }
  if (cert.n == 0) {
    r.detail = "reflexive; higher conditions vacuous at n = 0";
    return r;
  }
  auto res = std::make_shared<const FreeResolution>(m, cert.n + 1);
  ModuleRep reg = regular_module(m.ring(), m.side());
  for (std::size_t i = 1; i <= cert.n; ++i) {
    if (std::size_t d = ext_space(res, reg, i).dim(); d != 0) {
      r.verdict = false;
      r.detail = "dim Ext^" + std::to_string(i) + "(M, A) = " + std::to_string(d);
      return r;
    }
  }
  ModuleRep star = star_module(m);
  auto res_star = std::make_shared<const FreeResolution>(star, cert.n + 1);
  ModuleRep reg_op = regular_module(m.ring(), flip(m.side()));
  for (std::size_t i = 1; i <= cert.n; ++i) {
    if (std::size_t d = ext_space(res_star, reg_op, i).dim(); d != 0) {
      r.verdict = false;
      r.detail = "dim Ext^" + std::to_string(i) + "(M*, A) = " + std::to_string(d);
      return r;
    }
  }
  r.detail = "reflexive; Ext against the ring vanishes in degrees 1.." + std::to_string(cert.n) +
             " on both sides (automatic beyond " + std::to_string(cert.n) + ")";
  return r;
}

// ---------------------------------------------------------------- constructions

CokernelConstruction cokernel_construction(const ModuleMorphism& f, const GorensteinCertificate& cert) {
  const ModuleRep& m = f.source();
  const ModuleRep& n = f.target();
  require_certificate_for(m, cert);
  MonoRoute route;
  std::optional<ModuleMorphism> u;
  if (cert.n == 0) {
    route = MonoRoute::InjectiveEnvelope;  // injective = projective here
    u = injective_envelope_embed(m);
  } else if (gp_test(m, cert).verdict) {
    route = MonoRoute::GpCosyzygy;
    u = gp_cosyzygy(m).embedding;
  } else {
    throw Error(ErrorKind::NoMonoIntoProjective, "source is not Gorenstein projective and the algebra is not self-injective");
  }
  DirectSum sum = direct_sum(n, u->target());
  ModuleMorphism combined = ModuleMorphism::trusted(m, sum.module, hstack(f.matrix(), u->matrix()));
  Cokernel c = cokernel_module(combined);
  bool exact = la::rank(combined.matrix()) == m.dim() && c.module.dim() + m.dim() == sum.module.dim();
  return CokernelConstruction{route, std::move(*u), std::move(sum), std::move(combined), std::move(c), exact};
}

std::string_view to_string(Trio t) {
  switch (t) {
    case Trio::Vanishing: return "vanishing";
    case Trio::TorEpic: return "tor_epic";
    case Trio::TorMonic: return "tor_monic";
    case Trio::Equivalence: return "equivalence";
  }
  return "?";
}

namespace {

DecisionReport conjunction(Question q, std::size_t i, const DecisionReport& a, const DecisionReport& b) {
  DecisionReport r;
  r.question = q;
  r.degree = i;
  r.verdict = a.verdict && b.verdict;
  r.justification = Justification::Conjunction;
  r.witnesses = a.witnesses;
  r.witnesses.insert(r.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
  r.detail = std::string(to_string(a.question)) + " = " + (a.verdict ? "yes" : "no") + ", " +
             std::string(to_string(b.question)) + " = " + (b.verdict ? "yes" : "no");
  return r;
}

DecisionReport gp_vanishing(const ModuleMorphism& f) {
  DecisionReport r = factors_through_projective(f);
  r.question = Question::GpVanishing;
  // Omega N is again GP; the Tor witness D(Omega N) need not be.
  std::erase_if(r.witnesses, [](const TestWitness& w) { return w.functor != FunctorKind::ExtContra; });
  return r;
}

DecisionReport gp_tor_epic(const ModuleMorphism& f, const GorensteinCertificate& cert) {
  CokernelConstruction cc = cokernel_construction(f, cert);
  PHANTOMKIT_ENSURE(cc.exact, "cokernel construction is not exact");
  DecisionReport h = factors_through_projective(cc.cokernel.projection);
  DecisionReport r;
  r.question = Question::GpTorEpic;
  r.degree = 1;
  r.verdict = h.verdict;
  r.justification = Justification::CokernelConstruction;
  r.detail = "h: N+P -> C with dim C = " + std::to_string(cc.cokernel.module.dim());
  if (!h.verdict) {
    ModuleRep x = FreeResolution(cc.cokernel.module, 0).syzygy(1);
    r.witnesses.push_back({FunctorKind::ExtContra, 1, TestWitness::Failure::NotMonic, x});
  }
  return r;
}

DecisionReport gp_tor_monic(const ModuleMorphism& f) {
  DecisionReport r = decide_epic_contra(f, 1);
  r.question = Question::GpTorMonic;
  std::erase_if(r.witnesses, [](const TestWitness& w) { return w.functor != FunctorKind::ExtContra; });
  return r;
}

}  // namespace

DecisionReport decide_gp_trio(const ModuleMorphism& f, Trio trio, const GorensteinCertificate& cert) {
  require_certificate_for(f.source(), cert);
  if (!gp_test(f.source(), cert).verdict) throw Error(ErrorKind::NotGP, "source is not Gorenstein projective");
  if (!gp_test(f.target(), cert).verdict) throw Error(ErrorKind::NotGP, "target is not Gorenstein projective");
  switch (trio) {
    case Trio::Vanishing: return gp_vanishing(f);
    case Trio::TorEpic: return gp_tor_epic(f, cert);
    case Trio::TorMonic: return gp_tor_monic(f);
    case Trio::Equivalence:
      return conjunction(Question::GpEquivalence, 1, gp_tor_epic(f, cert), gp_tor_monic(f));
  }
  throw Error(ErrorKind::Internal, "unknown trio");
}

// ---------------------------------------------------------------- hulls

Hull hull_construction(const ModuleRep& m, std::size_t n) {
  if (n == 0) {
    GpCosyzygy c = gp_cosyzygy(m);
    return Hull{std::move(c.embedding), std::move(c.cokernel)};
  }
  FreeResolution res(m, 0);
  const Presentation& pres = res.presentation(0);
  ModuleRep free = free_module(m.ring(), m.side(), pres.rank());
  const ModuleRep& omega = res.syzygy(1);
  ModuleMorphism incl = ModuleMorphism::trusted(omega, free, res.syzygy_basis(1).basis());
  Hull inner = hull_construction(omega, n - 1);  // Omega M -> H1 with pd H1 <= n - 1
  // X = (F_0 + H1) / Omega M is an extension of GP by projective, hence GP.
  Pushout x = pushout(incl, inner.embedding);
  Mat to_m = vstack(pres.cover, Mat(m.field(), inner.embedding.target().dim(), m.dim()));
  ModuleMorphism p = descend(x.quotient, ModuleMorphism::trusted(x.quotient.source(), m, std::move(to_m)));
  GpCosyzygy c = gp_cosyzygy(x.module);  // X -> Q
  // H = (Q + M) / X: M -> H has cokernel Q / X, and 0 -> H1 -> Q -> H -> 0.
  Pushout h = pushout(c.embedding, p);
  Cokernel g = cokernel_module(h.from_second);
  return Hull{h.from_second, std::move(g)};
}

Hull finite_pd_hull(const ModuleRep& m, const GorensteinCertificate& cert) {
  require_certificate_for(m, cert);
  Hull h = hull_construction(m, cert.n);
  const ModuleRep& big = h.embedding.target();
  if (!is_injective_map(h.embedding) || h.quotient.module.dim() + m.dim() != big.dim() ||
      !(h.embedding.matrix() * h.quotient.projection.matrix()).is_zero())
    throw Error(ErrorKind::HullVerificationFailed, "0 -> M -> H -> G -> 0 is not exact");
  if (!gp_test(h.quotient.module, cert).verdict)
    throw Error(ErrorKind::HullVerificationFailed, "G is not Gorenstein projective");
  if (!is_projective(syzygy(big, cert.n)))
    throw Error(ErrorKind::HullVerificationFailed, "Omega^n H is not projective");
  return h;
}

// ---------------------------------------------------------------- high degree

HighDegreeBundle decide_gorenstein_high_degree(const ModuleMorphism& f, std::size_t i,
                                               const GorensteinCertificate& cert) {
  require_certificate_for(f.source(), cert);
  if (i <= cert.n)
    throw Error(ErrorKind::DegreeTooLow, "degree " + std::to_string(i) + " does not exceed n = " + std::to_string(cert.n));

  DecisionReport vanishing = factors_through_projective(syzygy_morphism(f, i - 1));
  vanishing.question = Question::HighVanishing;
  vanishing.degree = i;
  if (vanishing.justification != Justification::ZeroShortcut) vanishing.justification = Justification::SyzygyShift;
  for (auto& w : vanishing.witnesses) w.degree = i;
  if (i > 1) vanishing.factorization.reset();

  DecisionReport monic = decide_epic_contra(f, i);
  monic.question = Question::HighTorMonic;

  // 0 -> M -> N + H -> C -> 0 with pd H <= n < i, so Ext^i(H, -) = 0.
  Hull hull = finite_pd_hull(f.source(), cert);
  DirectSum sum = direct_sum(f.target(), hull.embedding.target());
  ModuleMorphism combined =
      ModuleMorphism::trusted(f.source(), sum.module, hstack(f.matrix(), hull.embedding.matrix()));
  Cokernel c = cokernel_module(combined);
  DecisionReport h = factors_through_projective(syzygy_morphism(c.projection, i - 1));
  DecisionReport epic;
  epic.question = Question::HighTorEpic;
  epic.degree = i;
  epic.verdict = h.verdict;
  epic.justification = Justification::HullConstruction;
  epic.detail = "h: N+H -> C with dim H = " + std::to_string(hull.embedding.target().dim()) +
                ", dim C = " + std::to_string(c.module.dim());
  if (!h.verdict) {
    for (const auto& w : h.witnesses) {
      if (w.functor == FunctorKind::ExtContra)
        epic.witnesses.push_back({FunctorKind::ExtContra, i, TestWitness::Failure::NotMonic, w.module});
      else
        epic.witnesses.push_back({FunctorKind::Tor, i, TestWitness::Failure::NotEpic, w.module});
    }
  }
  DecisionReport equivalence = conjunction(Question::HighEquivalence, i, epic, monic);
  return HighDegreeBundle{std::move(vanishing), std::move(epic), std::move(monic), std::move(equivalence)};
}

}  // namespace phantomkit
