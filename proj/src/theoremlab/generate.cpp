#include <string>

#include "phantomkit/error.hpp"
#include "phantomkit/hom.hpp"
#include "phantomkit/theoremlab.hpp"

namespace phantomkit {

namespace {

Vec random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vec v(n, 0);
  for (auto& x : v)
    if (draw_below(rng, 2) == 0) x = static_cast<Residue>(1 + draw_below(rng, f.p() - 1));
  return v;
}

// Brute-force search for a vector generating a proper nonzero submodule.
// Vectors are enumerated up to scalars (first nonzero entry 1). Returns
// nullopt when the module is simple or too large to enumerate.
constexpr std::uint64_t kEnumerationLimit = 20000;

std::optional<Vec> proper_generator(const ModuleRep& q) {
  const std::size_t n = q.dim();
  const std::uint64_t p = q.field().p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > kEnumerationLimit * p) return std::nullopt;
  }
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec v(n, 0);
      v[lead] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < tail; ++i, c /= p) v[lead + 1 + i] = static_cast<Residue>(c % p);
      Mat row = Mat::from_rows(q.field(), n, {v});
      if (q.submodule_generated(row).rows() < n) return v;
    }
  }
  return std::nullopt;
}

// Grows `sub` (a submodule basis of A) while it stays proper, trying the
// candidates in order, then refines until A / sub is simple.
Mat maximal_submodule(const ModuleRep& a, const std::vector<Vec>& candidates) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  Mat sub(f, 0, d);
  for (const auto& c : candidates) {
    Mat grown = a.submodule_generated(vstack(sub, Mat::from_rows(f, d, {c})));
    if (grown.rows() < d) sub = grown;
  }
  for (;;) {
    Cokernel q = quotient_module(a, sub);
    auto v = proper_generator(q.module);
    if (!v) return sub;
    la::LeftSolver lift(q.projection.matrix());
    auto pre = lift.solve(*v);
    PHANTOMKIT_ENSURE(pre.has_value(), "quotient projection not surjective");
    sub = a.submodule_generated(vstack(sub, Mat::from_rows(f, d, {*pre})));
  }
}

bool isomorphic_simple(const ModuleRep& s, const ModuleRep& t) {
  return s.dim() == t.dim() && hom_space(s, t).dim() > 0;
}

}  // namespace

ModuleRep gen_random_module(const RingPtr& ring, Side side, std::size_t max_dim, Rng& rng) {
  if (max_dim == 0) throw Error(ErrorKind::BadParams, "max_dim must be at least 1");
  const std::size_t g = 1 + draw_below(rng, 2);
  ModuleRep free = free_module(ring, side, g);
  const Field& f = ring->field();
  const std::size_t n = free.dim();
  Mat gens(f, 0, n);
  const std::size_t initial = draw_below(rng, 3);
  for (std::size_t i = 0; i < initial; ++i) gens = vstack(gens, Mat::from_rows(f, n, {random_vector(f, n, rng)}));
  Mat sub = free.submodule_generated(gens);
  while (n - sub.rows() > max_dim) {
    gens = vstack(gens, Mat::from_rows(f, n, {random_vector(f, n, rng)}));
    sub = free.submodule_generated(gens);
  }
  return quotient_module(free, sub).module;
}

ModuleMorphism gen_random_morphism(const ModuleRep& m, const ModuleRep& n, Rng& rng) {
  HomSpace hom = hom_space(m, n);
  Vec coeffs(hom.dim(), 0);
  for (auto& c : coeffs) c = static_cast<Residue>(draw_below(rng, m.field().p()));
  return ModuleMorphism::trusted(m, n, hom.combine(coeffs));
}

ModuleRep gen_gp_module(const GorensteinCertificate& cert, std::size_t max_dim, Rng& rng) {
  ModuleRep m = gen_random_module(cert.ring, Side::Right, max_dim, rng);
  ModuleRep g = syzygy(m, cert.n);
  if (!gp_test(g, cert).verdict)
    throw Error(ErrorKind::Internal, "syzygy of order n failed the Gorenstein projective test");
  return g;
}

std::vector<ModuleRep> simple_modules(const RingPtr& ring, Side side) {
  ModuleRep a = regular_module(ring, side);
  const std::size_t d = a.dim();
  const Field& f = ring->field();
  std::vector<std::vector<Vec>> scans;
  for (std::size_t start = 0; start < d; ++start) {
    std::vector<Vec> order;
    for (std::size_t t = 0; t < d; ++t) {
      Vec e(d, 0);
      e[(start + t) % d] = 1;
      order.push_back(std::move(e));
    }
    scans.push_back(std::move(order));
  }
  Rng rng(0x51D7E5ULL + d);
  for (std::size_t extra = 0; extra < 2 * d; ++extra) {
    std::vector<Vec> order;
    for (std::size_t t = 0; t < d; ++t) order.push_back(random_vector(f, d, rng));
    scans.push_back(std::move(order));
  }
  std::vector<ModuleRep> found;
  for (const auto& scan : scans) {
    ModuleRep s = quotient_module(a, maximal_submodule(a, scan)).module;
    if (s.dim() == 0) continue;
    bool known = false;
    for (const auto& t : found) known = known || isomorphic_simple(s, t);
    if (!known) found.push_back(s);
  }
  return found;
}

}  // namespace phantomkit
