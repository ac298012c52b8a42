#include "phantomkit/resolve.hpp"

#include "phantomkit/error.hpp"

namespace phantomkit {

// ---------------------------------------------------------------- free maps

Mat free_act(const AlgebraPresentation& alg, const Mat& rows, std::size_t j) {
  const std::size_t d = alg.dim();
  const std::size_t r = rows.cols() / d;
  Mat rj = alg.right_mult(j);
  Mat out(rows.field(), rows.rows(), rows.cols());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    auto row = rows.row(k);
    auto dst = out.row_mut(k);
    for (std::size_t t = 0; t < r; ++t) {
      Vec prod = row_times(row.subspan(t * d, d), rj);
      std::copy(prod.begin(), prod.end(), dst.begin() + static_cast<std::ptrdiff_t>(t * d));
    }
  }
  return out;
}

Mat free_map_matrix(const AlgebraPresentation& alg, const FreeMap& f) {
  const std::size_t d = alg.dim();
  Mat out(alg.field(), f.source_rank * d, f.target_rank * d);
  for (std::size_t i = 0; i < d; ++i) {
    Mat moved = free_act(alg, f.images, i);
    for (std::size_t u = 0; u < f.source_rank; ++u) out.set_row(u * d + i, moved.row(u));
  }
  return out;
}

Mat hom_matrix(const ModuleRep& x, const FreeMap& f) {
  const std::size_t d = x.acting_algebra().dim();
  const std::size_t n = x.dim();
  Mat out(x.field(), f.target_rank * n, f.source_rank * n);
  for (std::size_t u = 0; u < f.source_rank; ++u)
    for (std::size_t t = 0; t < f.target_rank; ++t)
      paste(out, x.act(f.images.row(u).subspan(t * d, d)), t * n, u * n);
  return out;
}

Mat tensor_matrix(const ModuleRep& y, const FreeMap& f) {
  const std::size_t d = y.acting_algebra().dim();
  const std::size_t n = y.dim();
  Mat out(y.field(), f.source_rank * n, f.target_rank * n);
  for (std::size_t u = 0; u < f.source_rank; ++u)
    for (std::size_t t = 0; t < f.target_rank; ++t)
      paste(out, y.act(f.images.row(u).subspan(t * d, d)), u * n, t * n);
  return out;
}

// ---------------------------------------------------------------- covers

FreeCover free_cover(const ModuleRep& m, const ScanOrder& order) {
  Presentation pres = order == ScanOrder::natural() ? m.presentation() : present(m, order);
  const std::size_t r = pres.rank();
  ModuleRep f = free_module(m.ring(), m.side(), r);
  return FreeCover{m, r, ModuleMorphism::trusted(f, m, pres.cover), pres.generators};
}

namespace {

/// Omega of a presented module: the kernel of its cover with the restricted free action.
ModuleRep kernel_syzygy(const ModuleRep& m, const Presentation& pres) {
  const la::Subspace& ker = pres.kernel;
  if (ker.dim() == 0) return ModuleRep::zero(m.ring(), m.side());
  const auto& alg = m.acting_algebra();
  std::vector<Mat> action;
  for (std::size_t j = 0; j < alg.dim(); ++j)
    action.push_back(select_cols(free_act(alg, ker.basis(), j), ker.pivots()));
  return ModuleRep::trusted(m.ring(), m.side(), std::move(action));
}

Presentation present_with(const ModuleRep& m, const ScanOrder& order) {
  return order == ScanOrder::natural() ? m.presentation() : present(m, order);
}

}  // namespace

// ---------------------------------------------------------------- resolutions

FreeResolution::FreeResolution(ModuleRep m, std::size_t length, ScanOrder order) : order_(order) {
  presentations_.push_back(present_with(m, order_));
  syzygies_.push_back(m);
  syzygies_.push_back(kernel_syzygy(m, presentations_.back()));
  for (std::size_t i = 0; i < length; ++i) push_stage();
}

void FreeResolution::push_stage() {
  const std::size_t i = presentations_.size();  // new stage index
  const ModuleRep& omega = syzygies_.at(i);
  presentations_.push_back(present_with(omega, order_));
  const Presentation& pres = presentations_.back();
  const Presentation& prev = presentations_.at(i - 1);
  differentials_.push_back(
      FreeMap{pres.rank(), prev.rank(), pres.generators * prev.kernel.basis()});
  syzygies_.push_back(kernel_syzygy(omega, pres));
}

FreeResolution FreeResolution::extended(std::size_t length) const {
  FreeResolution out = *this;
  while (out.length() < length) out.push_stage();
  return out;
}

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& p : presentations_) out.push_back(p.rank());
  return out;
}

ResolutionCheck check_resolution(const FreeResolution& res) {
  ResolutionCheck out;
  const auto& alg = res.module().acting_algebra();
  const std::size_t d = alg.dim();
  Mat prev = res.presentation(0).cover;  // F_0 -> M
  if (la::rank(prev) != res.module().dim()) out.exact = false;
  for (std::size_t i = 1; i <= res.length(); ++i) {
    Mat di = free_map_matrix(alg, res.differential(i));
    if (!(di * prev).is_zero()) out.composites_vanish = false;
    if (res.rank(i - 1) * d - la::rank(prev) != la::rank(di)) out.exact = false;
    prev = std::move(di);
  }
  return out;
}

ModuleRep syzygy(const ModuleRep& m, std::size_t i, const ScanOrder& order) {
  if (i == 0) return m;
  return FreeResolution(m, i - 1, order).syzygy(i);
}

FreeResolution free_resolution(const ModuleRep& m, std::size_t length, const ScanOrder& order) {
  return FreeResolution(m, length, order);
}

// ---------------------------------------------------------------- chain maps

ChainMap lift_to_chain_map(const ModuleMorphism& f, std::shared_ptr<const FreeResolution> res_m,
                           std::shared_ptr<const FreeResolution> res_n, std::size_t stages) {
  if (stages > 0 && (res_m->length() + 1 < stages || res_n->length() + 1 < stages))
    throw Error(ErrorKind::ShapeMismatch, "resolutions too short for the requested lift");
  const auto& alg = f.source().acting_algebra();
  const Field& fld = f.source().field();
  const std::size_t d = alg.dim();
  std::vector<FreeMap> phis;
  if (stages > 0) {
    const Presentation& pm = res_m->presentation(0);
    const Presentation& pn = res_n->presentation(0);
    Mat images = pm.generators * f.matrix() * pn.section;
    phis.push_back(FreeMap{pm.rank(), pn.rank(), std::move(images)});
  }
  for (std::size_t i = 1; i < stages; ++i) {
    Mat prev = free_map_matrix(alg, phis.back());
    const FreeMap& dm = res_m->differential(i);
    const la::Subspace& omega_n = res_n->syzygy_basis(i);
    const Presentation& pn = res_n->presentation(i);
    Mat pushed = dm.images * prev;  // lands in Omega^i N inside F^N_{i-1}
    Mat images(fld, dm.source_rank, pn.rank() * d);
    for (std::size_t u = 0; u < dm.source_rank; ++u) {
      auto c = omega_n.coordinates(pushed.row(u));
      PHANTOMKIT_ENSURE(c.has_value(), "lift leaves the syzygy");
      images.set_row(u, row_times(*c, pn.section));
    }
    phis.push_back(FreeMap{dm.source_rank, pn.rank(), std::move(images)});
  }
  return ChainMap{std::move(res_m), std::move(res_n), std::move(phis), f};
}

ModuleMorphism ChainMap::syzygy_map(std::size_t i) const {
  if (i == 0) return base;
  if (i > stages.size()) throw Error(ErrorKind::ShapeMismatch, "chain map too short");
  const auto& alg = base.source().acting_algebra();
  const la::Subspace& bm = source->syzygy_basis(i);
  const la::Subspace& bn = target->syzygy_basis(i);
  Mat moved = bm.basis() * free_map_matrix(alg, stages[i - 1]);
  return ModuleMorphism::trusted(source->syzygy(i), target->syzygy(i), select_cols(moved, bn.pivots()));
}

bool chain_map_commutes(const ChainMap& c) {
  if (c.stages.empty()) return true;
  const auto& alg = c.base.source().acting_algebra();
  std::vector<Mat> phi;
  for (const auto& s : c.stages) phi.push_back(free_map_matrix(alg, s));
  if (phi[0] * c.target->presentation(0).cover != c.source->presentation(0).cover * c.base.matrix())
    return false;
  for (std::size_t i = 1; i < phi.size(); ++i) {
    Mat dm = free_map_matrix(alg, c.source->differential(i));
    Mat dn = free_map_matrix(alg, c.target->differential(i));
    if (dm * phi[i - 1] != phi[i] * dn) return false;
  }
  return true;
}

ModuleMorphism syzygy_morphism(const ModuleMorphism& f, std::size_t i, const ScanOrder& order) {
  if (i == 0) return f;
  auto rm = std::make_shared<const FreeResolution>(f.source(), i - 1, order);
  auto rn = std::make_shared<const FreeResolution>(f.target(), i - 1, order);
  return lift_to_chain_map(f, rm, rn, i).syzygy_map(i);
}

// ---------------------------------------------------------------- projectivity

ProjectivityTest projectivity_test(const ModuleRep& m) {
  const Field& f = m.field();
  if (m.dim() == 0) return ProjectivityTest{true, Mat(f, 0, 0)};
  const Presentation& pres = m.presentation();
  if (pres.kernel.dim() == 0) return ProjectivityTest{true, pres.section};
  ModuleRep free = free_module(m.ring(), m.side(), pres.rank());
  Mat id = Mat::identity(f, m.dim());
  auto s = solve_hom_equation(m, free, id, pres.cover, id);
  return ProjectivityTest{s.has_value(), std::move(s)};
}

bool is_projective(const ModuleRep& m) { return projectivity_test(m).projective; }

bool is_injective(const ModuleRep& m) { return is_projective(dual_module(m)); }

ModuleMorphism injective_envelope_embed(const ModuleRep& m) {
  ModuleRep dm = dual_module(m);
  const Presentation& pres = dm.presentation();
  ModuleRep e = dual_module(free_module(m.ring(), dm.side(), pres.rank()));
  if (pres.rank() == 0) e = ModuleRep::zero(m.ring(), m.side());
  return ModuleMorphism::trusted(m, e, transpose(pres.cover));
}

GpCosyzygy gp_cosyzygy(const ModuleRep& k) {
  if (!is_reflexive(k)) throw Error(ErrorKind::NotReflexive, "module is not reflexive");
  StarDual s = star_dual(k);
  const Presentation& pres = s.module.presentation();
  const std::size_t d = k.acting_algebra().dim();
  Mat embed(k.field(), k.dim(), pres.rank() * d);
  for (std::size_t t = 0; t < pres.rank(); ++t) paste(embed, s.hom.combine(pres.generators.row(t)), 0, t * d);
  ModuleRep target = free_module(k.ring(), k.side(), pres.rank());
  ModuleMorphism iota = ModuleMorphism::trusted(k, target, std::move(embed));
  Cokernel c = cokernel_module(iota);
  return GpCosyzygy{std::move(iota), std::move(c)};
}

// ---------------------------------------------------------------- cache

std::string ResolutionCache::key(const ModuleRep& m, const ScanOrder& order) {
  std::string k;
  auto put = [&k](const void* p, std::size_t n) { k.append(static_cast<const char*>(p), n); };
  const void* ring = m.ring().get();
  put(&ring, sizeof ring);
  int side = static_cast<int>(m.side());
  int kind = static_cast<int>(order.kind);
  put(&side, sizeof side);
  put(&kind, sizeof kind);
  put(&order.seed, sizeof order.seed);
  std::size_t dim = m.dim();
  put(&dim, sizeof dim);
  for (const auto& a : m.actions()) put(a.data().data(), a.data().size() * sizeof(Residue));
  return k;
}

std::shared_ptr<const FreeResolution> ResolutionCache::get(const ModuleRep& m, std::size_t length,
                                                           const ScanOrder& order) {
  const std::string k = key(m, order);
  std::shared_ptr<const FreeResolution> have;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(k);
    if (it != entries_.end()) have = it->second;
  }
  if (have && have->length() >= length) return have;
  auto fresh = have ? std::make_shared<const FreeResolution>(have->extended(length))
                    : std::make_shared<const FreeResolution>(m, length, order);
  std::lock_guard lock(mutex_);
  auto& slot = entries_[k];
  if (!slot || slot->length() < fresh->length()) slot = fresh;
  return slot->length() >= length ? slot : fresh;
}

std::size_t ResolutionCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::vector<std::shared_ptr<const FreeResolution>> ResolutionCache::snapshot() const {
  std::lock_guard lock(mutex_);
  std::vector<std::shared_ptr<const FreeResolution>> out;
  for (const auto& [k, v] : entries_) out.push_back(v);
  return out;
}

void ResolutionCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

std::shared_ptr<const FreeResolution> resolution_of(const ModuleRep& m, std::size_t length,
                                                    const ScanOrder& order, ResolutionCache* cache) {
  if (cache) return cache->get(m, length, order);
  return std::make_shared<const FreeResolution>(m, length, order);
}

}  // namespace phantomkit
