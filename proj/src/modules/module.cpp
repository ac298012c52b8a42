#include "phantomkit/module.hpp"

#include <algorithm>

#include "phantomkit/error.hpp"
#include "phantomkit/kernels.hpp"
#include "phantomkit/linalg.hpp"
#include "phantomkit/random.hpp"

namespace phantomkit {

namespace {

void require_compatible(const ModuleRep& a, const ModuleRep& b) {
  if (!a.same_category(b))
    throw Error(ErrorKind::SideMismatch, "modules live over different rings or sides");
}

}  // namespace

// ---------------------------------------------------------------- ModuleRep

std::optional<std::string> module_defect(const RingPtr& ring, Side side,
                                         const std::vector<Mat>& action) {
  const auto& alg = ring->acting(side);
  const std::size_t d = alg.dim();
  if (action.size() != d) return "expected " + std::to_string(d) + " action matrices";
  const std::size_t m = action.empty() ? 0 : action[0].rows();
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m || !(a.field() == alg.field()))
      return std::string("action matrices must be square of equal size over the algebra's field");
  auto act = [&](std::span<const Residue> coeffs) {
    Mat out(alg.field(), m, m);
    for (std::size_t k = 0; k < d; ++k)
      if (coeffs[k] != 0) out = out + scaled(action[k], coeffs[k]);
    return out;
  };
  if (!act(alg.unit()).is_identity()) return std::string("unit does not act as the identity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (action[i] * action[j] != act(alg.basis_product(i, j)))
        return "representation law fails for (e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
  return std::nullopt;
}

ModuleRep::ModuleRep(RingPtr ring, Side side, std::vector<Mat> action) {
  if (!ring) throw Error(ErrorKind::InvalidModule, "module without a ring");
  if (auto defect = module_defect(ring, side, action)) throw Error(ErrorKind::InvalidModule, *defect);
  const std::size_t m = action[0].rows();
  data_ = std::make_shared<const Data>(std::move(ring), side, m, std::move(action));
}

ModuleRep ModuleRep::trusted(RingPtr ring, Side side, std::vector<Mat> action) {
  const std::size_t m = action.empty() ? 0 : action[0].rows();
  return ModuleRep(std::make_shared<const Data>(std::move(ring), side, m, std::move(action)));
}

ModuleRep ModuleRep::zero(RingPtr ring, Side side) {
  std::vector<Mat> action(ring->dim(), Mat(ring->field(), 0, 0));
  return trusted(std::move(ring), side, std::move(action));
}

Mat ModuleRep::act(std::span<const Residue> a) const {
  Mat out(field(), dim(), dim());
  const auto p = field().p();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    const Mat& ak = action(k);
    for (std::size_t r = 0; r < dim(); ++r) simd::axpy_mod(out.row_mut(r), ak.row(r), a[k], p);
  }
  return out;
}

namespace {

/// Grows `span` by v and everything v generates under the ring generators.
bool absorb(la::IncrementalBasis& span, const ModuleRep& m, std::span<const Residue> v) {
  if (!span.insert(v)) return false;
  std::vector<Vec> frontier{Vec(v.begin(), v.end())};
  const auto& gens = m.ring()->generators();
  while (!frontier.empty()) {
    Vec w = std::move(frontier.back());
    frontier.pop_back();
    for (auto g : gens) {
      Vec u = row_times(w, m.action(g));
      if (span.insert(u)) frontier.push_back(std::move(u));
    }
  }
  return true;
}

std::size_t generated_dim(const ModuleRep& m, const Mat& gens) {
  la::IncrementalBasis span(m.field(), m.dim());
  for (std::size_t r = 0; r < gens.rows(); ++r) absorb(span, m, gens.row(r));
  return span.dim();
}

}  // namespace

Mat ModuleRep::submodule_generated(const Mat& vectors) const {
  la::IncrementalBasis span(field(), dim());
  for (std::size_t r = 0; r < vectors.rows(); ++r) absorb(span, *this, vectors.row(r));
  return span.to_subspace().basis();
}

std::vector<std::size_t> ScanOrder::permutation(std::size_t n) const {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  if (kind == Kind::Reversed) std::reverse(perm.begin(), perm.end());
  if (kind == Kind::Shuffled) {
    Rng rng(seed);
    shuffle_in_place(perm, rng);
  }
  return perm;
}

Mat greedy_generators(const ModuleRep& m, const Mat& candidates, const ScanOrder& order) {
  const Field& f = m.field();
  la::IncrementalBasis span(f, m.dim());
  std::vector<Vec> kept;
  for (auto r : order.permutation(candidates.rows()))
    if (absorb(span, m, candidates.row(r))) kept.push_back(candidates.row_vec(r));
  const std::size_t total = span.dim();
  auto generates_all = [&](const std::vector<Vec>& gens) {
    return generated_dim(m, Mat::from_rows(f, m.dim(), gens)) == total;
  };
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<Vec> others = kept;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
    if (generates_all(others))
      kept = std::move(others);
    else
      ++k;
  }
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size();) {
      std::vector<Vec> merged = kept;
      simd::axpy_mod(merged[a], kept[b], 1, f.p());
      merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(b));
      if (generates_all(merged))
        kept = std::move(merged);
      else
        ++b;
    }
  }
  return Mat::from_rows(f, m.dim(), kept);
}

Presentation present(const ModuleRep& m, const ScanOrder& order) {
  const Field& f = m.field();
  const auto& alg = m.acting_algebra();
  const std::size_t d = alg.dim();
  Mat gens = greedy_generators(m, Mat::identity(f, m.dim()), order);
  const std::size_t r = gens.rows();
  Mat cover(f, r * d, m.dim());
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t i = 0; i < d; ++i) cover.set_row(t * d + i, row_times(gens.row(t), m.action(i)));
  Mat section(f, m.dim(), r * d);
  {
    la::LeftSolver solver(cover);
    Vec e(m.dim(), 0);
    for (std::size_t v = 0; v < m.dim(); ++v) {
      e[v] = 1 % f.p();
      auto x = solver.solve(e);
      PHANTOMKIT_ENSURE(x.has_value(), "greedy generators do not generate");
      section.set_row(v, *x);
      e[v] = 0;
    }
  }
  la::Subspace kernel = la::left_kernel(cover);
  ModuleRep free = free_module(m.ring(), m.side(), r);
  Mat relations = greedy_generators(free, kernel.basis(), order);
  return Presentation{std::move(gens), std::move(cover), std::move(section), std::move(kernel),
                      std::move(relations)};
}

const Presentation& ModuleRep::presentation() const {
  std::call_once(data_->presented, [this] {
    data_->presentation = std::make_unique<Presentation>(present(*this));
  });
  return *data_->presentation;
}

bool ModuleRep::same_category(const ModuleRep& other) const noexcept {
  if (side() != other.side()) return false;
  if (ring() == other.ring()) return true;
  return ring()->base() == other.ring()->base();
}

bool operator==(const ModuleRep& a, const ModuleRep& b) {
  if (a.data_ == b.data_) return true;
  return a.same_category(b) && a.dim() == b.dim() && a.actions() == b.actions();
}

// ---------------------------------------------------------------- morphisms

bool intertwines(const ModuleRep& source, const ModuleRep& target, const Mat& matrix) {
  for (auto g : source.ring()->generators())
    if (source.action(g) * matrix != matrix * target.action(g)) return false;
  return true;
}

ModuleMorphism::ModuleMorphism(ModuleRep source, ModuleRep target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_compatible(source_, target_);
  if (matrix_.rows() != source_.dim() || matrix_.cols() != target_.dim())
    throw Error(ErrorKind::ShapeMismatch, "morphism matrix must be dim(source) x dim(target)");
  if (!intertwines(source_, target_, matrix_))
    throw Error(ErrorKind::NotIntertwining, "matrix is not A-linear");
}

ModuleMorphism ModuleMorphism::trusted(ModuleRep source, ModuleRep target, Mat matrix) {
  return ModuleMorphism(Trusted{}, std::move(source), std::move(target), std::move(matrix));
}

ModuleMorphism ModuleMorphism::zero(ModuleRep source, ModuleRep target) {
  require_compatible(source, target);
  Mat z(source.field(), source.dim(), target.dim());
  return trusted(std::move(source), std::move(target), std::move(z));
}

ModuleMorphism ModuleMorphism::identity(ModuleRep m) {
  Mat id = Mat::identity(m.field(), m.dim());
  return trusted(m, m, std::move(id));
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (!(f.target().dim() == g.source().dim()) || !f.target().same_category(g.source()))
    throw Error(ErrorKind::ShapeMismatch, "cannot compose: target of f is not the source of g");
  return ModuleMorphism::trusted(f.source(), g.target(), f.matrix() * g.matrix());
}

ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g) {
  return ModuleMorphism::trusted(f.source(), f.target(), f.matrix() + g.matrix());
}

ModuleMorphism scale(const ModuleMorphism& f, Residue c) {
  return ModuleMorphism::trusted(f.source(), f.target(), scaled(f.matrix(), c));
}

// ---------------------------------------------------------------- kernels etc.

namespace {

/// Action restricted to the submodule with RREF basis `basis` (pivot read-off).
std::vector<Mat> restricted_action(const ModuleRep& m, const la::Subspace& sub) {
  std::vector<Mat> out;
  out.reserve(m.actions().size());
  for (const auto& a : m.actions()) {
    Mat moved = sub.basis() * a;
    out.push_back(select_cols(moved, sub.pivots()));
  }
  return out;
}

}  // namespace

Kernel kernel_module(const ModuleMorphism& f) {
  const ModuleRep& m = f.source();
  la::Subspace ker = la::left_kernel(f.matrix());
  ModuleRep k = ModuleRep::trusted(m.ring(), m.side(), restricted_action(m, ker));
  if (ker.dim() == 0) k = ModuleRep::zero(m.ring(), m.side());
  return Kernel{k, ModuleMorphism::trusted(k, m, ker.basis())};
}

namespace {

/// `img` must be a submodule of n.
Cokernel quotient_by_submodule(const ModuleRep& n, const la::Subspace& img) {
  Mat proj = la::quotient_projection(img);
  std::vector<std::size_t> free;
  std::vector<bool> pivot(n.dim(), false);
  for (auto c : img.pivots()) pivot[c] = true;
  for (std::size_t c = 0; c < n.dim(); ++c)
    if (!pivot[c]) free.push_back(c);
  std::vector<Mat> action;
  for (const auto& a : n.actions()) action.push_back(select_rows(a, free) * proj);
  ModuleRep c = free.empty() ? ModuleRep::zero(n.ring(), n.side())
                             : ModuleRep::trusted(n.ring(), n.side(), std::move(action));
  return Cokernel{c, ModuleMorphism::trusted(n, c, std::move(proj))};
}

}  // namespace

Cokernel quotient_module(const ModuleRep& n, const Mat& sub) {
  return quotient_by_submodule(n, la::Subspace::span(n.submodule_generated(sub)));
}

Cokernel cokernel_module(const ModuleMorphism& f) {
  return quotient_by_submodule(f.target(), la::image(f.matrix()));
}

DirectSum direct_sum(const ModuleRep& m, const ModuleRep& n) {
  require_compatible(m, n);
  std::vector<Mat> action;
  for (std::size_t j = 0; j < m.actions().size(); ++j)
    action.push_back(block_diag(m.action(j), n.action(j)));
  ModuleRep s = ModuleRep::trusted(m.ring(), m.side(), std::move(action));
  const Field& f = m.field();
  Mat i1(f, m.dim(), s.dim()), i2(f, n.dim(), s.dim());
  paste(i1, Mat::identity(f, m.dim()), 0, 0);
  paste(i2, Mat::identity(f, n.dim()), 0, m.dim());
  return DirectSum{s,
                   {ModuleMorphism::trusted(m, s, i1), ModuleMorphism::trusted(n, s, i2)},
                   {ModuleMorphism::trusted(s, m, transpose(i1)),
                    ModuleMorphism::trusted(s, n, transpose(i2))}};
}

ModuleMorphism pair_into_sum(const ModuleMorphism& f, const ModuleMorphism& g, const DirectSum& sum) {
  return ModuleMorphism::trusted(f.source(), sum.module, hstack(f.matrix(), g.matrix()));
}

ModuleMorphism copair_out_of_sum(const ModuleMorphism& f, const ModuleMorphism& g,
                                 const DirectSum& sum) {
  return ModuleMorphism::trusted(sum.module, f.target(), vstack(f.matrix(), g.matrix()));
}

Pushout pushout(const ModuleMorphism& a, const ModuleMorphism& b) {
  if (!(a.source() == b.source())) throw Error(ErrorKind::ShapeMismatch, "pushout legs need a common source");
  DirectSum sum = direct_sum(a.target(), b.target());
  Mat rel = hstack(a.matrix(), scaled(b.matrix(), a.source().field().neg(1)));
  Cokernel c = cokernel_module(ModuleMorphism::trusted(a.source(), sum.module, std::move(rel)));
  return Pushout{c.module, compose(c.projection, sum.injections[0]), compose(c.projection, sum.injections[1]),
                 c.projection};
}

ModuleMorphism descend(const ModuleMorphism& q, const ModuleMorphism& phi) {
  const Field& f = q.source().field();
  const std::size_t n = q.target().dim();
  la::LeftSolver solver(q.matrix());
  Mat section(f, n, q.source().dim());
  Vec e(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    e[v] = 1 % f.p();
    auto x = solver.solve(e);
    if (!x) throw Error(ErrorKind::ShapeMismatch, "descend needs a surjection");
    section.set_row(v, *x);
    e[v] = 0;
  }
  Mat kernel = la::left_kernel(q.matrix()).basis();
  PHANTOMKIT_ENSURE((kernel * phi.matrix()).is_zero(), "map does not vanish on the kernel");
  return ModuleMorphism::trusted(q.target(), phi.target(), section * phi.matrix());
}

bool is_injective_map(const ModuleMorphism& f) { return la::rank(f.matrix()) == f.source().dim(); }
bool is_surjective_map(const ModuleMorphism& f) { return la::rank(f.matrix()) == f.target().dim(); }

std::optional<ModuleMorphism> inverse(const ModuleMorphism& f) {
  const std::size_t n = f.source().dim();
  if (n != f.target().dim()) return std::nullopt;
  la::Rref r = la::rref(hstack(f.matrix(), Mat::identity(f.source().field(), n)), n);
  if (r.rank() != n) return std::nullopt;
  return ModuleMorphism::trusted(f.target(), f.source(), col_range(r.reduced, n, n));
}

ModuleRep dual_module(const ModuleRep& m) {
  std::vector<Mat> action;
  for (const auto& a : m.actions()) action.push_back(transpose(a));
  if (m.dim() == 0) return ModuleRep::zero(m.ring(), flip(m.side()));
  return ModuleRep::trusted(m.ring(), flip(m.side()), std::move(action));
}

ModuleMorphism dual_morphism(const ModuleMorphism& f) {
  return ModuleMorphism::trusted(dual_module(f.target()), dual_module(f.source()),
                                 transpose(f.matrix()));
}

ModuleRep regular_module(const RingPtr& ring, Side side) {
  const auto& alg = ring->acting(side);
  std::vector<Mat> action;
  for (std::size_t j = 0; j < alg.dim(); ++j) action.push_back(alg.right_mult(j));
  return ModuleRep::trusted(ring, side, std::move(action));
}

ModuleRep free_module(const RingPtr& ring, Side side, std::size_t rank) {
  if (rank == 0) return ModuleRep::zero(ring, side);
  const auto& alg = ring->acting(side);
  std::vector<Mat> action;
  for (std::size_t j = 0; j < alg.dim(); ++j) action.push_back(block_diag_power(alg.right_mult(j), rank));
  return ModuleRep::trusted(ring, side, std::move(action));
}

}  // namespace phantomkit
