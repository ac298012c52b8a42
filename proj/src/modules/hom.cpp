#include "phantomkit/hom.hpp"

#include "phantomkit/error.hpp"

namespace phantomkit {

namespace {

Vec flatten(const Mat& m) { return Vec(m.data().begin(), m.data().end()); }

Mat unflatten(const Field& f, std::size_t rows, std::size_t cols, std::span<const Residue> v) {
  Mat out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) out.set_row(r, v.subspan(r * cols, cols));
  return out;
}

/// Block of A^r coordinates for copy t.
std::span<const Residue> block(std::span<const Residue> w, std::size_t t, std::size_t d) {
  return w.subspan(t * d, d);
}

}  // namespace

Mat HomSpace::basis_matrix(std::size_t k) const {
  return unflatten(source_.field(), source_.dim(), target_.dim(), flat_.basis().row(k));
}

ModuleMorphism HomSpace::basis(std::size_t k) const {
  return ModuleMorphism::trusted(source_, target_, basis_matrix(k));
}

Mat HomSpace::combine(std::span<const Residue> coeffs) const {
  Vec v = row_times(coeffs, flat_.basis());
  if (flat_.dim() == 0) v.assign(source_.dim() * target_.dim(), 0);
  return unflatten(source_.field(), source_.dim(), target_.dim(), v);
}

Vec HomSpace::coordinates(const Mat& m) const { return flat_.coordinates_unchecked(flatten(m)); }

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (!m.same_category(n)) throw Error(ErrorKind::SideMismatch, "Hom between different categories");
  const Field& f = m.field();
  const std::size_t mn = m.dim() * n.dim();
  if (mn == 0) return HomSpace(m, n, la::Subspace(f, mn));
  // Hom(M, N) = tuples (y_t) of generator images killed by every relation.
  const Presentation& pres = m.presentation();
  const std::size_t d = m.acting_algebra().dim();
  const std::size_t r = pres.rank();
  const std::size_t s = pres.relations.rows();
  const std::size_t nd = n.dim();
  Mat coeff(f, r * nd, s * nd);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t t = 0; t < r; ++t) paste(coeff, n.act(block(pres.relations.row(u), t, d)), t * nd, u * nd);
  la::Subspace tuples = la::left_kernel(coeff);
  Mat flat(f, tuples.dim(), mn);
  for (std::size_t k = 0; k < tuples.dim(); ++k) {
    auto y = tuples.basis().row(k);
    Mat q(f, r * d, nd);
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t i = 0; i < d; ++i) q.set_row(t * d + i, row_times(y.subspan(t * nd, nd), n.action(i)));
    flat.set_row(k, flatten(pres.section * q));
  }
  return HomSpace(m, n, la::Subspace::span(flat));
}

std::optional<Mat> solve_hom_equation(const ModuleRep& m, const ModuleRep& n, const Mat& left,
                                      const Mat& right, const Mat& rhs) {
  if (left.cols() != m.dim() || right.rows() != n.dim() || rhs.rows() != left.rows() ||
      rhs.cols() != right.cols())
    throw Error(ErrorKind::ShapeMismatch, "hom equation shapes do not match");
  HomSpace hom = hom_space(m, n);
  const Field& f = m.field();
  const std::size_t ab = rhs.rows() * rhs.cols();
  Mat cols(f, hom.dim(), ab);
  for (std::size_t k = 0; k < hom.dim(); ++k) cols.set_row(k, flatten(left * hom.basis_matrix(k) * right));
  auto c = la::solve_linear(transpose(cols), flatten(rhs));
  if (!c) return std::nullopt;
  return hom.combine(*c);
}

StarDual star_dual(const ModuleRep& m) {
  ModuleRep reg = regular_module(m.ring(), m.side());
  HomSpace hom = hom_space(m, reg);
  const auto& alg = m.acting_algebra();
  const Field& f = m.field();
  if (hom.dim() == 0) return StarDual{ModuleRep::zero(m.ring(), flip(m.side())), std::move(hom)};
  std::vector<Mat> action;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Mat lj = alg.left_mult(j);
    Mat a(f, hom.dim(), hom.dim());
    for (std::size_t k = 0; k < hom.dim(); ++k) a.set_row(k, hom.coordinates(hom.basis_matrix(k) * lj));
    action.push_back(std::move(a));
  }
  ModuleRep star = ModuleRep::trusted(m.ring(), flip(m.side()), std::move(action));
  return StarDual{std::move(star), std::move(hom)};
}

ModuleRep star_module(const ModuleRep& m) { return star_dual(m).module; }

ModuleMorphism star_morphism(const ModuleMorphism& f, const StarDual& star_m, const StarDual& star_n) {
  const Field& fld = f.source().field();
  Mat out(fld, star_n.hom.dim(), star_m.hom.dim());
  for (std::size_t k = 0; k < star_n.hom.dim(); ++k)
    out.set_row(k, star_m.hom.coordinates(f.matrix() * star_n.hom.basis_matrix(k)));
  return ModuleMorphism::trusted(star_n.module, star_m.module, std::move(out));
}

ModuleMorphism star_morphism(const ModuleMorphism& f) {
  return star_morphism(f, star_dual(f.source()), star_dual(f.target()));
}

ModuleMorphism natural_eval_to_double_star(const ModuleRep& m) {
  StarDual s1 = star_dual(m);
  StarDual s2 = star_dual(s1.module);
  const Field& f = m.field();
  const std::size_t h = s1.hom.dim();
  const std::size_t d = m.acting_algebra().dim();
  std::vector<Mat> phi;
  for (std::size_t k = 0; k < h; ++k) phi.push_back(s1.hom.basis_matrix(k));
  Mat ev(f, m.dim(), s2.hom.dim());
  for (std::size_t v = 0; v < m.dim(); ++v) {
    Mat theta(f, h, d);
    for (std::size_t k = 0; k < h; ++k) theta.set_row(k, phi[k].row(v));
    ev.set_row(v, s2.hom.coordinates(theta));
  }
  return ModuleMorphism::trusted(m, s2.module, std::move(ev));
}

bool is_reflexive(const ModuleRep& m) {
  ModuleMorphism ev = natural_eval_to_double_star(m);
  return ev.target().dim() == m.dim() && la::rank(ev.matrix()) == m.dim();
}

TensorProduct tensor_over_A(const ModuleRep& m, const ModuleRep& y) {
  if (y.side() != flip(m.side()) || !(m.ring()->base() == y.ring()->base()))
    throw Error(ErrorKind::SideMismatch, "tensor product needs modules on opposite sides of one algebra");
  const Field& f = m.field();
  const std::size_t md = m.dim(), yd = y.dim();
  const auto& gens = m.ring()->generators();
  Mat rel(f, gens.size() * md * yd, md * yd);
  std::size_t row = 0;
  for (auto j : gens) {
    const Mat& mj = m.action(j);
    const Mat& yj = y.action(j);
    for (std::size_t a = 0; a < md; ++a)
      for (std::size_t b = 0; b < yd; ++b, ++row) {
        // (m_a e_j) (x) y_b - m_a (x) (e_j y_b)
        for (std::size_t c = 0; c < md; ++c) rel.add_to(row, c * yd + b, mj(a, c));
        for (std::size_t c = 0; c < yd; ++c) rel.add_to(row, a * yd + c, f.neg(yj(b, c)));
      }
  }
  la::Subspace relations = la::Subspace::span(rel);
  Mat proj = la::quotient_projection(relations);
  const std::size_t dim = proj.cols();
  return TensorProduct{dim, std::move(relations), std::move(proj)};
}

}  // namespace phantomkit
