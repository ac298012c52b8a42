#include "phantomkit/linalg.hpp"

#include <algorithm>

#include "phantomkit/error.hpp"
#include "phantomkit/kernels.hpp"

namespace phantomkit::la {

Rref rref(Mat m, std::size_t pivot_limit) {
  const Field f = m.field();
  const auto p = f.p();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  pivot_limit = std::min(pivot_limit, cols);
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < pivot_limit && next < rows; ++c) {
    std::size_t r = next;
    while (r < rows && m(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != next) {
      auto a = m.row_mut(r);
      auto b = m.row_mut(next);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    // Entries left of c in the pivot row are zero, so only the tail needs work.
    auto pivot_tail = m.row_mut(next).subspan(c);
    simd::scale_mod(pivot_tail, f.inv(pivot_tail[0]), p);
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == next) continue;
      Residue e = m(o, c);
      if (e == 0) continue;
      simd::axpy_mod(m.row_mut(o).subspan(c), m.row(next).subspan(c), f.neg(e), p);
    }
    pivots.push_back(c);
    ++next;
  }
  return Rref{std::move(m), std::move(pivots)};
}

Rref rref(Mat m) {
  const std::size_t cols = m.cols();
  return rref(std::move(m), cols);
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace::Subspace(Mat basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Mat& generators) {
  Rref r = rref(generators);
  Mat basis = row_range(r.reduced, 0, r.rank());
  return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Mat::identity(field, ambient), std::move(piv));
}

Vec Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::ShapeMismatch, "vector not in ambient");
  Vec out(v.begin(), v.end());
  const Field& f = field();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Residue e = out[pivots_[r]];
    if (e != 0) simd::axpy_mod(out, basis_.row(r), f.neg(e), f.p());
  }
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) return std::nullopt;
  return coordinates_unchecked(v);
}

Vec Subspace::coordinates_unchecked(std::span<const Residue> v) const {
  Vec out(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) out[r] = v[pivots_[r]];
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  return span(vstack(basis_, other.basis_));
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis().row(r))) return false;
  return true;
}

// ---------------------------------------------------------------- IncrementalBasis

Vec IncrementalBasis::reduce(std::span<const Residue> v) const {
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Residue e = out[pivots_[r]];
    if (e != 0) simd::axpy_mod(out, rows_[r], field_.neg(e), field_.p());
  }
  return out;
}

bool IncrementalBasis::insert(std::span<const Residue> v) {
  Vec red = reduce(v);
  auto it = std::find_if(red.begin(), red.end(), [](Residue e) { return e != 0; });
  if (it == red.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - red.begin());
  simd::scale_mod(red, field_.inv(*it), field_.p());
  pivots_.push_back(piv);
  rows_.push_back(std::move(red));
  return true;
}

Subspace IncrementalBasis::to_subspace() const {
  return Subspace::span(Mat::from_rows(field_, ambient_, rows_));
}

Mat quotient_projection(const Subspace& sub) {
  const Field& f = sub.field();
  const std::size_t n = sub.ambient_dim();
  std::vector<bool> pivot(n, false);
  for (auto c : sub.pivots()) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  // e_t reduced modulo sub has support on pivots only through the free columns
  Mat proj(f, n, free.size());
  Vec e(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    e[t] = 1 % f.p();
    Vec red = sub.reduce(e);
    e[t] = 0;
    for (std::size_t i = 0; i < free.size(); ++i) proj.set(t, i, red[free[i]]);
  }
  return proj;
}

// ---------------------------------------------------------------- kernels

Subspace kernel_basis(const Mat& m) {
  const Field f = m.field();
  Rref r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1 % f.p();
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    rows.push_back(std::move(v));
  }
  return Subspace::span(Mat::from_rows(f, cols, rows));
}

Subspace left_kernel(const Mat& m) { return kernel_basis(transpose(m)); }

Subspace image(const Mat& m) { return Subspace::span(m); }

std::optional<Vec> solve_linear(const Mat& coeff, std::span<const Residue> rhs) {
  if (rhs.size() != coeff.rows()) throw Error(ErrorKind::ShapeMismatch, "rhs length mismatch");
  Mat aug(coeff.field(), coeff.rows(), coeff.cols() + 1);
  paste(aug, coeff, 0, 0);
  for (std::size_t r = 0; r < coeff.rows(); ++r) aug.set(r, coeff.cols(), rhs[r]);
  Rref red = rref(std::move(aug), coeff.cols());
  for (std::size_t r = red.rank(); r < coeff.rows(); ++r)
    if (red.reduced(r, coeff.cols()) != 0) return std::nullopt;
  Vec x(coeff.cols(), 0);
  for (std::size_t i = 0; i < red.rank(); ++i) x[red.pivots[i]] = red.reduced(i, coeff.cols());
  return x;
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& relations) {
  if (relations.ambient_dim() != ambient)
    throw Error(ErrorKind::ShapeMismatch, "relations live in a different ambient space");
  return ambient - relations.dim();
}

// ---------------------------------------------------------------- LinearSolver

LinearSolver::LinearSolver(const Mat& coeff)
    : unknowns_(coeff.cols()), reduced_(coeff.field(), 0, 0), transform_(coeff.field(), 0, 0) {
  const std::size_t rows = coeff.rows();
  Rref red = rref(hstack(coeff, Mat::identity(coeff.field(), rows)), coeff.cols());
  reduced_ = col_range(red.reduced, 0, coeff.cols());
  transform_ = col_range(red.reduced, coeff.cols(), rows);
  pivots_ = std::move(red.pivots);
}

std::optional<Vec> LinearSolver::solve(std::span<const Residue> rhs) const {
  if (rhs.size() != transform_.cols()) throw Error(ErrorKind::ShapeMismatch, "rhs length mismatch");
  Vec t = times_col(transform_, rhs);
  for (std::size_t r = pivots_.size(); r < t.size(); ++r)
    if (t[r] != 0) return std::nullopt;
  Vec x(unknowns_, 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = t[i];
  return x;
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(const Subspace& cycles, const Subspace& boundaries)
    : boundaries_(boundaries), reps_(cycles.field(), cycles.ambient_dim()) {
  if (cycles.ambient_dim() != boundaries.ambient_dim())
    throw Error(ErrorKind::ShapeMismatch, "subquotient ambient mismatch");
  Mat reduced(cycles.field(), cycles.dim(), cycles.ambient_dim());
  for (std::size_t r = 0; r < cycles.dim(); ++r) reduced.set_row(r, boundaries.reduce(cycles.basis().row(r)));
  reps_ = Subspace::span(reduced);
  PHANTOMKIT_ENSURE(reps_.dim() + boundaries.dim() == cycles.dim(),
                    "boundaries are not contained in cycles");
}

Vec Subquotient::coordinates(std::span<const Residue> v) const {
  Vec red = boundaries_.reduce(v);
  auto c = reps_.coordinates(red);
  PHANTOMKIT_ENSURE(c.has_value(), "vector is not a cycle");
  return *c;
}

}  // namespace phantomkit::la
