#include "phantomkit/algebra.hpp"

#include "phantomkit/error.hpp"
#include "phantomkit/linalg.hpp"

namespace phantomkit {

std::string_view to_string(Side s) { return s == Side::Right ? "right" : "left"; }

AlgebraPresentation::AlgebraPresentation(std::string name, Field field, std::size_t dim,
                                         std::vector<Residue> mult, Vec unit,
                                         std::optional<int> declared_gorenstein)
    : name_(std::move(name)),
      field_(field),
      dim_(dim),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      declared_gorenstein_(declared_gorenstein) {
  if (dim_ == 0) throw Error(ErrorKind::ShapeMismatch, "algebra of dimension 0");
  if (mult_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorKind::ShapeMismatch, "multiplication table must have dim^3 entries");
  if (unit_.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "unit must have dim entries");
  if (declared_gorenstein_ && *declared_gorenstein_ < 0)
    throw Error(ErrorKind::BadParams, "declared Gorenstein dimension must be non-negative");
  for (auto& x : mult_) x %= field_.p();
  for (auto& x : unit_) x %= field_.p();
}

Vec AlgebraPresentation::basis_product(std::size_t i, std::size_t j) const {
  auto first = mult_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vec AlgebraPresentation::multiply(std::span<const Residue> a, std::span<const Residue> b) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Residue c = field_.mul(a[i], b[j]);
      for (std::size_t k = 0; k < dim_; ++k)
        out[k] = field_.add(out[k], field_.mul(c, structure(i, j, k)));
    }
  }
  return out;
}

Mat AlgebraPresentation::right_mult(std::size_t j) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.set_row(i, basis_product(i, j));
  return m;
}

Mat AlgebraPresentation::left_mult(std::size_t j) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.set_row(i, basis_product(j, i));
  return m;
}

AlgebraPresentation AlgebraPresentation::with_name(std::string name) const {
  AlgebraPresentation out = *this;
  out.name_ = std::move(name);
  return out;
}

AlgebraPresentation AlgebraPresentation::with_gorenstein(std::optional<int> n) const {
  AlgebraPresentation out = *this;
  out.declared_gorenstein_ = n;
  return out;
}

std::string AlgebraDefect::message() const {
  if (kind == Kind::NonAssociative)
    return "(e" + std::to_string(i) + "*e" + std::to_string(j) + ")*e" + std::to_string(k) +
           " != e" + std::to_string(i) + "*(e" + std::to_string(j) + "*e" + std::to_string(k) + ")";
  return "unit law fails on e" + std::to_string(i);
}

std::optional<AlgebraDefect> validate_algebra(const AlgebraPresentation& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1 % a.field().p();
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e)
      return AlgebraDefect{AlgebraDefect::Kind::BadUnit, i, 0, 0};
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        Vec ek(d, 0), ei(d, 0);
        ek[k] = 1 % a.field().p();
        ei[i] = 1 % a.field().p();
        if (a.multiply(ij, ek) != a.multiply(ei, a.basis_product(j, k)))
          return AlgebraDefect{AlgebraDefect::Kind::NonAssociative, i, j, k};
      }
    }
  return std::nullopt;
}

void require_valid(const AlgebraPresentation& a) {
  if (auto defect = validate_algebra(a)) {
    auto kind = defect->kind == AlgebraDefect::Kind::BadUnit ? ErrorKind::BadUnit
                                                             : ErrorKind::NonAssociative;
    throw Error(kind, a.name() + ": " + defect->message());
  }
}

AlgebraPresentation opposite_algebra(const AlgebraPresentation& a) {
  const std::size_t d = a.dim();
  std::vector<Residue> mult(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = a.structure(j, i, k);
  return AlgebraPresentation(a.name() + "^op", a.field(), d, std::move(mult), a.unit(),
                             a.declared_gorenstein());
}

Mat generated_subalgebra(const AlgebraPresentation& a, const std::vector<std::size_t>& gens) {
  la::Subspace span = la::Subspace::span(Mat::from_rows(a.field(), a.dim(), {a.unit()}));
  // Right-multiply by generators until the span is stable.
  for (bool grew = true; grew;) {
    grew = false;
    Mat acc = span.basis();
    for (auto g : gens) acc = vstack(acc, span.basis() * a.right_mult(g));
    la::Subspace next = la::Subspace::span(acc);
    if (next.dim() > span.dim()) {
      span = std::move(next);
      grew = true;
    }
  }
  return span.basis();
}

Ring::Ring(AlgebraPresentation a) : base_(std::move(a)), opposite_(opposite_algebra(base_)) {
  const std::size_t d = base_.dim();
  la::Subspace closure = la::Subspace::span(generated_subalgebra(base_, generators_));
  for (std::size_t i = 0; i < d && closure.dim() < d; ++i) {
    Vec e(d, 0);
    e[i] = 1 % base_.field().p();
    if (closure.contains(e)) continue;
    generators_.push_back(i);
    closure = la::Subspace::span(generated_subalgebra(base_, generators_));
  }
}

std::shared_ptr<const Ring> Ring::make(AlgebraPresentation a) {
  require_valid(a);
  return std::shared_ptr<const Ring>(new Ring(std::move(a)));
}

}  // namespace phantomkit
