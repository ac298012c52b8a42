#pragma once

// Exact dense linear algebra over F_p. Pivoting always takes the first nonzero
// entry, so every basis this layer hands out is reproducible bit-for-bit.
//
// Conventions: `kernel_basis(m)` is the right null space {v : m v^T = 0}; the
// module layer works with row vectors and mostly wants `left_kernel(m)`,
// i.e. {v : v m = 0}.

#include <optional>
#include <vector>

#include "phantomkit/matrix.hpp"

namespace phantomkit::la {

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. Only columns < pivot_limit may hold pivots, which
/// lets callers carry an augmented block along.
Rref rref(Mat m, std::size_t pivot_limit);
Rref rref(Mat m);
std::size_t rank(const Mat& m);

/// A subspace of F_p^ambient held as RREF basis rows.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);  // zero subspace
  /// Row space of `generators` (any spanning set).
  static Subspace span(const Mat& generators);
  static Subspace full(Field field, std::size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the basis; zero iff v lies in the subspace.
  Vec reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  /// Coordinates w.r.t. the basis rows when v lies in the subspace.
  std::optional<Vec> coordinates(std::span<const Residue> v) const;
  /// Coordinates of a vector already known to lie in the subspace (pivot read-off).
  Vec coordinates_unchecked(std::span<const Residue> v) const;

  Subspace sum(const Subspace& other) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Mat basis, std::vector<std::size_t> pivots);
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Echelon basis grown one vector at a time. Rows are normalized at their
/// pivot and reduced against earlier rows, so reduction in insertion order works.
class IncrementalBasis {
 public:
  IncrementalBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  Vec reduce(std::span<const Residue> v) const;
  /// Adds v if it is independent of the current rows; returns whether it was added.
  bool insert(std::span<const Residue> v);
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  Subspace to_subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Projection F_p^ambient -> F_p^ambient / sub whose quotient basis is the
/// images of the standard vectors at the non-pivot columns of `sub`.
Mat quotient_projection(const Subspace& sub);

/// {v : m v^T = 0}; dim = cols - rank(m).
Subspace kernel_basis(const Mat& m);
/// {v : v m = 0}.
Subspace left_kernel(const Mat& m);
/// Row space of m (image of v -> v m).
Subspace image(const Mat& m);

/// Some x with coeff x = rhs, free variables set to 0; nullopt if inconsistent.
std::optional<Vec> solve_linear(const Mat& coeff, std::span<const Residue> rhs);

std::size_t quotient_dim(std::size_t ambient, const Subspace& relations);

/// Factorizes `coeff` once, then answers coeff x = b for many right-hand sides.
class LinearSolver {
 public:
  explicit LinearSolver(const Mat& coeff);
  std::optional<Vec> solve(std::span<const Residue> rhs) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::size_t unknowns_;
  Mat reduced_;    // RREF of coeff
  Mat transform_;  // transform_ * coeff == reduced_
  std::vector<std::size_t> pivots_;
};

/// Solves x m = b (row convention) for many b.
class LeftSolver {
 public:
  explicit LeftSolver(const Mat& m) : inner_(transpose(m)) {}
  std::optional<Vec> solve(std::span<const Residue> rhs) const { return inner_.solve(rhs); }

 private:
  LinearSolver inner_;
};

/// Z / B for subspaces B <= Z of a common ambient space, with chosen
/// representatives and coordinate read-off for elements of Z.
class Subquotient {
 public:
  Subquotient(const Subspace& cycles, const Subspace& boundaries);

  std::size_t dim() const noexcept { return reps_.dim(); }
  /// Representatives: reduced modulo boundaries and in RREF.
  const Mat& representatives() const noexcept { return reps_.basis(); }
  const Subspace& boundaries() const noexcept { return boundaries_; }
  /// Class coordinates of an element of Z.
  Vec coordinates(std::span<const Residue> v) const;

 private:
  Subspace boundaries_;
  Subspace reps_;
};

}  // namespace phantomkit::la
