#pragma once

// Hom_A(-,-), the star transpose (-)* = Hom_A(-, A), and - (x)_A -.

#include <optional>

#include "phantomkit/linalg.hpp"
#include "phantomkit/module.hpp"

namespace phantomkit {

/// Hom_A(M, N) with a basis of intertwiners. Basis vectors are the matrices
/// flattened row-major (length dim M * dim N) and kept in RREF, so the
/// coordinates of any member are read off at the pivots.
class HomSpace {
 public:
  HomSpace(ModuleRep source, ModuleRep target, la::Subspace flat)
      : source_(std::move(source)), target_(std::move(target)), flat_(std::move(flat)) {}

  const ModuleRep& source() const noexcept { return source_; }
  const ModuleRep& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return flat_.dim(); }
  const la::Subspace& flat() const noexcept { return flat_; }
  Mat basis_matrix(std::size_t k) const;
  ModuleMorphism basis(std::size_t k) const;
  /// Matrix with the given coordinates.
  Mat combine(std::span<const Residue> coeffs) const;
  /// Coordinates of an intertwiner.
  Vec coordinates(const Mat& m) const;

 private:
  ModuleRep source_;
  ModuleRep target_;
  la::Subspace flat_;
};

/// Throws SideMismatch.
HomSpace hom_space(const ModuleRep& m, const ModuleRep& n);

/// Some X in Hom_A(M, N) with L * X * R = T (L: a x dim M, R: dim N x b,
/// T: a x b), free variables zero. nullopt when no such X exists.
std::optional<Mat> solve_hom_equation(const ModuleRep& m, const ModuleRep& n, const Mat& left,
                                      const Mat& right, const Mat& rhs);

struct StarDual {
  ModuleRep module;  // M*, side flipped
  HomSpace hom;      // Hom_A(M, A) giving the basis of M*
};

StarDual star_dual(const ModuleRep& m);
ModuleRep star_module(const ModuleRep& m);
/// f*: N* -> M*, psi -> psi o f, in the bases of `star_n` and `star_m`.
ModuleMorphism star_morphism(const ModuleMorphism& f, const StarDual& star_m, const StarDual& star_n);
ModuleMorphism star_morphism(const ModuleMorphism& f);

/// Evaluation M -> M**, v -> (phi -> phi(v)).
ModuleMorphism natural_eval_to_double_star(const ModuleRep& m);
bool is_reflexive(const ModuleRep& m);

struct TensorProduct {
  std::size_t dim = 0;
  la::Subspace relations;  // inside M (x)_k Y, index a * dim Y + b
  Mat projection;          // (dim M * dim Y) x dim, kills exactly the relations
};

/// M (x)_A Y for M of side s and Y of the flipped side. Throws SideMismatch.
TensorProduct tensor_over_A(const ModuleRep& m, const ModuleRep& y);

}  // namespace phantomkit
