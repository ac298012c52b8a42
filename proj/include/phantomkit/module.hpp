#pragma once

// Finitely generated modules as matrix representations.
//
// Convention (global): a module M of side s is a right module over
// ring->acting(s); vectors are rows and e_j acts by v -> v * action(j).
// A morphism f: M -> N is the dim(M) x dim(N) matrix F with f(v) = v * F.

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <memory>
#include <vector>

#include "phantomkit/algebra.hpp"
#include "phantomkit/linalg.hpp"

namespace phantomkit {

/// Order in which basis vectors are offered to the greedy generator scan.
struct ScanOrder {
  enum class Kind { Natural, Reversed, Shuffled };
  Kind kind = Kind::Natural;
  std::uint64_t seed = 0;

  static ScanOrder natural() { return {}; }
  static ScanOrder reversed() { return {Kind::Reversed, 0}; }
  static ScanOrder shuffled(std::uint64_t seed) { return {Kind::Shuffled, seed}; }
  std::vector<std::size_t> permutation(std::size_t n) const;
  friend bool operator==(const ScanOrder&, const ScanOrder&) = default;
};

/// A finite presentation A^s -> A^r -> M -> 0 chosen by the greedy scan.
/// Free modules use the basis index t * dim A + i for e_i in copy t.
struct Presentation {
  Mat generators;     // r x dim M
  Mat cover;          // (r * dim A) x dim M, row (t, i) = x_t e_i
  Mat section;        // dim M x (r * dim A), section * cover = I
  la::Subspace kernel;  // ker(cover) inside A^r, RREF basis
  Mat relations;      // s x (r * dim A): A-module generators of the kernel
  std::size_t rank() const noexcept { return generators.rows(); }
};

class ModuleRep {
 public:
  /// Validates the unit and representation laws; throws InvalidModule.
  ModuleRep(RingPtr ring, Side side, std::vector<Mat> action);
  /// Skips validation; for constructions whose output is a module by theory.
  static ModuleRep trusted(RingPtr ring, Side side, std::vector<Mat> action);
  static ModuleRep zero(RingPtr ring, Side side);

  const RingPtr& ring() const noexcept { return data_->ring; }
  Side side() const noexcept { return data_->side; }
  std::size_t dim() const noexcept { return data_->dim; }
  const Field& field() const noexcept { return data_->ring->field(); }
  const AlgebraPresentation& acting_algebra() const { return data_->ring->acting(data_->side); }
  const Mat& action(std::size_t j) const { return data_->action[j]; }
  const std::vector<Mat>& actions() const noexcept { return data_->action; }

  /// Matrix by which the algebra element `a` (coordinates) acts.
  Mat act(std::span<const Residue> a) const;
  /// Submodule generated by the rows of `vectors`, as an RREF basis.
  Mat submodule_generated(const Mat& vectors) const;

  bool same_category(const ModuleRep& other) const noexcept;

  /// Natural-order presentation, computed once and shared by copies.
  const Presentation& presentation() const;

  friend bool operator==(const ModuleRep& a, const ModuleRep& b);

 private:
  struct Data {
    Data(RingPtr r, Side s, std::size_t d, std::vector<Mat> a)
        : ring(std::move(r)), side(s), dim(d), action(std::move(a)) {}
    RingPtr ring;
    Side side;
    std::size_t dim;
    std::vector<Mat> action;
    mutable std::once_flag presented;
    mutable std::unique_ptr<Presentation> presentation;
  };
  explicit ModuleRep(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Greedy scan: candidates (rows of `candidates`, visited in `order`) are kept
/// when they leave the submodule generated so far. Kept rows the others already
/// generate are then dropped, and pairs are merged into their sum when the sum
/// generates both. Returns the generators as rows.
Mat greedy_generators(const ModuleRep& m, const Mat& candidates, const ScanOrder& order = {});
/// Presentation of M with generators scanned from the standard basis.
Presentation present(const ModuleRep& m, const ScanOrder& order = {});

/// Empty optional when M is a module; otherwise a description of the first failure.
std::optional<std::string> module_defect(const RingPtr& ring, Side side,
                                         const std::vector<Mat>& action);

class ModuleMorphism {
 public:
  /// Validates shapes, sides and the intertwining law.
  ModuleMorphism(ModuleRep source, ModuleRep target, Mat matrix);
  static ModuleMorphism trusted(ModuleRep source, ModuleRep target, Mat matrix);
  static ModuleMorphism zero(ModuleRep source, ModuleRep target);
  static ModuleMorphism identity(ModuleRep m);

  const ModuleRep& source() const noexcept { return source_; }
  const ModuleRep& target() const noexcept { return target_; }
  const Mat& matrix() const noexcept { return matrix_; }
  bool is_zero() const { return matrix_.is_zero(); }

 private:
  struct Trusted {};
  ModuleMorphism(Trusted, ModuleRep source, ModuleRep target, Mat matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}
  ModuleRep source_;
  ModuleRep target_;
  Mat matrix_;
};

bool intertwines(const ModuleRep& source, const ModuleRep& target, const Mat& matrix);

/// g after f.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g);
ModuleMorphism scale(const ModuleMorphism& f, Residue c);

struct Kernel {
  ModuleRep module;
  ModuleMorphism inclusion;
};
struct Cokernel {
  ModuleRep module;
  ModuleMorphism projection;
};
struct DirectSum {
  ModuleRep module;
  std::array<ModuleMorphism, 2> injections;
  std::array<ModuleMorphism, 2> projections;
};

/// Basis of the kernel = RREF of {v : v F = 0}.
Kernel kernel_module(const ModuleMorphism& f);
/// Basis of the cokernel = images of the standard vectors at the non-pivot
/// columns of the row-reduced image.
Cokernel cokernel_module(const ModuleMorphism& f);
/// Quotient of M by the submodule spanned by the rows of `sub`.
Cokernel quotient_module(const ModuleRep& m, const Mat& sub);
DirectSum direct_sum(const ModuleRep& m, const ModuleRep& n);
/// Column map [f g]: M -> N1 + N2 ... in row convention: v -> (v f, v g).
ModuleMorphism pair_into_sum(const ModuleMorphism& f, const ModuleMorphism& g, const DirectSum& sum);
/// (u, w) -> f(u) + g(w) out of M1 + M2.
ModuleMorphism copair_out_of_sum(const ModuleMorphism& f, const ModuleMorphism& g,
                                 const DirectSum& sum);

struct Pushout {
  ModuleRep module;
  ModuleMorphism from_first;   // T1 -> P
  ModuleMorphism from_second;  // T2 -> P
  ModuleMorphism quotient;     // T1 + T2 -> P
};
/// Pushout of a: S -> T1 and b: S -> T2, i.e. (T1 + T2) / {(a s, -b s)}.
Pushout pushout(const ModuleMorphism& a, const ModuleMorphism& b);
/// For a surjection q: T -> Q and phi: T -> X vanishing on ker q, the map Q -> X
/// with q then it equal to phi.
ModuleMorphism descend(const ModuleMorphism& q, const ModuleMorphism& phi);

bool is_injective_map(const ModuleMorphism& f);
bool is_surjective_map(const ModuleMorphism& f);
/// Iso test plus the inverse if bijective.
std::optional<ModuleMorphism> inverse(const ModuleMorphism& f);

/// D(M) = Hom_k(M, k) on the flipped side; actions are transposes.
ModuleRep dual_module(const ModuleRep& m);
/// D(f): D(N) -> D(M), matrix F^T.
ModuleMorphism dual_morphism(const ModuleMorphism& f);

ModuleRep regular_module(const RingPtr& ring, Side side);
ModuleRep free_module(const RingPtr& ring, Side side, std::size_t rank);

}  // namespace phantomkit
