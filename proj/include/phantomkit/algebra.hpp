#pragma once

// Finite-dimensional unital associative algebras over F_p given by structure
// constants: e_i * e_j = sum_k mult(i, j, k) e_k.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phantomkit/matrix.hpp"

namespace phantomkit {

/// Which side a module lives on. Left A-modules are handled as right modules
/// over the opposite algebra.
enum class Side { Right, Left };

constexpr Side flip(Side s) noexcept { return s == Side::Right ? Side::Left : Side::Right; }
std::string_view to_string(Side s);

class AlgebraPresentation {
 public:
  /// `mult` is indexed [(i * dim + j) * dim + k]. Entries are reduced mod p.
  AlgebraPresentation(std::string name, Field field, std::size_t dim, std::vector<Residue> mult,
                      Vec unit, std::optional<int> declared_gorenstein = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vec& unit() const noexcept { return unit_; }
  std::optional<int> declared_gorenstein() const noexcept { return declared_gorenstein_; }
  const std::vector<Residue>& table() const noexcept { return mult_; }

  Residue structure(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  /// Coordinates of e_i * e_j.
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec multiply(std::span<const Residue> a, std::span<const Residue> b) const;

  /// Matrix of y -> y * e_j in the row convention (row i holds e_i * e_j).
  Mat right_mult(std::size_t j) const;
  /// Matrix of y -> e_j * y in the row convention (row i holds e_j * e_i).
  Mat left_mult(std::size_t j) const;

  AlgebraPresentation with_name(std::string name) const;
  AlgebraPresentation with_gorenstein(std::optional<int> n) const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

 private:
  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<Residue> mult_;
  Vec unit_;
  std::optional<int> declared_gorenstein_;
};

struct AlgebraDefect {
  enum class Kind { NonAssociative, BadUnit };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message() const;
};

/// Checks associativity and the unit law on every basis triple / element.
std::optional<AlgebraDefect> validate_algebra(const AlgebraPresentation& a);
/// Throws NonAssociative / BadUnit.
void require_valid(const AlgebraPresentation& a);

AlgebraPresentation opposite_algebra(const AlgebraPresentation& a);

/// A validated algebra bundled with its opposite and a generating set. Every
/// module carries a shared pointer to the Ring it lives over.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(AlgebraPresentation a);

  const AlgebraPresentation& base() const noexcept { return base_; }
  const AlgebraPresentation& opposite() const noexcept { return opposite_; }
  /// The algebra acting on the right of modules of side `s`.
  const AlgebraPresentation& acting(Side s) const noexcept {
    return s == Side::Right ? base_ : opposite_;
  }
  /// Basis indices generating the algebra together with the unit (same set
  /// generates the opposite algebra).
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const Field& field() const noexcept { return base_.field(); }
  std::size_t dim() const noexcept { return base_.dim(); }
  const std::string& name() const noexcept { return base_.name(); }

 private:
  explicit Ring(AlgebraPresentation a);
  AlgebraPresentation base_;
  AlgebraPresentation opposite_;
  std::vector<std::size_t> generators_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Subalgebra generated by the unit and the listed basis elements, as a subspace basis.
Mat generated_subalgebra(const AlgebraPresentation& a, const std::vector<std::size_t>& gens);

// ---------------------------------------------------------------- catalog

/// Keys: "field", "truncated_poly" (params {m}), "group_C<n>" or "group_C" (params {n}),
/// "triangular_2", "nakayama" (params = Kupisch series; last entry 1 = linear,
/// otherwise cyclic).
AlgebraPresentation catalog_algebra(std::string_view key, std::uint32_t p,
                                    const std::vector<int>& params = {});

/// Parses "key[:a,b,...][@p=<prime>]" and also the "truncated_poly 2" form,
/// e.g. "truncated_poly:3@p=3", "group_C2@p=2", "nakayama:2,2,1@p=2".
AlgebraPresentation catalog_algebra(std::string_view spec);

}  // namespace phantomkit
