#pragma once

// Free covers, syzygies, truncated free resolutions and chain-map lifts.
//
// A map between free modules A^s -> A^r is stored by generator images: row u
// of `images` holds the A^r coordinates (index t * dim A + i) of the image of
// the u-th generator. Its k-matrix (row convention) has row (u, i) equal to
// images_u * e_i.

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "phantomkit/hom.hpp"
#include "phantomkit/module.hpp"

namespace phantomkit {

struct FreeMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  Mat images;  // source_rank x (target_rank * dim A)
};

/// k-matrix of a free map over the acting algebra `alg`.
Mat free_map_matrix(const AlgebraPresentation& alg, const FreeMap& f);
/// Hom(-, X) applied to f: X^target_rank -> X^source_rank, block (t, u) = X(a_ut).
Mat hom_matrix(const ModuleRep& x, const FreeMap& f);
/// f (x)_A Y: Y^source_rank -> Y^target_rank, block (u, t) = Y(a_ut).
Mat tensor_matrix(const ModuleRep& y, const FreeMap& f);
/// Rows of `rows` (vectors of A^r) times e_j.
Mat free_act(const AlgebraPresentation& alg, const Mat& rows, std::size_t j);

struct FreeCover {
  ModuleRep module;
  std::size_t rank = 0;
  ModuleMorphism projection;  // A^rank -> module
  Mat generators;             // rank x dim module
};

FreeCover free_cover(const ModuleRep& m, const ScanOrder& order = {});

/// F_L -> ... -> F_0 -> M -> 0 together with Omega^0 .. Omega^{L+1}.
class FreeResolution {
 public:
  FreeResolution(ModuleRep m, std::size_t length, ScanOrder order = {});

  const ModuleRep& module() const noexcept { return syzygies_.front(); }
  std::size_t length() const noexcept { return presentations_.size() - 1; }
  const ScanOrder& order() const noexcept { return order_; }
  std::size_t rank(std::size_t i) const { return presentations_.at(i).rank(); }
  std::vector<std::size_t> ranks() const;
  /// d_i: F_i -> F_{i-1} for 1 <= i <= length.
  const FreeMap& differential(std::size_t i) const { return differentials_.at(i - 1); }
  /// Omega^i M for 0 <= i <= length + 1.
  const ModuleRep& syzygy(std::size_t i) const { return syzygies_.at(i); }
  /// Presentation of Omega^i M whose cover is F_i, 0 <= i <= length.
  const Presentation& presentation(std::size_t i) const { return presentations_.at(i); }
  /// Basis of Omega^i M inside F_{i-1} (RREF), 1 <= i <= length + 1.
  const la::Subspace& syzygy_basis(std::size_t i) const { return presentations_.at(i - 1).kernel; }
  /// The same resolution carried on to a longer length (prefix unchanged).
  FreeResolution extended(std::size_t length) const;

 private:
  FreeResolution() = default;
  void push_stage();

  ScanOrder order_;
  std::vector<ModuleRep> syzygies_;
  std::vector<Presentation> presentations_;
  std::vector<FreeMap> differentials_;
};

struct ResolutionCheck {
  bool composites_vanish = true;  // d_{i-1} d_i = 0 and cover d_1 = 0
  bool exact = true;              // rank bookkeeping at every spot
};
ResolutionCheck check_resolution(const FreeResolution& res);

ModuleRep syzygy(const ModuleRep& m, std::size_t i, const ScanOrder& order = {});
FreeResolution free_resolution(const ModuleRep& m, std::size_t length, const ScanOrder& order = {});

struct ChainMap {
  std::shared_ptr<const FreeResolution> source;
  std::shared_ptr<const FreeResolution> target;
  std::vector<FreeMap> stages;  // phi_0 .. phi_L
  ModuleMorphism base;
  /// Omega^i f, 0 <= i <= stages.size().
  ModuleMorphism syzygy_map(std::size_t i) const;
};

/// Lifts f: M -> N to phi_0 .. phi_stages-1. Resolutions must have length >= stages - 1.
ChainMap lift_to_chain_map(const ModuleMorphism& f, std::shared_ptr<const FreeResolution> res_m,
                           std::shared_ptr<const FreeResolution> res_n, std::size_t stages);
/// Squares d^N_i phi_i = phi_{i-1} d^M_i and cover_N phi_0 = f cover_M.
bool chain_map_commutes(const ChainMap& c);

ModuleMorphism syzygy_morphism(const ModuleMorphism& f, std::size_t i, const ScanOrder& order = {});

struct ProjectivityTest {
  bool projective = false;
  std::optional<Mat> splitting;  // s: M -> F_0 with s * cover = id
};
ProjectivityTest projectivity_test(const ModuleRep& m);
bool is_projective(const ModuleRep& m);
/// D(M) projective on the other side.
bool is_injective(const ModuleRep& m);

/// M -> E = D(free cover of D(M)); injective with E injective.
ModuleMorphism injective_envelope_embed(const ModuleRep& m);

struct GpCosyzygy {
  ModuleMorphism embedding;  // K -> F*, F* free
  Cokernel cokernel;
};
/// Right half of a complete resolution: K = K** -> F* from a free cover F of K*.
/// Throws NotReflexive.
GpCosyzygy gp_cosyzygy(const ModuleRep& k);

/// Memo of resolutions keyed by module content, ring, side and scan order.
/// Lookups return values equal to fresh computations.
class ResolutionCache {
 public:
  std::shared_ptr<const FreeResolution> get(const ModuleRep& m, std::size_t length,
                                            const ScanOrder& order = {});
  std::size_t size() const;
  void clear();
  /// Every stored resolution.
  std::vector<std::shared_ptr<const FreeResolution>> snapshot() const;

 private:
  static std::string key(const ModuleRep& m, const ScanOrder& order);
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const FreeResolution>> entries_;
};

/// Resolution from the cache when given, else a fresh one.
std::shared_ptr<const FreeResolution> resolution_of(const ModuleRep& m, std::size_t length,
                                                    const ScanOrder& order, ResolutionCache* cache);

}  // namespace phantomkit
