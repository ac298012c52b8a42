#pragma once

// Ext^i(M, N), Tor_i(M, Y) as explicit F_p-spaces and the induced maps
// Ext^i(f, X), Ext^i(X, f), Tor_i(f, Y).
//
// Ext^i(M, N) is the cohomology of N^{r_0} -> N^{r_1} -> ... (Hom(F_i, N) =
// N^{r_i}); Tor_i(M, Y) the homology of ... -> Y^{r_1} -> Y^{r_0}
// (F_i (x)_A Y = Y^{r_i}). Only rank data of induced maps is basis independent.

#include <memory>

#include "phantomkit/resolve.hpp"

namespace phantomkit {

struct HomologyOptions {
  ScanOrder order;
  ResolutionCache* cache = nullptr;
  std::size_t max_degree = 6;
};

struct ExtSpace {
  ModuleRep m;
  ModuleRep n;
  std::size_t degree = 0;
  std::shared_ptr<const FreeResolution> resolution;
  la::Subquotient homology;  // inside N^{r_degree}
  std::size_t dim() const noexcept { return homology.dim(); }
  const Mat& cocycle_basis() const noexcept { return homology.representatives(); }
};

struct TorSpace {
  ModuleRep m;
  ModuleRep y;
  std::size_t degree = 0;
  std::shared_ptr<const FreeResolution> resolution;
  la::Subquotient homology;  // inside Y^{r_degree}
  std::size_t dim() const noexcept { return homology.dim(); }
  const Mat& cycle_basis() const noexcept { return homology.representatives(); }
};

enum class FunctorKind { ExtContra, ExtCov, Tor };
std::string_view to_string(FunctorKind k);

struct InducedMap {
  FunctorKind kind = FunctorKind::ExtContra;
  std::size_t degree = 0;
  Mat matrix;  // source class coordinates -> target class coordinates
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool is_zero() const noexcept { return rank == 0; }
  bool is_monic() const noexcept { return rank == source_dim; }
  bool is_epic() const noexcept { return rank == target_dim; }
};

ExtSpace ext_space(const ModuleRep& m, const ModuleRep& n, std::size_t i, const HomologyOptions& opts = {});
/// Uses `res`, which must have length >= i + 1.
ExtSpace ext_space(std::shared_ptr<const FreeResolution> res, const ModuleRep& n, std::size_t i);

/// Throws SideMismatch unless Y lives on the side opposite to M.
TorSpace tor_space(const ModuleRep& m, const ModuleRep& y, std::size_t i, const HomologyOptions& opts = {});
TorSpace tor_space(std::shared_ptr<const FreeResolution> res, const ModuleRep& y, std::size_t i);

/// Chain map lifting f far enough for degree-i induced maps.
ChainMap lift_for_degree(const ModuleMorphism& f, std::size_t i, const HomologyOptions& opts = {});

/// Ext^i(N, X) -> Ext^i(M, X) for f: M -> N.
InducedMap ext_map_contra(const ModuleMorphism& f, const ModuleRep& x, std::size_t i,
                          const HomologyOptions& opts = {});
InducedMap ext_map_contra(const ChainMap& lift, const ModuleRep& x, std::size_t i);
/// Ext^i(X, M) -> Ext^i(X, N) for f: M -> N.
InducedMap ext_map_cov(const ModuleRep& x, const ModuleMorphism& f, std::size_t i,
                       const HomologyOptions& opts = {});
InducedMap ext_map_cov(std::shared_ptr<const FreeResolution> res_x, const ModuleMorphism& f, std::size_t i);
/// Tor_i(M, Y) -> Tor_i(N, Y) for f: M -> N.
InducedMap tor_map(const ModuleMorphism& f, const ModuleRep& y, std::size_t i,
                   const HomologyOptions& opts = {});
InducedMap tor_map(const ChainMap& lift, const ModuleRep& y, std::size_t i);

/// Map on (co)homology induced by a chain-level matrix between ambient spaces.
InducedMap induced_on_homology(FunctorKind kind, std::size_t degree, const la::Subquotient& source,
                               const la::Subquotient& target, const Mat& chain_map);

}  // namespace phantomkit
