#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "phantomkit/phantomkit.hpp"

namespace pk = phantomkit;

namespace support {

inline pk::RingPtr ring(const std::string& spec) { return pk::Ring::make(pk::catalog_algebra(spec)); }

inline pk::Mat mat(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<long long> entries) {
  return pk::Mat::from_entries(pk::Field(p), rows, cols, entries);
}

/// 1-dimensional module on which basis element j acts by scalars[j].
inline pk::ModuleRep one_dim(const pk::RingPtr& r, pk::Side side, const std::vector<long long>& scalars) {
  std::vector<pk::Mat> act;
  for (long long s : scalars) act.push_back(mat(r->field().p(), 1, 1, {s}));
  return pk::ModuleRep(r, side, std::move(act));
}

/// Trivial module k over k[x]/(x^m) or a group algebra: the unit acts by 1, the rest
/// by `rest`.
inline pk::ModuleRep trivial(const pk::RingPtr& r, pk::Side side, long long rest = 0) {
  std::vector<long long> s(r->dim(), rest);
  s[0] = 1;
  return one_dim(r, side, s);
}

/// Over triangular_2 (basis e11, e12, e22): the simple where e11 acts by 1
/// (not projective) and the one where e22 acts by 1 (projective).
inline pk::ModuleRep tri_simple_top(const pk::RingPtr& r, pk::Side side = pk::Side::Right) {
  return one_dim(r, side, {1, 0, 0});
}
inline pk::ModuleRep tri_simple_proj(const pk::RingPtr& r, pk::Side side = pk::Side::Right) {
  return one_dim(r, side, {0, 0, 1});
}

inline bool isomorphic(const pk::ModuleRep& a, const pk::ModuleRep& b) {
  if (a.dim() != b.dim() || a.side() != b.side()) return false;
  if (a.dim() == 0) return true;
  pk::HomSpace h = pk::hom_space(a, b);
  // an F_p-combination of basis maps that is bijective; try small coefficient vectors
  const std::uint32_t p = a.field().p();
  const std::size_t d = h.dim();
  if (d == 0) return false;
  std::vector<pk::Residue> c(d, 0);
  for (std::size_t tries = 0; tries < 4096; ++tries) {
    std::size_t code = tries + 1;
    for (std::size_t k = 0; k < d; ++k, code /= p) c[k] = code % p;
    pk::Mat m = h.combine(c);
    if (pk::la::rank(m) == a.dim()) return true;
    if (tries + 1 >= static_cast<std::size_t>(std::min<double>(4095, std::pow(p, d) - 1))) break;
  }
  return false;
}

}  // namespace support
