#pragma once

// Reference computations for the tests, written against plain integer
// matrices so they share no code with the library's elimination, Hom or
// tensor routines.

#include <cstdint>
#include <vector>

#include "phantomkit/phantomkit.hpp"

namespace oracle {

using Rows = std::vector<std::vector<long long>>;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inv(long long a, long long p) {
  long long r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Rank by textbook Gaussian elimination.
inline std::size_t rank(Rows m, long long p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c], p);
    for (auto& x : m[r]) x = mod(x * iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const long long f = mod(m[i][c], p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

inline Rows rows_of(const phantomkit::Mat& a) {
  Rows out(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c);
  return out;
}

/// dim Hom_A(M, N) from the intertwining equations A_M F = F A_N.
inline std::size_t hom_dim(const phantomkit::ModuleRep& m, const phantomkit::ModuleRep& n) {
  const std::size_t a = m.dim(), b = n.dim();
  if (a == 0 || b == 0) return 0;
  const long long p = m.field().p();
  Rows eqs;
  for (std::size_t j = 0; j < m.actions().size(); ++j) {
    Rows am = rows_of(m.action(j)), an = rows_of(n.action(j));
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < b; ++c) {
        std::vector<long long> eq(a * b, 0);
        for (std::size_t k = 0; k < a; ++k) eq[k * b + c] += am[r][k];
        for (std::size_t k = 0; k < b; ++k) eq[r * b + k] -= an[k][c];
        eqs.push_back(std::move(eq));
      }
  }
  return a * b - rank(eqs, p);
}

/// dim Hom_A(M, N) by enumerating every matrix; only for tiny spaces.
inline std::size_t hom_dim_enumerated(const phantomkit::ModuleRep& m, const phantomkit::ModuleRep& n) {
  const std::size_t a = m.dim(), b = n.dim(), cells = a * b;
  const std::uint64_t p = m.field().p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    phantomkit::Mat f(m.field(), a, b);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cells; ++i, c /= p) f.set(i / b, i % b, static_cast<phantomkit::Residue>(c % p));
    bool ok = true;
    for (std::size_t j = 0; ok && j < m.actions().size(); ++j) ok = m.action(j) * f == f * n.action(j);
    count += ok;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= p;
    ++dim;
  }
  return dim;
}

/// dim M (x)_A Y: M (x)_k Y modulo (m e_j) (x) y - m (x) (e_j y).
inline std::size_t tensor_dim(const phantomkit::ModuleRep& m, const phantomkit::ModuleRep& y) {
  const std::size_t a = m.dim(), b = y.dim();
  if (a == 0 || b == 0) return 0;
  const long long p = m.field().p();
  Rows rel;
  for (std::size_t j = 0; j < m.actions().size(); ++j) {
    Rows am = rows_of(m.action(j)), ay = rows_of(y.action(j));
    for (std::size_t u = 0; u < a; ++u)
      for (std::size_t v = 0; v < b; ++v) {
        std::vector<long long> r(a * b, 0);
        for (std::size_t c = 0; c < a; ++c) r[c * b + v] += am[u][c];
        for (std::size_t d = 0; d < b; ++d) r[u * b + d] -= ay[v][d];
        rel.push_back(std::move(r));
      }
  }
  return a * b - rank(rel, p);
}

/// dim Ext^i(M, N) for i >= 1 from 0 -> Omega^i M -> F_{i-1} -> Omega^{i-1} M -> 0:
/// dim Ext^1(K, N) = hom(Omega K, N) - rank F * dim N + hom(K, N).
inline std::size_t ext_dim(const phantomkit::ModuleRep& m, const phantomkit::ModuleRep& n, std::size_t i) {
  if (i == 0) return hom_dim(m, n);
  phantomkit::FreeResolution res(m, i);
  const auto& k = res.syzygy(i - 1);
  const auto& omega = res.syzygy(i);
  return hom_dim(omega, n) + hom_dim(k, n) - res.rank(i - 1) * n.dim();
}

/// dim Tor_i(M, Y) for i >= 1 from the same sequence tensored with Y.
inline std::size_t tor_dim(const phantomkit::ModuleRep& m, const phantomkit::ModuleRep& y, std::size_t i) {
  if (i == 0) return tensor_dim(m, y);
  phantomkit::FreeResolution res(m, i);
  const auto& k = res.syzygy(i - 1);
  const auto& omega = res.syzygy(i);
  return tensor_dim(omega, y) + tensor_dim(k, y) - res.rank(i - 1) * y.dim();
}

}  // namespace oracle
