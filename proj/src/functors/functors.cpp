#include "phantomkit/functors.hpp"

#include "phantomkit/error.hpp"

namespace phantomkit {

namespace {

void check_degree(std::size_t i, const HomologyOptions& opts) {
  if (i > opts.max_degree)
    throw Error(ErrorKind::BadParams, "degree " + std::to_string(i) + " exceeds the cap " +
                                          std::to_string(opts.max_degree));
}

void check_tor_sides(const ModuleRep& m, const ModuleRep& y) {
  if (y.side() != flip(m.side()) || !(m.ring()->base() == y.ring()->base()))
    throw Error(ErrorKind::SideMismatch, "Tor needs modules on opposite sides of one algebra");
}

}  // namespace

std::string_view to_string(FunctorKind k) {
  switch (k) {
    case FunctorKind::ExtContra: return "ext_contra";
    case FunctorKind::ExtCov: return "ext_cov";
    case FunctorKind::Tor: return "tor";
  }
  return "?";
}

ExtSpace ext_space(std::shared_ptr<const FreeResolution> res, const ModuleRep& n, std::size_t i) {
  if (!res->module().same_category(n)) throw Error(ErrorKind::SideMismatch, "Ext between different categories");
  if (res->length() < i + 1) throw Error(ErrorKind::ShapeMismatch, "resolution too short");
  const Field& f = n.field();
  const std::size_t amb = res->rank(i) * n.dim();
  la::Subspace cycles = la::left_kernel(hom_matrix(n, res->differential(i + 1)));
  la::Subspace bounds = i == 0 ? la::Subspace(f, amb) : la::image(hom_matrix(n, res->differential(i)));
  la::Subquotient h(cycles, bounds);
  return ExtSpace{res->module(), n, i, std::move(res), std::move(h)};
}

ExtSpace ext_space(const ModuleRep& m, const ModuleRep& n, std::size_t i, const HomologyOptions& opts) {
  check_degree(i, opts);
  return ext_space(resolution_of(m, i + 1, opts.order, opts.cache), n, i);
}

TorSpace tor_space(std::shared_ptr<const FreeResolution> res, const ModuleRep& y, std::size_t i) {
  check_tor_sides(res->module(), y);
  if (res->length() < i + 1) throw Error(ErrorKind::ShapeMismatch, "resolution too short");
  const Field& f = y.field();
  const std::size_t amb = res->rank(i) * y.dim();
  la::Subspace cycles = i == 0 ? la::Subspace::full(f, amb) : la::left_kernel(tensor_matrix(y, res->differential(i)));
  la::Subspace bounds = la::image(tensor_matrix(y, res->differential(i + 1)));
  la::Subquotient h(cycles, bounds);
  return TorSpace{res->module(), y, i, std::move(res), std::move(h)};
}

TorSpace tor_space(const ModuleRep& m, const ModuleRep& y, std::size_t i, const HomologyOptions& opts) {
  check_degree(i, opts);
  check_tor_sides(m, y);
  return tor_space(resolution_of(m, i + 1, opts.order, opts.cache), y, i);
}

InducedMap induced_on_homology(FunctorKind kind, std::size_t degree, const la::Subquotient& source,
                               const la::Subquotient& target, const Mat& chain_map) {
  const Field& f = chain_map.field();
  Mat m(f, source.dim(), target.dim());
  for (std::size_t k = 0; k < source.dim(); ++k)
    m.set_row(k, target.coordinates(row_times(source.representatives().row(k), chain_map)));
  const std::size_t rank = la::rank(m);
  return InducedMap{kind, degree, std::move(m), rank, source.dim(), target.dim()};
}

ChainMap lift_for_degree(const ModuleMorphism& f, std::size_t i, const HomologyOptions& opts) {
  check_degree(i, opts);
  auto rm = resolution_of(f.source(), i + 1, opts.order, opts.cache);
  auto rn = resolution_of(f.target(), i + 1, opts.order, opts.cache);
  return lift_to_chain_map(f, std::move(rm), std::move(rn), i + 1);
}

InducedMap ext_map_contra(const ChainMap& lift, const ModuleRep& x, std::size_t i) {
  if (lift.stages.size() < i + 1) throw Error(ErrorKind::ShapeMismatch, "chain map too short");
  ExtSpace src = ext_space(lift.target, x, i);
  ExtSpace dst = ext_space(lift.source, x, i);
  return induced_on_homology(FunctorKind::ExtContra, i, src.homology, dst.homology,
                             hom_matrix(x, lift.stages[i]));
}

InducedMap ext_map_contra(const ModuleMorphism& f, const ModuleRep& x, std::size_t i,
                          const HomologyOptions& opts) {
  return ext_map_contra(lift_for_degree(f, i, opts), x, i);
}

InducedMap ext_map_cov(std::shared_ptr<const FreeResolution> res_x, const ModuleMorphism& f, std::size_t i) {
  ExtSpace src = ext_space(res_x, f.source(), i);
  ExtSpace dst = ext_space(res_x, f.target(), i);
  return induced_on_homology(FunctorKind::ExtCov, i, src.homology, dst.homology,
                             block_diag_power(f.matrix(), res_x->rank(i)));
}

InducedMap ext_map_cov(const ModuleRep& x, const ModuleMorphism& f, std::size_t i, const HomologyOptions& opts) {
  check_degree(i, opts);
  return ext_map_cov(resolution_of(x, i + 1, opts.order, opts.cache), f, i);
}

InducedMap tor_map(const ChainMap& lift, const ModuleRep& y, std::size_t i) {
  if (lift.stages.size() < i + 1) throw Error(ErrorKind::ShapeMismatch, "chain map too short");
  TorSpace src = tor_space(lift.source, y, i);
  TorSpace dst = tor_space(lift.target, y, i);
  return induced_on_homology(FunctorKind::Tor, i, src.homology, dst.homology, tensor_matrix(y, lift.stages[i]));
}

InducedMap tor_map(const ModuleMorphism& f, const ModuleRep& y, std::size_t i, const HomologyOptions& opts) {
  return tor_map(lift_for_degree(f, i, opts), y, i);
}

}  // namespace phantomkit
