#include <string>

#include "phantomkit/hom.hpp"
#include "phantomkit/theoremlab.hpp"

namespace phantomkit {

namespace {

std::string tag(Side s) { return s == Side::Right ? "_r" : "_l"; }

bool contains(const std::vector<PoolEntry>& list, const ModuleRep& m) {
  for (const auto& e : list)
    if (e.module == m) return true;
  return false;
}

}  // namespace

void Pool::add_one(const std::string& label, const ModuleRep& m) {
  if (m.dim() == 0) return;
  auto& list = m.side() == Side::Right ? right : left;
  if (!contains(list, m)) list.push_back({label, m});
}

void Pool::add(const std::string& label, const ModuleRep& m) {
  if (m.dim() == 0) return;
  auto& own = m.side() == Side::Right ? right : left;
  if (contains(own, m)) return;
  add_one(label, m);
  add_one("D(" + label + ")", dual_module(m));
}

Pool standard_pool(const RingPtr& ring, const PoolOptions& opts) {
  Pool pool;
  for (Side side : {Side::Right, Side::Left}) {
    const std::string t = tag(side);
    ModuleRep a = regular_module(ring, side);
    pool.add("A" + t, a);
    pool.add("star(A" + t + ")", star_module(a));
    auto simples = simple_modules(ring, side);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      const std::string name = "S" + std::to_string(i) + t;
      pool.add(name, simples[i]);
      pool.add("star(" + name + ")", star_module(simples[i]));
      if (opts.syzygy_depth == 0) continue;
      FreeResolution res(simples[i], opts.syzygy_depth - 1);
      for (std::size_t j = 1; j <= opts.syzygy_depth; ++j)
        pool.add("Omega" + std::to_string(j) + "(" + name + ")", res.syzygy(j));
    }
  }
  for (std::size_t idx = 0; idx < opts.random_count; ++idx) {
    const Side side = idx % 2 == 0 ? Side::Right : Side::Left;
    Rng rng = derived_rng(opts.seed ^ 0x706F6F6CULL, idx);
    pool.add("rand" + std::to_string(idx) + tag(side),
             gen_random_module(ring, side, opts.random_max_dim, rng));
  }
  return pool;
}

Pool gp_pool(const Pool& pool, const GorensteinCertificate& cert) {
  Pool out;
  for (const auto* list : {&pool.right, &pool.left}) {
    for (const auto& e : *list)
      if (gp_test(e.module, cert).verdict) out.add_one(e.label, e.module);
    if (cert.n == 0) continue;
    for (const auto& e : *list)
      out.add_one("Omega" + std::to_string(cert.n) + "(" + e.label + ")", syzygy(e.module, cert.n));
  }
  return out;
}

}  // namespace phantomkit
