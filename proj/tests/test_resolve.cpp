#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace phantomkit;
using support::isomorphic;
using support::trivial;

namespace {

const std::vector<std::string> kAlgebras = {"field@p=2",     "truncated_poly:2@p=2", "truncated_poly:3@p=3",
                                            "group_C2@p=2",  "triangular_2",         "nakayama:2,2,1@p=2",
                                            "nakayama:2,2@p=3"};

}  // namespace

TEST(FreeCover, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto a = regular_module(r, Side::Right);
  auto k = trivial(r, Side::Right);
  auto ca = free_cover(a);
  EXPECT_EQ(ca.rank, 1u);
  EXPECT_TRUE(inverse(ca.projection).has_value());
  EXPECT_EQ(free_cover(k).rank, 1u);
  EXPECT_EQ(free_cover(direct_sum(k, k).module).rank, 2u);
}

TEST(Syzygy, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto k = trivial(r, Side::Right);
  EXPECT_EQ(syzygy(free_module(r, Side::Right, 3), 1).dim(), 0u);
  EXPECT_TRUE(isomorphic(syzygy(k, 1), k));
  EXPECT_TRUE(isomorphic(syzygy(k, 2), k));
}

TEST(Resolution, PeriodicResolutionOfTrivialModule) {
  auto r = support::ring("truncated_poly:2@p=2");
  FreeResolution res(trivial(r, Side::Right), 4);
  for (std::size_t i = 0; i <= 4; ++i) {
    EXPECT_EQ(res.rank(i), 1u);
    EXPECT_EQ(res.syzygy(i + 1).dim(), 1u);
  }
  // each differential is multiplication by x on A
  for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(res.differential(i).images, support::mat(2, 1, 2, {0, 1}));
}

TEST(Resolution, ChecksHoldOnRandomModulesAndScanOrders) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    for (std::size_t t = 0; t < 8; ++t) {
      Rng rng = derived_rng(900, t);
      auto m = gen_random_module(r, t % 2 ? Side::Left : Side::Right, 5, rng);
      for (ScanOrder order : {ScanOrder::natural(), ScanOrder::reversed(), ScanOrder::shuffled(t + 1)}) {
        FreeResolution res(m, 3, order);
        auto c = check_resolution(res);
        ASSERT_TRUE(c.composites_vanish) << spec;
        ASSERT_TRUE(c.exact) << spec;
        for (std::size_t i = 0; i <= 3; ++i)
          ASSERT_EQ(res.syzygy(i).dim() + res.syzygy(i + 1).dim(), res.rank(i) * r->dim());
      }
    }
  }
}

TEST(Resolution, ExtendedKeepsPrefix) {
  auto r = support::ring("nakayama:2,2@p=3");
  Rng rng = derived_rng(901, 0);
  auto m = gen_random_module(r, Side::Right, 4, rng);
  FreeResolution shortres(m, 1);
  FreeResolution longres = shortres.extended(3);
  FreeResolution fresh(m, 3);
  EXPECT_EQ(longres.ranks(), fresh.ranks());
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(longres.differential(i).images, fresh.differential(i).images);
}

TEST(ChainMap, ZeroAndIdentity) {
  auto r = support::ring("truncated_poly:3@p=3");
  Rng rng = derived_rng(902, 0);
  auto m = gen_random_module(r, Side::Right, 4, rng);
  auto n = gen_random_module(r, Side::Right, 4, rng);
  auto rm = std::make_shared<const FreeResolution>(m, 3);
  auto rn = std::make_shared<const FreeResolution>(n, 3);
  auto zero = lift_to_chain_map(ModuleMorphism::zero(m, n), rm, rn, 3);
  EXPECT_TRUE(chain_map_commutes(zero));
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_TRUE(zero.syzygy_map(i).is_zero());
  auto id = lift_to_chain_map(ModuleMorphism::identity(m), rm, rm, 3);
  EXPECT_TRUE(chain_map_commutes(id));
}

TEST(ChainMap, RandomLiftsCommute) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    for (std::size_t t = 0; t < 6; ++t) {
      Rng rng = derived_rng(903, t);
      auto m = gen_random_module(r, Side::Right, 4, rng);
      auto n = gen_random_module(r, Side::Right, 4, rng);
      auto f = gen_random_morphism(m, n, rng);
      auto c = lift_to_chain_map(f, std::make_shared<const FreeResolution>(m, 2),
                                 std::make_shared<const FreeResolution>(n, 2), 3);
      ASSERT_TRUE(chain_map_commutes(c)) << spec;
      for (std::size_t i = 0; i <= 3; ++i) ASSERT_TRUE(intertwines(c.syzygy_map(i).source(), c.syzygy_map(i).target(),
                                                                   c.syzygy_map(i).matrix()));
    }
  }
}

TEST(ChainMap, ProjectionSyzygyIsZeroMapFromZero) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto a = regular_module(r, Side::Right);
  auto k = trivial(r, Side::Right);
  ModuleMorphism pi(a, k, support::mat(2, 2, 1, {1, 0}));
  auto om = syzygy_morphism(pi, 1);
  EXPECT_EQ(om.source().dim(), 0u);
  EXPECT_EQ(om.target().dim(), 1u);
}

TEST(Projectivity, Examples) {
  auto t = support::ring("truncated_poly:2@p=2");
  EXPECT_TRUE(is_projective(regular_module(t, Side::Right)));
  EXPECT_FALSE(is_projective(trivial(t, Side::Right)));
  auto f = support::ring("field@p=7");
  EXPECT_TRUE(is_projective(trivial(f, Side::Right)));
  auto tri = support::ring("triangular_2");
  EXPECT_TRUE(is_injective(dual_module(regular_module(tri, Side::Left))));
  EXPECT_TRUE(is_injective(regular_module(t, Side::Right)));
  EXPECT_TRUE(is_projective(support::tri_simple_proj(tri)));
  EXPECT_FALSE(is_injective(support::tri_simple_proj(tri)));
  EXPECT_FALSE(is_projective(support::tri_simple_top(tri)));
}

TEST(Projectivity, FieldModulesAreProjective) {
  auto f = support::ring("field@p=5");
  for (std::size_t t = 0; t < 10; ++t) {
    Rng rng = derived_rng(904, t);
    EXPECT_TRUE(is_projective(gen_random_module(f, Side::Right, 4, rng)));
  }
}

TEST(Projectivity, SplittingIsASection) {
  auto r = support::ring("nakayama:2,2,1@p=2");
  for (std::size_t t = 0; t < 10; ++t) {
    Rng rng = derived_rng(905, t);
    auto m = gen_random_module(r, Side::Right, 4, rng);
    auto pt = projectivity_test(m);
    if (!pt.projective || m.dim() == 0) continue;
    ASSERT_TRUE(pt.splitting);
    ASSERT_TRUE((*pt.splitting * m.presentation().cover).is_identity());
  }
}

TEST(Envelope, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto k = trivial(r, Side::Right);
  auto iota = injective_envelope_embed(k);
  EXPECT_EQ(iota.target().dim(), 2u);
  EXPECT_TRUE(is_injective_map(iota));
  EXPECT_TRUE(is_injective(iota.target()));
  EXPECT_EQ(injective_envelope_embed(ModuleRep::zero(r, Side::Right)).target().dim(), 0u);
  // an injective module splits off its envelope
  auto a = regular_module(r, Side::Right);
  auto e = injective_envelope_embed(a);
  EXPECT_TRUE(solve_hom_equation(e.target(), a, e.matrix(), Mat::identity(r->field(), a.dim()),
                                 Mat::identity(r->field(), a.dim())));
}

TEST(GpCosyzygy, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto a = regular_module(r, Side::Right);
  EXPECT_EQ(gp_cosyzygy(a).cokernel.module.dim(), 0u);
  auto k = trivial(r, Side::Right);
  auto g = gp_cosyzygy(k);
  EXPECT_EQ(g.embedding.target().dim(), 2u);
  EXPECT_TRUE(isomorphic(g.cokernel.module, k));
  EXPECT_TRUE(isomorphic(gp_cosyzygy(g.cokernel.module).cokernel.module, k));
  auto tri = support::ring("triangular_2");
  try {
    gp_cosyzygy(support::tri_simple_top(tri));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReflexive);
  }
}

TEST(Cache, LookupsEqualFreshComputations) {
  auto r = support::ring("nakayama:2,2,1@p=2");
  ResolutionCache cache;
  Rng rng = derived_rng(906, 0);
  auto m = gen_random_module(r, Side::Right, 4, rng);
  auto a = cache.get(m, 2);
  auto b = cache.get(m, 2);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(cache.size(), 1u);
  auto longer = cache.get(m, 4);
  FreeResolution fresh(m, 4);
  EXPECT_EQ(longer->ranks(), fresh.ranks());
  EXPECT_EQ(cache.get(m, 2, ScanOrder::reversed())->order(), ScanOrder::reversed());
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}
