#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace phantomkit;
using support::isomorphic;
using support::trivial;

namespace {

const std::vector<std::string> kAlgebras = {"field@p=3",      "truncated_poly:2@p=2", "truncated_poly:3@p=3",
                                            "group_C2@p=2",   "triangular_2",         "nakayama:2,2,1@p=2",
                                            "nakayama:2,2@p=3"};

std::vector<ModuleRep> sample_modules(const RingPtr& r, Side side, std::uint64_t seed, std::size_t count) {
  std::vector<ModuleRep> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = derived_rng(seed, i);
    out.push_back(gen_random_module(r, side, 4, rng));
  }
  return out;
}

}  // namespace

TEST(Module, RejectsBrokenRepresentation) {
  auto r = support::ring("truncated_poly:2@p=2");
  // x acting invertibly breaks x^2 = 0
  try {
    ModuleRep bad(r, Side::Right, {Mat::identity(r->field(), 1), Mat::identity(r->field(), 1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidModule);
  }
}

TEST(Module, RejectsNonIntertwiner) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto a = regular_module(r, Side::Right);
  auto k = trivial(r, Side::Right);
  try {
    ModuleMorphism f(a, k, support::mat(2, 2, 1, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIntertwining);
  }
}

TEST(Hom, SpecExamples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto k = trivial(r, Side::Right);
  auto a = regular_module(r, Side::Right);
  EXPECT_EQ(hom_space(k, k).dim(), 1u);
  EXPECT_EQ(hom_space(k, a).dim(), 1u);
  EXPECT_EQ(hom_space(k, ModuleRep::zero(r, Side::Right)).dim(), 0u);
  EXPECT_EQ(oracle::hom_dim_enumerated(k, a), 1u);
}

TEST(Hom, SideMismatchThrows) {
  auto r = support::ring("truncated_poly:2@p=2");
  try {
    hom_space(trivial(r, Side::Right), trivial(r, Side::Left));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SideMismatch);
  }
}

TEST(Hom, DimensionMatchesOracles) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    auto ms = sample_modules(r, Side::Right, 101, 8);
    for (const auto& m : ms)
      for (const auto& n : ms) {
        auto h = hom_space(m, n);
        ASSERT_EQ(h.dim(), oracle::hom_dim(m, n)) << spec;
        if (m.dim() * n.dim() <= 9 && r->field().p() == 2) {
          ASSERT_EQ(h.dim(), oracle::hom_dim_enumerated(m, n));
        }
        for (std::size_t b = 0; b < h.dim(); ++b) ASSERT_TRUE(intertwines(m, n, h.basis_matrix(b)));
      }
  }
}

TEST(Hom, DualityReversesHom) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    auto ms = sample_modules(r, Side::Right, 202, 6);
    for (const auto& m : ms)
      for (const auto& n : ms) ASSERT_EQ(hom_space(m, n).dim(), hom_space(dual_module(n), dual_module(m)).dim());
  }
}

TEST(Kernel, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto a = regular_module(r, Side::Right);
  auto k = trivial(r, Side::Right);
  EXPECT_EQ(kernel_module(ModuleMorphism::identity(a)).module.dim(), 0u);
  auto c = cokernel_module(ModuleMorphism::zero(k, a));
  EXPECT_EQ(c.module, a);
  ModuleMorphism pi(a, k, support::mat(2, 2, 1, {1, 0}));
  auto ker = kernel_module(pi);
  EXPECT_EQ(ker.module.dim(), 1u);
  EXPECT_TRUE(isomorphic(ker.module, k));
  EXPECT_EQ(ker.inclusion.matrix(), support::mat(2, 1, 2, {0, 1}));
}

TEST(Kernel, RandomMorphismsGiveExactSequences) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    auto ms = sample_modules(r, Side::Right, 303, 6);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      Rng rng = derived_rng(304, i);
      auto f = gen_random_morphism(ms[i], ms[i + 1], rng);
      auto k = kernel_module(f);
      auto c = cokernel_module(f);
      ASSERT_TRUE(compose(f, k.inclusion).is_zero());
      ASSERT_TRUE(compose(c.projection, f).is_zero());
      ASSERT_TRUE(is_injective_map(k.inclusion));
      ASSERT_TRUE(is_surjective_map(c.projection));
      const std::size_t rank = la::rank(f.matrix());
      ASSERT_EQ(k.module.dim() + rank, f.source().dim());
      ASSERT_EQ(c.module.dim() + rank, f.target().dim());
    }
  }
}

TEST(Dual, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  EXPECT_EQ(dual_module(ModuleRep::zero(r, Side::Right)).dim(), 0u);
  auto dk = dual_module(trivial(r, Side::Right));
  EXPECT_EQ(dk.side(), Side::Left);
  EXPECT_EQ(dk, trivial(r, Side::Left));
  EXPECT_TRUE(isomorphic(dual_module(regular_module(r, Side::Right)), regular_module(r, Side::Left)));
  auto m = sample_modules(r, Side::Right, 404, 1).front();
  EXPECT_EQ(dual_module(dual_module(m)), m);
}

TEST(Star, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  EXPECT_TRUE(isomorphic(star_module(regular_module(r, Side::Right)), regular_module(r, Side::Left)));
  EXPECT_EQ(star_module(trivial(r, Side::Right)).dim(), 1u);
  EXPECT_EQ(star_module(ModuleRep::zero(r, Side::Right)).dim(), 0u);
}

TEST(Reflexive, Examples) {
  auto t = support::ring("truncated_poly:2@p=2");
  EXPECT_TRUE(is_reflexive(regular_module(t, Side::Right)));
  EXPECT_TRUE(is_reflexive(trivial(t, Side::Right)));
  auto tri = support::ring("triangular_2");
  auto s = support::tri_simple_top(tri);
  EXPECT_EQ(hom_space(s, regular_module(tri, Side::Right)).dim(), 0u);
  EXPECT_EQ(oracle::hom_dim(s, regular_module(tri, Side::Right)), 0u);
  EXPECT_FALSE(is_reflexive(s));
}

TEST(Tensor, Examples) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto k = trivial(r, Side::Right);
  auto kl = trivial(r, Side::Left);
  EXPECT_EQ(tensor_over_A(k, kl).dim, 1u);
  EXPECT_EQ(tensor_over_A(regular_module(r, Side::Right), kl).dim, 1u);
  EXPECT_EQ(tensor_over_A(k, ModuleRep::zero(r, Side::Left)).dim, 0u);
}

TEST(Tensor, DimensionMatchesOracle) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    auto ms = sample_modules(r, Side::Right, 505, 6);
    auto ys = sample_modules(r, Side::Left, 506, 6);
    for (const auto& m : ms)
      for (const auto& y : ys) ASSERT_EQ(tensor_over_A(m, y).dim, oracle::tensor_dim(m, y)) << spec;
    for (const auto& y : ys)
      for (std::size_t n = 1; n <= 3; ++n)
        ASSERT_EQ(tensor_over_A(free_module(r, Side::Right, n), y).dim, n * y.dim());
  }
}

TEST(Additivity, StarAndDualOfSums) {
  for (const auto& spec : kAlgebras) {
    auto r = support::ring(spec);
    auto ms = sample_modules(r, Side::Right, 606, 4);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      auto s = direct_sum(ms[i], ms[i + 1]).module;
      ASSERT_EQ(star_module(s).dim(), star_module(ms[i]).dim() + star_module(ms[i + 1]).dim());
      ASSERT_EQ(dual_module(s).dim(), s.dim());
    }
  }
}

TEST(Pushout, SquareCommutes) {
  auto r = support::ring("truncated_poly:3@p=3");
  auto ms = sample_modules(r, Side::Right, 707, 3);
  Rng rng = derived_rng(708, 0);
  auto a = gen_random_morphism(ms[0], ms[1], rng);
  auto b = gen_random_morphism(ms[0], ms[2], rng);
  auto po = pushout(a, b);
  EXPECT_EQ(compose(po.from_first, a).matrix(), compose(po.from_second, b).matrix());
}
