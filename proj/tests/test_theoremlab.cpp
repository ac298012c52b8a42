#include <gtest/gtest.h>

#include "support.hpp"

using namespace phantomkit;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TrialConfig small(std::size_t trials, std::vector<std::string> algebras) {
  TrialConfig c;
  c.trials = trials;
  c.algebras = std::move(algebras);
  return c;
}

}  // namespace

TEST(Generators, FieldModulesAndNonProjectiveDraws) {
  auto f = support::ring("field@p=3");
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = derived_rng(1200, t);
    auto m = gen_random_module(f, Side::Right, 4, rng);
    EXPECT_LE(m.dim(), 4u);
    EXPECT_TRUE(is_projective(m));
  }
  auto r = support::ring("truncated_poly:2@p=2");
  std::size_t non_projective = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    Rng rng = derived_rng(1201, t);
    auto m = gen_random_module(r, t % 2 ? Side::Left : Side::Right, 5, rng);
    EXPECT_LE(m.dim(), 5u);
    non_projective += !is_projective(m);
  }
  EXPECT_GE(non_projective, 1u);
}

TEST(Generators, MorphismsIntertwine) {
  auto r = support::ring("nakayama:2,2,1@p=2");
  for (std::size_t t = 0; t < 100; ++t) {
    Rng rng = derived_rng(1202, t);
    auto m = gen_random_module(r, Side::Right, 4, rng);
    auto n = gen_random_module(r, Side::Right, 4, rng);
    auto f = gen_random_morphism(m, n, rng);
    ASSERT_TRUE(intertwines(m, n, f.matrix()));
  }
  // Hom(k, 0) = 0 leaves only the zero map
  auto t = support::ring("truncated_poly:2@p=2");
  Rng rng = derived_rng(1203, 0);
  EXPECT_TRUE(gen_random_morphism(support::trivial(t, Side::Right), ModuleRep::zero(t, Side::Right), rng).is_zero());
}

TEST(Generators, GpModules) {
  auto tri = support::ring("triangular_2");
  auto cert = certify(tri);
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = derived_rng(1204, t);
    EXPECT_TRUE(is_projective(gen_gp_module(cert, 4, rng)));
  }
  auto r = support::ring("truncated_poly:3@p=3");
  auto c0 = certify(r);
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = derived_rng(1205, t);
    EXPECT_TRUE(gp_test(gen_gp_module(c0, 4, rng), c0).verdict);
  }
}

TEST(Generators, SimpleModules) {
  EXPECT_EQ(simple_modules(support::ring("field@p=2"), Side::Right).size(), 1u);
  EXPECT_EQ(simple_modules(support::ring("truncated_poly:3@p=3"), Side::Right).size(), 1u);
  EXPECT_EQ(simple_modules(support::ring("triangular_2"), Side::Right).size(), 2u);
  EXPECT_EQ(simple_modules(support::ring("triangular_2"), Side::Left).size(), 2u);
  EXPECT_EQ(simple_modules(support::ring("nakayama:2,2,1@p=2"), Side::Right).size(), 3u);
  for (const auto& s : simple_modules(support::ring("nakayama:2,2@p=3"), Side::Right)) EXPECT_EQ(s.dim(), 1u);
}

TEST(Pool, ClosedUnderDuality) {
  for (const char* spec : {"triangular_2", "truncated_poly:3@p=3", "nakayama:2,2,1@p=2"}) {
    auto pool = standard_pool(support::ring(spec), PoolOptions{});
    ASSERT_EQ(pool.right.size(), pool.left.size()) << spec;
    for (std::size_t i = 0; i < pool.right.size(); ++i) {
      EXPECT_EQ(pool.right[i].module.side(), Side::Right);
      EXPECT_EQ(dual_module(pool.right[i].module), pool.left[i].module) << spec << " " << pool.right[i].label;
    }
  }
}

TEST(Pool, GpPoolMembersPassGpTest) {
  auto tri = support::ring("triangular_2");
  auto cert = certify(tri);
  auto gp = gp_pool(standard_pool(tri, PoolOptions{}), cert);
  EXPECT_FALSE(gp.right.empty());
  for (const auto& e : gp.right) EXPECT_TRUE(gp_test(e.module, cert).verdict) << e.label;
  for (const auto& e : gp.left) EXPECT_TRUE(gp_test(e.module, cert).verdict) << e.label;
}

TEST(Suites, Thm11OnTruncatedPoly) {
  auto rep = verify("thm11", small(100, {"truncated_poly:2@p=2"}));
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].passes, 100u);
  EXPECT_TRUE(rep.pass());
}

TEST(Suites, PropPropOnFieldIsVacuous) {
  auto rep = verify("prop_prop", small(30, {"field@p=2"}));
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_TRUE(rep.pass());
  // every functor vanishes over a field; trials with a zero module are not counted
  EXPECT_EQ(rep.results[0].counters.at("verdict_true"), 30u);
  EXPECT_GE(rep.results[0].counters.at("vacuous"), 20u);
}

TEST(Suites, LemOnTruncatedPoly) {
  auto rep = verify("lem", small(100, {"truncated_poly:2@p=2"}));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.results[0].passes, 100u);
}

TEST(Suites, EverySuiteRunsOnItsDefaults) {
  for (const auto& id : theorem_ids()) {
    TrialConfig c;
    c.trials = 50;  // the high-degree suites need enough trials to meet a nonzero degree-1 functor
    auto rep = verify(id, c);
    EXPECT_TRUE(rep.pass()) << id;
    EXPECT_EQ(rep.results.size(), default_algebras(id).size()) << id;
  }
}

TEST(Suites, Errors) {
  EXPECT_EQ(kind_of([] { verify("no_such_suite", TrialConfig{}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { verify("cor_gor", small(2, {"nakayama:3,3,2@p=2"})); }), ErrorKind::ConfigError);
}

TEST(Suites, DeterministicAcrossRunsAndThreadCounts) {
  TrialConfig c = small(20, {"truncated_poly:3@p=3", "triangular_2"});
  c.theorems = {"thm11", "cor_cc", "duality"};
  c.threads = 1;
  const std::string a = verify_all(c).to_json();
  const std::string b = verify_all(c).to_json();
  c.threads = 4;
  const std::string d = verify_all(c).to_json();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, d);
  c.seed = 43;
  EXPECT_NE(a, verify_all(c).to_json());
}

TEST(Suites, ReplayReproducesPassingTrials) {
  TrialConfig c = small(10, {"nakayama:2,2,1@p=2"});
  for (std::size_t t = 0; t < 10; ++t) EXPECT_FALSE(replay("thm11", "nakayama:2,2,1@p=2", t, c).has_value());
}

TEST(Suites, ReportJsonShape) {
  auto rep = verify("duality", small(3, {"triangular_2"}));
  auto j = Json::parse(rep.to_json());
  ASSERT_TRUE(j.contains("config"));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["results"].size(), 1u);
  EXPECT_FALSE(j["config"].contains("threads"));
  EXPECT_EQ(j["results"][0]["trials"], 3);
}

TEST(DegreeStability, TruncatedPolyExtIsTwoPeriodic) {
  // over k[x]/(x^m) syzygies are 2-periodic up to free summands
  for (const char* spec : {"truncated_poly:2@p=2", "truncated_poly:3@p=3", "truncated_poly:4@p=5"}) {
    auto r = support::ring(spec);
    for (std::size_t t = 0; t < 10; ++t) {
      Rng rng = derived_rng(1210, t);
      auto m = gen_random_module(r, Side::Right, 5, rng);
      auto x = gen_random_module(r, Side::Right, 5, rng);
      auto y = gen_random_module(r, Side::Left, 5, rng);
      ASSERT_EQ(ext_space(m, x, 1).dim(), ext_space(m, x, 3).dim()) << spec;
      ASSERT_EQ(tor_space(m, y, 1).dim(), tor_space(m, y, 3).dim()) << spec;
      ASSERT_EQ(ext_space(m, x, 2).dim(), ext_space(m, x, 4).dim()) << spec;
    }
  }
}
