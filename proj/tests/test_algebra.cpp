#include <gtest/gtest.h>

#include "support.hpp"

using namespace phantomkit;

namespace {

const std::vector<std::string> kCatalog = {
    "field@p=3",         "truncated_poly:2@p=2", "truncated_poly:3@p=3", "truncated_poly:4@p=5",
    "group_C2@p=2",      "group_C3@p=2",         "group_C3@p=3",         "triangular_2@p=2",
    "nakayama:2,2,1@p=2", "nakayama:2,2@p=3",    "nakayama:3,3,2@p=2",
};

}  // namespace

TEST(Algebra, TruncatedPolyValid) {
  auto a = catalog_algebra("truncated_poly:2@p=2");
  EXPECT_FALSE(validate_algebra(a).has_value());
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.declared_gorenstein(), 0);
}

TEST(Algebra, BrokenUnitRejected) {
  // e1 * e1 = e2 and e2 claimed as unit
  std::vector<Residue> t(8, 0);
  t[(0 * 2 + 0) * 2 + 1] = 1;
  t[(1 * 2 + 1) * 2 + 1] = 1;
  AlgebraPresentation a("broken", Field(2), 2, t, Vec{0, 1});
  auto d = validate_algebra(a);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->kind, AlgebraDefect::Kind::BadUnit);
  try {
    require_valid(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadUnit);
  }
}

TEST(Algebra, NonAssociativeRejected) {
  // basis 1, a, b with a*a = b but a*b = 0 and b*a = 1: (a a) a = b a = 1 != a (a a) = a b = 0
  std::vector<Residue> t(27, 0);
  auto put = [&](int i, int j, int k) { t[(i * 3 + j) * 3 + k] = 1; };
  for (int j = 0; j < 3; ++j) put(0, j, j), put(j, 0, j);
  put(1, 1, 2);
  put(2, 1, 0);
  AlgebraPresentation a("nonassoc", Field(3), 3, t, Vec{1, 0, 0});
  auto d = validate_algebra(a);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->kind, AlgebraDefect::Kind::NonAssociative);
}

TEST(Algebra, FieldIsValid) {
  auto a = catalog_algebra("field", 3);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_FALSE(validate_algebra(a));
  EXPECT_EQ(a.field().p(), 3u);
}

TEST(Algebra, OppositeOfCommutativeIsSame) {
  auto a = catalog_algebra("truncated_poly:3@p=3");
  EXPECT_EQ(opposite_algebra(a).table(), a.table());
}

TEST(Algebra, OppositeOfTriangularIsTransposedTable) {
  auto a = catalog_algebra("triangular_2");
  auto op = opposite_algebra(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(op.structure(i, j, k), a.structure(j, i, k));
  // e11 e12 = e12 in A, so e12 e11 = e12 in A^op
  EXPECT_EQ(op.basis_product(1, 0), (Vec{0, 1, 0}));
  EXPECT_EQ(op.basis_product(0, 1), (Vec{0, 0, 0}));
}

TEST(Algebra, CatalogInvariants) {
  for (const auto& spec : kCatalog) {
    auto a = catalog_algebra(spec);
    EXPECT_FALSE(validate_algebra(a)) << spec;
    EXPECT_EQ(opposite_algebra(opposite_algebra(a)).table(), a.table()) << spec;
    EXPECT_EQ(catalog_algebra(a.name()), a) << "canonical name re-parses: " << spec;
    auto r = Ring::make(a);
    EXPECT_EQ(regular_module(r, Side::Right).dim(), a.dim()) << spec;
    EXPECT_EQ(regular_module(r, Side::Left).dim(), a.dim()) << spec;
  }
}

TEST(Algebra, RegularModuleOfTruncatedPoly) {
  auto r = support::ring("truncated_poly:2@p=2");
  auto reg = regular_module(r, Side::Right);
  EXPECT_EQ(reg.action(1), support::mat(2, 2, 2, {0, 1, 0, 0}));
  auto f = regular_module(support::ring("field@p=5"), Side::Right);
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_TRUE(f.action(0).is_identity());
}

TEST(Algebra, GroupC2IsomorphicToTruncatedPoly) {
  // over F_2 send g - 1 to x: the element g + 1 squares to zero
  auto g = catalog_algebra("group_C2@p=2");
  Vec y{1, 1};
  EXPECT_EQ(g.multiply(y, y), (Vec{0, 0}));
  // basis {1, g+1} gives the table of F_2[x]/(x^2)
  auto t = catalog_algebra("truncated_poly:2@p=2");
  EXPECT_EQ(g.multiply(Vec{1, 0}, y), y);
  EXPECT_EQ(t.basis_product(1, 1), (Vec{0, 0}));
}

TEST(Algebra, GroupAlgebrasSelfInjective) {
  for (const char* spec : {"group_C2@p=2", "group_C3@p=2", "group_C3@p=3", "group_C2@p=3"}) {
    auto r = support::ring(spec);
    EXPECT_TRUE(is_injective(regular_module(r, Side::Right))) << spec;
    EXPECT_TRUE(is_injective(regular_module(r, Side::Left))) << spec;
  }
}

TEST(Algebra, CatalogErrors) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind([] { catalog_algebra("no_such_algebra"); }), ErrorKind::UnknownKey);
  EXPECT_EQ(kind([] { catalog_algebra("truncated_poly:0"); }), ErrorKind::BadParams);
  EXPECT_EQ(kind([] { catalog_algebra("field@p=4"); }), ErrorKind::InvalidField);
}

TEST(Algebra, SpaceSeparatedSpec) {
  EXPECT_EQ(catalog_algebra("truncated_poly 2").dim(), 2u);
  EXPECT_EQ(catalog_algebra("truncated_poly", 2, {2}), catalog_algebra("truncated_poly:2@p=2"));
}
