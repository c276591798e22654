#include <gtest/gtest.h>

#include "starblock/builders.hpp"

namespace {

using namespace starblock;
using namespace starblock::perm;

Natural catalog_order(const char* text) { return catalog::order(catalog::parse_group(text)).value(); }

TEST(Builders, Examples) {
  const auto l2 = psl2_action(5);
  EXPECT_EQ(l2.group.degree(), 6u);
  EXPECT_EQ(l2.group.order().value(), 60);
  const auto u3 = matrix_action(MatrixFamily::SU, 3, 3);
  EXPECT_EQ(u3.group.order().value(), 6048);
  EXPECT_EQ(u3.group.degree(), 91u);
  const auto gl32 = matrix_action(MatrixFamily::GL, 3, 2);
  EXPECT_EQ(gl32.group.degree(), 7u);
  EXPECT_EQ(gl32.group.order().value(), 168);
}

TEST(Builders, ProjectiveLineOverEveryField) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 32u, 101u}) {
    const auto l = psl2_action(q);
    EXPECT_EQ(l.group.degree(), q + 1);
    EXPECT_EQ(l.group.order().value(), catalog::order(*l.id).value()) << q;
    const auto g = pgl2_action(q);
    EXPECT_EQ(g.group.order().value(), Natural(q) * (Natural(q) * q - 1)) << q;
  }
}

TEST(Builders, MatrixFamiliesMatchCatalog) {
  struct Case {
    MatrixFamily family;
    unsigned n;
    std::uint32_t q;
    const char* id;
  };
  for (const auto& c : std::vector<Case>{{MatrixFamily::GL, 2, 2, "GL(2,2)"},
                                         {MatrixFamily::GL, 2, 3, "GL(2,3)"},
                                         {MatrixFamily::GL, 2, 4, "GL(2,4)"},
                                         {MatrixFamily::GL, 2, 5, "GL(2,5)"},
                                         {MatrixFamily::GL, 2, 9, "GL(2,9)"},
                                         {MatrixFamily::GL, 3, 2, "GL(3,2)"},
                                         {MatrixFamily::GL, 3, 3, "GL(3,3)"},
                                         {MatrixFamily::GL, 4, 2, "GL(4,2)"},
                                         {MatrixFamily::SL, 2, 5, "SL(2,5)"},
                                         {MatrixFamily::SL, 2, 7, "SL(2,7)"},
                                         {MatrixFamily::SL, 3, 3, "SL(3,3)"},
                                         {MatrixFamily::SL, 3, 4, "SL(3,4)"},
                                         {MatrixFamily::SU, 3, 3, "PSU(3,3)"},
                                         {MatrixFamily::SU, 3, 4, "PSU(3,4)"},
                                         {MatrixFamily::SU, 3, 5, "PSU(3,5)"},
                                         {MatrixFamily::Sp, 4, 2, "PSp(4,2)"},
                                         {MatrixFamily::Sp, 4, 3, "PSp(4,3)"},
                                         {MatrixFamily::Sp, 6, 2, "PSp(6,2)"},
                                         {MatrixFamily::SO, 3, 5, "SO(3,5)"},
                                         {MatrixFamily::SO, 5, 3, "SO(5,3)"},
                                         {MatrixFamily::SO, 7, 3, "SO(7,3)"}}) {
    const auto b = matrix_action(c.family, c.n, c.q);
    EXPECT_EQ(b.group.order().value(), catalog_order(c.id)) << c.id;
    ASSERT_TRUE(b.id.has_value());
    EXPECT_EQ(catalog::to_string(*b.id), c.id);
  }
}

TEST(Builders, SingularPointsOfOrthogonalModule) {
  // (q^(n-1) - 1) / (q - 1) singular points for odd n.
  EXPECT_EQ(matrix_action(MatrixFamily::SO, 5, 3).group.degree(), 40u);
  EXPECT_EQ(matrix_action(MatrixFamily::SO, 7, 3).group.degree(), 364u);
}

TEST(Builders, RejectBadParameters) {
  EXPECT_THROW(psl2_action(6), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::GL, 2, 10), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::Sp, 3, 3), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::SU, 4, 3), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::SO, 4, 3), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::SO, 5, 2), BuildError);
  EXPECT_THROW(matrix_action(MatrixFamily::GL, 6, 11), BuildError);
  EXPECT_THROW(alternating(2), BuildError);
}

TEST(Builders, BuildForCoversFixtures) {
  for (const char* text : {"A5", "A9", "S7", "C11", "PSL(2,13)", "GL(2,5)", "GL(3,2)", "SL(2,5)", "SU(3,3)",
                           "PSU(3,3)", "PSp(4,3)", "PSL(2,4)", "Omega(3,7)", "PSp(4,2)", "SO(5,3)", "G2(2)'"}) {
    const auto g = catalog::parse_group(text);
    const auto b = build_for(g);
    ASSERT_TRUE(b.has_value()) << text;
    EXPECT_EQ(b->group.order().value(), catalog::order(g).value()) << text;
    EXPECT_EQ(*b->id, g);
  }
  for (const char* text : {"M11", "J1", "E8(2)", "PSL(5,7)"}) {
    EXPECT_FALSE(build_for(catalog::parse_group(text)).has_value()) << text;
  }
}

}  // namespace
