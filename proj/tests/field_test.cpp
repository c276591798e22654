#include <gtest/gtest.h>

#include <random>

#include "starblock/field.hpp"

namespace {

using starblock::perm::Field;
using starblock::perm::FieldError;

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldOnSampledTriples) {
  const Field F(GetParam());
  const auto q = F.size();
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    ASSERT_EQ(F.add(a, F.add(b, c)), F.add(F.add(a, b), c));
    ASSERT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
    ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    ASSERT_EQ(F.add(a, b), F.add(b, a));
    ASSERT_EQ(F.mul(a, b), F.mul(b, a));
    ASSERT_EQ(F.add(a, F.neg(a)), 0u);
    ASSERT_EQ(F.sub(F.add(a, b), b), a);
    ASSERT_EQ(F.mul(a, 1), a);
    ASSERT_EQ(F.add(a, 0), a);
    if (a != 0) ASSERT_EQ(F.mul(a, F.inv(a)), 1u);
  }
}

TEST_P(FieldAxioms, FrobeniusAndPrimitiveElement) {
  const Field F(GetParam());
  const auto q = F.size();
  const auto g = F.primitive();
  std::vector<bool> hit(q, false);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    ASSERT_FALSE(hit[x]) << "primitive element repeats early";
    hit[x] = true;
    x = F.mul(x, g);
  }
  EXPECT_EQ(x, 1u);
  std::uint32_t squares = 0;
  for (std::uint32_t a = 0; a < q; ++a) {
    EXPECT_EQ(F.pow(a, q), a);
    const auto r = F.characteristic();
    std::uint32_t ar = 1;
    for (std::uint32_t i = 0; i < r; ++i) ar = F.mul(ar, a);
    for (std::uint32_t b = 0; b < q && q <= 64; b += 3) {
      std::uint32_t sum = 1, s = F.add(a, b);
      for (std::uint32_t i = 0; i < r; ++i) sum = F.mul(sum, s);
      std::uint32_t br = 1;
      for (std::uint32_t i = 0; i < r; ++i) br = F.mul(br, b);
      ASSERT_EQ(sum, F.add(ar, br));
    }
    if (a != 0 && F.is_square(a)) ++squares;
  }
  EXPECT_EQ(squares, q % 2 ? (q - 1) / 2 : q - 1);
}

TEST_P(FieldAxioms, CoordinatesRoundTrip) {
  const Field F(GetParam());
  for (std::uint32_t a = 0; a < F.size(); ++a) {
    const auto c = F.coords(a);
    ASSERT_EQ(c.size(), F.degree());
    ASSERT_EQ(F.from_coords(c), a);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 1021u));

TEST(Field, IntegersReduceModCharacteristic) {
  const Field F(9);
  EXPECT_EQ(F.from_int(3), 0u);
  EXPECT_EQ(F.from_int(-1), F.neg(1));
  EXPECT_EQ(F.from_int(4), 1u);
  EXPECT_EQ(F.characteristic(), 3u);
  EXPECT_EQ(F.degree(), 2u);
}

TEST(Field, ReducibleModulusIsRejected) {
  EXPECT_THROW(Field(2, {1, 0, 1}), FieldError);  // x^2 + 1 = (x + 1)^2 over GF(2)
  EXPECT_NO_THROW(Field(2, {1, 1, 1}));
  EXPECT_THROW(Field(6), FieldError);
  EXPECT_THROW(Field(1), FieldError);
}

TEST(Field, InverseOfZeroThrows) {
  const Field F(7);
  EXPECT_THROW(F.inv(0), FieldError);
}

}  // namespace
