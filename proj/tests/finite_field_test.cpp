#include <gtest/gtest.h>

#include "eoa/error.hpp"
#include "eoa/finite_field.hpp"
#include "oracles.hpp"

namespace eoa {
namespace {

constexpr Symbol kOmega = 2;         // x
constexpr Symbol kOmegaPlusOne = 3;  // x + 1

TEST(FiniteField, Gf4HasFixedModulusAndFourElements) {
  const auto f = FieldTable::create(2, 2);
  EXPECT_EQ(f.order(), 4);
  EXPECT_EQ(f.spec().modulus, (std::vector<int>{1, 1, 1}));
}

TEST(FiniteField, Gf9UsesXSquaredPlusOne) {
  EXPECT_EQ(FieldTable::create(3, 2).spec().modulus, (std::vector<int>{1, 0, 1}));
}

TEST(FiniteField, Gf2AdditionIsXor) {
  const auto f = FieldTable::create(2, 1);
  for (Symbol a = 0; a < 2; ++a)
    for (Symbol b = 0; b < 2; ++b) EXPECT_EQ(f.add(a, b), a ^ b);
}

TEST(FiniteField, OmegaSquaredIsOmegaPlusOne) {
  const auto f = FieldTable::create(2, 2);
  EXPECT_EQ(f.mul(kOmega, kOmega), kOmegaPlusOne);
}

TEST(FiniteField, Gf4TablesMatchHandExpandedArithmetic) {
  const auto f = FieldTable::create(2, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      EXPECT_EQ(f.mul(a, b), oracle::gf4_mul(a, b));
      EXPECT_EQ(f.add(a, b), oracle::gf4_add(a, b));
    }
}

TEST(FiniteField, CharacteristicTwoSelfAdditionVanishes) {
  const auto f = FieldTable::create(2, 2);
  for (Symbol x = 0; x < 4; ++x) EXPECT_EQ(f.add(x, x), 0);
}

TEST(FiniteField, InverseOfOmega) {
  const auto f = FieldTable::create(2, 2);
  EXPECT_EQ(oracle::inverse_by_search(4, kOmega, oracle::gf4_mul), kOmegaPlusOne);
  EXPECT_EQ(f.inv(kOmega), kOmegaPlusOne);
}

TEST(FiniteField, Gf3NegationOfOne) { EXPECT_EQ(FieldTable::create(3, 1).neg(1), 2); }

TEST(FiniteField, InverseOfZeroThrows) {
  EXPECT_THROW(FieldTable::create(2, 2).inv(0), Error);
}

TEST(FiniteField, RejectsNonPrimeCharacteristicAndCap) {
  EXPECT_THROW(FieldTable::create(4, 1), Error);
  EXPECT_THROW(FieldTable::create(1, 3), Error);
  EXPECT_THROW(FieldTable::create(2, 9), CapExceeded);
  EXPECT_THROW(FieldTable::create_order(6), Error);
  EXPECT_NO_THROW(FieldTable::create(2, 8));
}

TEST(FiniteField, PrimePowerDecomposition) {
  EXPECT_EQ(prime_power_decompose(16), (std::pair<int, int>{2, 4}));
  EXPECT_EQ(prime_power_decompose(25), (std::pair<int, int>{5, 2}));
  EXPECT_THROW(prime_power_decompose(12), Error);
}

TEST(FiniteField, IrreducibilityByTrialDivision) {
  EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
  EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 1}));
  EXPECT_FALSE(is_irreducible(3, {2, 0, 1}));  // x^2 - 1
}

// Exhaustive axiom check for every field of order <= 16.
class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto [p, m] = GetParam();
  const auto f = FieldTable::create(p, m);
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    }
    for (int b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      for (int c = 0; c < q; ++c) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2},
                                           std::pair{5, 1}, std::pair{7, 1}, std::pair{2, 3},
                                           std::pair{3, 2}, std::pair{11, 1}, std::pair{13, 1},
                                           std::pair{2, 4}));

TEST(FiniteField, CoordsOfGf4) {
  const auto f = FieldTable::create(2, 2);
  EXPECT_EQ(f.coords(0), (FieldCoords{0, 0}));
  EXPECT_EQ(f.coords(1), (FieldCoords{1, 0}));
  EXPECT_EQ(f.coords(kOmega), (FieldCoords{0, 1}));
  EXPECT_EQ(f.coords(kOmegaPlusOne), (FieldCoords{1, 1}));
}

TEST(FiniteField, CoordsAreAdditiveBijection) {
  for (int p : {2, 3}) {
    const auto f = FieldTable::create(p, 2);
    const int d = f.coord_dim();
    std::set<std::pair<int, int>> image;
    for (int x = 0; x < f.order(); ++x) {
      const auto cx = f.coords(x);
      image.insert({cx.a, cx.b});
      EXPECT_EQ(f.from_coords(cx), x);
      for (int y = 0; y < f.order(); ++y) {
        const auto cy = f.coords(y);
        const auto cs = f.coords(f.add(x, y));
        EXPECT_EQ(cs.a, (cx.a + cy.a) % d);
        EXPECT_EQ(cs.b, (cx.b + cy.b) % d);
      }
    }
    EXPECT_EQ(static_cast<int>(image.size()), f.order());
  }
}

TEST(FiniteField, CoordsRequireSquareOfPrime) {
  EXPECT_THROW(FieldTable::create(2, 1).coords(1), Error);
  EXPECT_THROW(FieldTable::create(2, 4).coords(1), Error);  // d = 4 is not prime
  EXPECT_THROW(FieldTable::create(2, 3).coords(1), Error);
}

TEST(FiniteField, ConstructionIsDeterministic) {
  const auto a = FieldTable::create(2, 5);
  const auto b = FieldTable::create(2, 5);
  EXPECT_EQ(a.spec(), b.spec());
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) ASSERT_EQ(a.mul(x, y), b.mul(x, y));
}

}  // namespace
}  // namespace eoa
