#include <gtest/gtest.h>

#include <vector>

#include "cuspforge/arith.hpp"
#include "cuspforge/error.hpp"

using namespace cuspforge;

namespace {

std::vector<Int> elems(const DeltaSubgroup& d) { return {d.elements().begin(), d.elements().end()}; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(Arith, LevelRejectsNonPositive) {
  EXPECT_EQ(kind_of([] { Level(0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Level(-3); }), ErrorKind::InvalidArgument);
}

TEST(Arith, Totient) {
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(20), 8);
  EXPECT_EQ(totient(81), 54);
}

TEST(Arith, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<Int>{1}));
  EXPECT_EQ(divisors(20), (std::vector<Int>{1, 2, 4, 5, 10, 20}));
  EXPECT_EQ(divisors(36), (std::vector<Int>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
}

TEST(Arith, Units) {
  EXPECT_EQ(units(Level(1)), (std::vector<Int>{1}));
  EXPECT_EQ(units(Level(8)), (std::vector<Int>{1, 3, 5, 7}));
  EXPECT_EQ(units(Level(20)), (std::vector<Int>{1, 3, 7, 9, 11, 13, 17, 19}));
}

TEST(Arith, ModularHelpers) {
  EXPECT_EQ(mod(-1, 20), 19);
  EXPECT_EQ(normalize_residue(0, 20), 20);
  EXPECT_EQ(normalize_residue(-1, 1), 1);
  EXPECT_EQ(inverse_mod(3, 20), 7);
  EXPECT_EQ(kind_of([] { inverse_mod(4, 20); }), ErrorKind::NonUnitGenerator);
  auto eg = extended_gcd(240, 46);
  EXPECT_EQ(eg.g, 2);
  EXPECT_EQ(240 * eg.s + 46 * eg.t, 2);
  EXPECT_EQ(prime_factors(360), (std::vector<Int>{2, 3, 5}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_square_free(30));
  EXPECT_FALSE(is_square_free(20));
  EXPECT_EQ(irregularity_index(Level(20), 10), 2);
  EXPECT_EQ(irregularity_index(Level(36), 6), 6);
}

TEST(Arith, SubgroupGenerated) {
  EXPECT_EQ(elems(subgroup_generated(Level(20), {})), (std::vector<Int>{1, 19}));
  EXPECT_EQ(elems(subgroup_generated(Level(20), {9})), (std::vector<Int>{1, 9, 11, 19}));
  EXPECT_EQ(subgroup_generated(Level(13), {2}).size(), 12);
  EXPECT_EQ(subgroup_generated(Level(20), {9}).to_string(), "{1,9,11,19}");
  EXPECT_EQ(kind_of([] { subgroup_generated(Level(20), {4}); }), ErrorKind::NonUnitGenerator);
}

TEST(Arith, TinyLevelsCollapse) {
  EXPECT_EQ(elems(plus_minus_one(Level(1))), (std::vector<Int>{1}));
  EXPECT_EQ(elems(plus_minus_one(Level(2))), (std::vector<Int>{1}));
  EXPECT_EQ(elems(all_units(Level(2))), (std::vector<Int>{1}));
}

TEST(Arith, DeltaD) {
  EXPECT_EQ(elems(delta_d(Level(20), 2)), (std::vector<Int>{1, 9, 11, 19}));
  EXPECT_EQ(elems(delta_d(Level(24), 2)), (std::vector<Int>{1, 11, 13, 23}));
  EXPECT_EQ(elems(delta_d(Level(20), 1)), (std::vector<Int>{1, 19}));
  EXPECT_EQ(kind_of([] { delta_d(Level(20), 3); }), ErrorKind::NotADivisor);
}

TEST(Arith, ProjectionImageSize) {
  EXPECT_EQ(projection_image_size(Level(20), 20, plus_minus_one(Level(20))), 2);
  EXPECT_EQ(projection_image_size(Level(20), 2, delta_d(Level(20), 2)), 2);
  EXPECT_EQ(projection_image_size(Level(20), 1, delta_d(Level(20), 2)), 4);
  EXPECT_EQ(kind_of([] { projection_image_size(Level(20), 7, plus_minus_one(Level(20))); }),
            ErrorKind::NotADivisor);
}

TEST(Arith, UnitGroupGeneratorsGenerate) {
  for (Int n : {5, 12, 20, 36, 100}) {
    const Level level(n);
    auto gens = unit_group_generators(level);
    EXPECT_EQ(subgroup_generated(level, gens), all_units(level)) << n;
  }
}
