// Copyright 2026 The twobridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "twobridge/polyring.hpp"

using namespace twobridge;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long range = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<Integer> v(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : v) x = c(rng);
  return IntPoly(std::move(v));
}

}  // namespace

TEST(IntPolyBasics, TrimAndDegree) {
  EXPECT_EQ(IntPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(IntPoly{}.degree(), -1);
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({4, -7, 4}).str(), "4t^2-7t+4");
  EXPECT_EQ(IntPoly({0, -1}).str("z"), "-z");
  EXPECT_EQ(IntPoly{}.str(), "0");
}

TEST(IntPolyBasics, Arithmetic) {
  const IntPoly a{1, 1}, b{-1, 1};
  EXPECT_EQ(a * b, IntPoly({-1, 0, 1}));
  EXPECT_EQ(a - a, IntPoly{});
  EXPECT_EQ(pow(a, 3), IntPoly({1, 3, 3, 1}));
  EXPECT_EQ(IntPoly({1, 2, 3}).derivative(), IntPoly({2, 6}));
  EXPECT_EQ(IntPoly({1, 2, 3}).eval(Integer(2)), 17);
  EXPECT_EQ(IntPoly({6, -4, 2}).content(), 2);
  EXPECT_EQ(IntPoly({-6, 4, -2}).primitive_part(), IntPoly({3, -2, 1}));
}

TEST(DivideExact, Examples) {
  const auto q = divide_exact(IntPoly({-1, 0, 0, 1}), IntPoly({-1, 1}));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, IntPoly({1, 1, 1}));
  EXPECT_FALSE(divide_exact(IntPoly({4, -7, 4}), IntPoly({1, -1, 1})).has_value());
  EXPECT_FALSE(divide_exact(IntPoly({1, 1}), IntPoly({1, 2})).has_value());
  try {
    (void)divide_exact(IntPoly({1}), IntPoly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(DivideExact, RandomProducts) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const IntPoly a = random_poly(rng, 8), b = random_poly(rng, 6);
    if (b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
}

TEST(Gcd, Examples) {
  const IntPoly f{1, 1}, g{-2, 1}, h{3, 0, 1};
  EXPECT_EQ(gcd_poly(f * g * IntPoly{6}, f * h * IntPoly{4}), f);
  EXPECT_EQ(gcd_poly(g, h), IntPoly{1});
  EXPECT_EQ(gcd_poly(IntPoly{}, IntPoly({-2, -4})), IntPoly({1, 2}));
  EXPECT_THROW(gcd_poly(IntPoly{}, IntPoly{}), Error);
}

TEST(Gcd, DividesBothAndIsMaximalOnRandomInputs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    IntPoly common = random_poly(rng, 3, 4);
    if (common.is_zero()) continue;
    common = common.primitive_part();
    const IntPoly a = common * random_poly(rng, 5, 5), b = common * random_poly(rng, 5, 5);
    if (a.is_zero() || b.is_zero()) continue;
    const IntPoly g = gcd_poly(a, b);
    ASSERT_TRUE(divide_exact(a, g).has_value());
    ASSERT_TRUE(divide_exact(b, g).has_value());
    ASSERT_TRUE(divide_exact(g, common).has_value());
    EXPECT_GT(g.leading(), 0);
    EXPECT_EQ(g.content(), 1);
  }
}

TEST(PerfectSquare, Examples) {
  const IntPoly f{1, -3, 1};
  const auto r = is_perfect_square(f * f * IntPoly{9});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, f * f * IntPoly{9});
  EXPECT_FALSE(is_perfect_square(IntPoly({1, 0, 2})).has_value());
  EXPECT_FALSE(is_perfect_square(f * f * IntPoly{2}).has_value());
  EXPECT_TRUE(is_perfect_square(-(f * f)).has_value());
}

TEST(ParseIntPoly, RoundTrip) {
  EXPECT_EQ(parse_intpoly("4t^2-7t+4"), IntPoly({4, -7, 4}));
  EXPECT_EQ(parse_intpoly("-t^3 + 2"), IntPoly({2, 0, 0, -1}));
  EXPECT_EQ(parse_intpoly("z^2-1", 'z'), IntPoly({-1, 0, 1}));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const IntPoly f = random_poly(rng, 7, 30);
    EXPECT_EQ(parse_intpoly(f.str()), f) << f.str();
  }
  EXPECT_THROW(parse_intpoly("t^^2"), Error);
}

TEST(RootMultiplicity, Examples) {
  const IntPoly zm2{-2, 1};
  EXPECT_EQ((zm2 * zm2 * IntPoly({1, 1})).root_multiplicity(Integer(2)), 2);
  EXPECT_EQ(IntPoly({1, 1}).root_multiplicity(Integer(2)), 0);
}

TEST(Laurent, SymmetricConversion) {
  const LaurentPoly x = LaurentPoly::s(1) + LaurentPoly::s(-1);
  EXPECT_EQ(laurent_to_x(x * x), BiPoly::monomial(1, 2, 0));
  EXPECT_EQ(laurent_to_x(LaurentPoly::s(3) + LaurentPoly::s(-3)), BiPoly::from_x_poly(power_sum_basis(3)));
  EXPECT_EQ(power_sum_basis(2), IntPoly({-2, 0, 1}));
  try {
    (void)laurent_to_x(LaurentPoly::s(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(Laurent, RoundTripThroughX) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 6), c(-5, 5);
  for (int t = 0; t < 100; ++t) {
    BiPoly f;
    for (int k = 0; k < 5; ++k) f += BiPoly::monomial(c(rng), e(rng), e(rng));
    const LaurentPoly l = x_to_laurent(f);
    EXPECT_TRUE(l.is_symmetric_in_s());
    EXPECT_EQ(laurent_to_x(l), f);
  }
}

TEST(BiPolyBasics, CoefficientsAndEvenness) {
  const BiPoly f = BiPoly::monomial(1, 4, 1) - BiPoly::monomial(2, 2, 0) + BiPoly::monomial(3, 0, 3);
  EXPECT_EQ(f.degree_x(), 4);
  EXPECT_EQ(f.degree_z(), 3);
  EXPECT_EQ(f.coeff_x(4), IntPoly({0, 1}));
  EXPECT_TRUE(f.is_even_in_x());
  EXPECT_FALSE((f + BiPoly::monomial(1, 1, 0)).is_even_in_x());
  EXPECT_EQ(f.eval_z(Integer(0)), IntPoly({0, 0, -2}));
}
