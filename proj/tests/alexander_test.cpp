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

#include "oracles.hpp"
#include "twobridge/alexander.hpp"

using namespace twobridge;

namespace {

IntPoly from_coeffs(const oracle::Coeffs& c) {
  std::vector<Integer> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return IntPoly(std::move(v));
}

IntPoly alex(std::int64_t p, std::int64_t q) { return alexander_poly(canonical_form(p, q)).poly(); }

}  // namespace

TEST(Alexander, Examples) {
  EXPECT_EQ(alex(3, 1), IntPoly({1, -1, 1}));
  EXPECT_EQ(alex(15, 4), IntPoly({4, -7, 4}));
  EXPECT_EQ(alex(5, 2), IntPoly({1, -3, 1}));
  EXPECT_EQ(alex(7, 3), IntPoly({2, -3, 2}));
  EXPECT_EQ(alexander_poly(trivial_knot()).poly(), IntPoly{1});
}

TEST(Alexander, MatchesFoxCalculus) {
  for (const auto& k : enumerate_knots(199)) {
    ASSERT_EQ(alexander_poly(k).poly(), from_coeffs(oracle::fox_alexander(k.p(), k.odd_representative())))
        << k.str();
  }
}

TEST(Alexander, StructuralInvariants) {
  for (const auto& k : enumerate_knots(199)) {
    const IntPoly a = alexander_poly(k).poly();
    ASSERT_EQ(abs(a.eval(Integer(1))), 1) << k.str();
    ASSERT_EQ(abs(a.eval(Integer(-1))), k.p()) << k.str();
    ASSERT_TRUE(a.reversed() == a || a.reversed() == -a) << k.str();
    ASSERT_GT(a.leading(), 0);
    ASSERT_NE(a.coeff(0), 0);
    for (std::int64_t q : k.orbit()) {
      const std::int64_t odd = (q % 2 != 0) ? q : k.p() - q;
      ASSERT_EQ(from_coeffs(oracle::fox_alexander(k.p(), odd)), a);
    }
  }
}

TEST(Alexander, EvenRepresentativeIsWrong) {
  // The alternating sum with the even member of {q, p - q} does not give a
  // symmetric polynomial.
  const TwoBridgeKnot k = canonical_form(5, 2);
  const IntPoly wrong = from_coeffs(oracle::fox_alexander(5, 2));
  EXPECT_NE(wrong, alexander_poly(k).poly());
}

TEST(Alexander, DoubleTwistFormula) {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const std::int64_t k2 = k * k;
    EXPECT_EQ(alex(4 * k2 - 1, 2 * k), IntPoly({k2, -(2 * k2 - 1), k2})) << k;
  }
}

TEST(Alexander, TorusQuotient) {
  for (std::int64_t p = 3; p <= 99; p += 2) {
    std::vector<Integer> c(static_cast<std::size_t>(p), Integer(1));
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -1;
    EXPECT_EQ(alex(p, 1), IntPoly(c)) << p;
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(canonical_form(3, 1)), 3);
  EXPECT_EQ(determinant(canonical_form(45, 14)), 45);
  EXPECT_EQ(determinant(canonical_form(5, 2)), 5);
}

TEST(Divisibility, Examples) {
  EXPECT_TRUE(divides_alexander(canonical_form(45, 14), canonical_form(9, 2)));
  EXPECT_TRUE(divides_alexander(canonical_form(45, 14), canonical_form(5, 1)));
  EXPECT_FALSE(divides_alexander(canonical_form(15, 4), canonical_form(3, 1)));
  EXPECT_TRUE(divides_alexander(canonical_form(51, 16), canonical_form(3, 1)));
  EXPECT_TRUE(divides_alexander(canonical_form(9, 1), canonical_form(3, 1)));
  EXPECT_THROW(divides_alexander(trivial_knot(), canonical_form(3, 1)), Error);
}

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(alexander_irreducible(canonical_form(15, 4)));
  EXPECT_FALSE(alexander_irreducible(canonical_form(9, 1)));
  EXPECT_TRUE(alexander_irreducible(canonical_form(5, 2)));
  EXPECT_FALSE(alexander_irreducible(canonical_form(45, 14)));
}

TEST(Degree, Examples) {
  EXPECT_EQ(alexander_degree(canonical_form(5, 2)), 2);
  EXPECT_EQ(alexander_degree(canonical_form(7, 3)), 2);
  EXPECT_EQ(alexander_degree(canonical_form(45, 14)), 6);
  EXPECT_EQ(alexander_degree(canonical_form(9, 1)), 8);
}
