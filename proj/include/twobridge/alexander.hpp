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

#ifndef TWOBRIDGE_ALEXANDER_HPP
#define TWOBRIDGE_ALEXANDER_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/factor.hpp"
#include "twobridge/knotnum.hpp"
#include "twobridge/polyring.hpp"

namespace twobridge {

/// Alexander polynomial normalized to lowest exponent 0 and positive leading
/// coefficient.
class AlexPoly {
 public:
  AlexPoly() : poly_{1} {}
  explicit AlexPoly(IntPoly p) : poly_(normalize(std::move(p))) {}

  [[nodiscard]] const IntPoly& poly() const noexcept { return poly_; }
  [[nodiscard]] int degree() const noexcept { return poly_.degree(); }
  [[nodiscard]] std::string str() const { return poly_.str("t"); }

  friend bool operator==(const AlexPoly&, const AlexPoly&) = default;

 private:
  static IntPoly normalize(IntPoly p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero is not an Alexander polynomial");
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low > 0) {
      std::vector<Integer> c(p.coefficients().begin() + low, p.coefficients().end());
      p = IntPoly(std::move(c));
    }
    return p.leading() < 0 ? -p : p;
  }

  IntPoly poly_;
};

/// Alternating sum over the sign sequence e_i = (-1)^floor(i q*/p) of the
/// odd representative q*.
inline AlexPoly alexander_poly(const TwoBridgeKnot& k) {
  if (k.is_trivial()) return AlexPoly{};
  const std::int64_t p = k.p();
  const std::int64_t qs = k.odd_representative();
  std::map<std::int64_t, Integer> terms;
  std::int64_t height = 0;
  terms[0] += 1;
  for (std::int64_t i = 1; i < p; ++i) {
    height += ((i * qs / p) % 2 == 0) ? 1 : -1;
    terms[height] += (i % 2 == 0) ? 1 : -1;
  }
  const std::int64_t low = terms.begin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(terms.rbegin()->first - low + 1), Integer(0));
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - low)] = v;
  return AlexPoly(IntPoly(std::move(c)));
}

/// |Delta(-1)|, which always equals p.
inline std::int64_t determinant(const TwoBridgeKnot& k) {
  Integer v = abs(alexander_poly(k).poly().eval(Integer(-1)));
  if (v != k.p()) throw std::logic_error("determinant mismatch for " + k.str() + ": " + v.get_str());
  return k.p();
}

inline bool divides_alexander(const AlexPoly& source, const AlexPoly& target) {
  return divide_exact(source.poly(), target.poly()).has_value();
}

inline bool divides_alexander(const TwoBridgeKnot& source, const TwoBridgeKnot& target) {
  if (source.is_trivial() || target.is_trivial()) {
    throw Error(ErrorKind::InvalidArgument, "divisibility test needs nontrivial knots");
  }
  return divides_alexander(alexander_poly(source), alexander_poly(target));
}

inline bool alexander_irreducible(const AlexPoly& a) {
  FactorResult f = factor_integers(a.poly());
  return (f.content == 1 || f.content == -1) && f.is_irreducible();
}

inline bool alexander_irreducible(const TwoBridgeKnot& k) {
  if (k.is_trivial()) throw Error(ErrorKind::InvalidArgument, "the trivial knot has a unit Alexander polynomial");
  return alexander_irreducible(alexander_poly(k));
}

inline int alexander_degree(const TwoBridgeKnot& k) { return alexander_poly(k).degree(); }

}  // namespace twobridge

#endif  // TWOBRIDGE_ALEXANDER_HPP
