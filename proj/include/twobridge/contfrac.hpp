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

#ifndef TWOBRIDGE_CONTFRAC_HPP
#define TWOBRIDGE_CONTFRAC_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/knotnum.hpp"

// Continued fractions use the bracket convention
//
//   [a1, a2, ..., an] = 1 / (a1 + 1 / (a2 + ... + 1 / an))
//
// with formal infinity: 1/0 = inf and x + 1/inf = x. Evaluation is done with
// the 2x2 matrix product  prod_i [[0, 1], [1, a_i]]  applied to the column
// (0, 1), which propagates infinity without special cases: the value is the
// ratio of the (0,1) and (1,1) entries.

namespace twobridge {

using CfEntries = std::vector<std::int64_t>;

/// Homogeneous value (num : den) of a continued fraction; den == 0 is infinity.
struct CfValue {
  Integer num;
  Integer den;
};

inline CfValue eval_cf_homogeneous(std::span<const std::int64_t> entries) {
  Integer m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (std::int64_t a : entries) {
    Integer n01 = m00 + m01 * a;
    Integer n11 = m10 + m11 * a;
    m00 = std::move(m01);
    m10 = std::move(m11);
    m01 = std::move(n01);
    m11 = std::move(n11);
  }
  return {m01, m11};
}

/// Value of a continued fraction as a reduced fraction with positive denominator.
inline Fraction eval_cf(std::span<const std::int64_t> entries) {
  if (entries.empty()) throw Error(ErrorKind::InvalidArgument, "empty continued fraction");
  CfValue v = eval_cf_homogeneous(entries);
  if (v.den == 0) throw Error(ErrorKind::DegenerateValue, "continued fraction evaluates to infinity");
  return Fraction(v.num, v.den);
}

inline Fraction eval_cf(std::initializer_list<std::int64_t> entries) {
  return eval_cf(std::span<const std::int64_t>(entries.begin(), entries.size()));
}

/// Expansion with all entries >= 1 and last entry >= 2 of a fraction 0 < q/p < 1.
inline CfEntries positive_cf(std::int64_t q, std::int64_t p) {
  if (p < 2 || q <= 0 || q >= p || std::gcd(p, q) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "positive_cf needs reduced 0 < q < p, got " + std::to_string(q) + "/" + std::to_string(p));
  }
  CfEntries out;
  while (q != 0) {
    std::int64_t a = p / q;
    out.push_back(a);
    std::int64_t r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

inline CfEntries positive_cf(const Fraction& f) {
  if (!f.num().fits_slong_p() || !f.den().fits_slong_p()) {
    throw Error(ErrorKind::InvalidArgument, "fraction too large for positive_cf");
  }
  return positive_cf(f.num().get_si(), f.den().get_si());
}

inline std::int64_t cf_sum(std::span<const std::int64_t> entries) {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

/// Minimal crossing number of a two-bridge knot: the smallest entry sum of the
/// positive expansions over its Schubert orbit.
inline std::int64_t crossing_number(const TwoBridgeKnot& k) {
  if (k.is_trivial()) throw Error(ErrorKind::DefinedAsZero, "crossing number of the trivial knot is 0");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t q : k.orbit()) best = std::min(best, cf_sum(positive_cf(q, k.p())));
  return best;
}

enum class FamilySign { Plus, Minus };

/// [3,0,3,0,...,0,3, +-2, -+3] with 4k-1 leading entries; evaluates to 5/(30k +- 3).
inline CfEntries expand_paper_family(std::int64_t k, FamilySign sign) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "family index k must be >= 1");
  CfEntries out;
  for (std::int64_t i = 0; i < 4 * k - 1; ++i) out.push_back(i % 2 == 0 ? 3 : 0);
  if (sign == FamilySign::Plus) {
    out.push_back(2);
    out.push_back(-3);
  } else {
    out.push_back(-2);
    out.push_back(3);
  }
  return out;
}

/// Parses "3,0,3,2,-3" (whitespace tolerated).
inline CfEntries parse_cf(std::string_view text) {
  CfEntries out;
  std::string token;
  auto flush = [&] {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw Error(ErrorKind::ParseError, "bad continued-fraction entry '" + token + "'");
    }
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

inline std::string format_cf(std::span<const std::int64_t> entries) {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  return os.str();
}

}  // namespace twobridge

#endif  // TWOBRIDGE_CONTFRAC_HPP
