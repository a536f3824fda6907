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

#ifndef TWOBRIDGE_CHEBYSHEV_HPP
#define TWOBRIDGE_CHEBYSHEV_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/polyring.hpp"

namespace twobridge {

// Chebyshev polynomials of the second kind in the normalization
//   S_0 = 1, S_1 = y, S_k = y S_{k-1} - S_{k-2},
// extended to negative k by running the recursion backwards
// (S_{-1} = 0, S_{-2} = -1, ...).

inline constexpr std::int64_t kChebIndexLimit = 10000;

/// S_k(y) and S_{k-1}(y) for y in any commutative ring R (R{0}, R{1} valid).
template <class R>
std::pair<R, R> cheb_pair(const R& y, std::int64_t k) {
  R prev = R{0};  // S_{-1}
  R cur = R{1};   // S_0
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) {
      R next = y * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return {cur, prev};
  }
  // Backwards: S_{j-2} = y S_{j-1} - S_j.
  for (std::int64_t i = 0; i > k; --i) {
    R lower = y * prev - cur;
    cur = std::move(prev);
    prev = std::move(lower);
  }
  return {cur, prev};
}

/// S_k as an integer polynomial in y.
inline IntPoly cheb_S(std::int64_t k) {
  if (std::llabs(k) > kChebIndexLimit) {
    throw Error(ErrorKind::InvalidArgument, "Chebyshev index out of range: " + std::to_string(k));
  }
  return cheb_pair(IntPoly{0, 1}, k).first;
}

/// S_0 .. S_kmax in one pass.
inline std::vector<IntPoly> cheb_sequence(std::int64_t kmax) {
  std::vector<IntPoly> out;
  const IntPoly y{0, 1};
  IntPoly prev{0}, cur{1};
  for (std::int64_t k = 0; k <= kmax; ++k) {
    out.push_back(cur);
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

/// S_k(2) or S_k(-2).
inline Integer cheb_eval_special(std::int64_t k, int point) {
  if (point != 2 && point != -2) throw Error(ErrorKind::InvalidArgument, "special point must be 2 or -2");
  return cheb_pair(Integer(point), k).first;
}

/// S_k^2 + S_{k-1}^2 - y S_k S_{k-1} == 1 as an exact polynomial identity.
inline bool verify_pell(std::int64_t k) {
  const IntPoly y{0, 1};
  auto [sk, skm1] = cheb_pair(y, k);
  return sk * sk + skm1 * skm1 - y * sk * skm1 == IntPoly{1};
}

/// S_k is monic of degree k and vanishes (within tolerance) at
/// 2 cos(j pi / (k+1)), j = 1..k; together these give the root product form.
inline bool verify_root_product(std::int64_t k, double tolerance = 1e-9) {
  if (k < 1 || k > 64) throw Error(ErrorKind::InvalidArgument, "root product check needs 1 <= k <= 64");
  IntPoly s = cheb_S(k);
  if (s.degree() != k || s.leading() != 1) return false;
  for (std::int64_t j = 1; j <= k; ++j) {
    const double root = 2.0 * std::cos(static_cast<double>(j) * std::numbers::pi / static_cast<double>(k + 1));
    // Recurrence evaluation; the monomial form loses all precision near |y| = 2.
    if (std::abs(cheb_pair(root, k).first) >= tolerance) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2x2 matrices over a commutative ring.
// ---------------------------------------------------------------------------

template <class R>
struct Mat2 {
  R a{0}, b{0}, c{0}, d{0};

  static Mat2 identity() { return {R{1}, R{0}, R{0}, R{1}}; }

  [[nodiscard]] R trace() const { return a + d; }
  [[nodiscard]] R det() const { return a * d - b * c; }

  /// Inverse of a determinant-one matrix.
  [[nodiscard]] Mat2 sl2_inverse() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// M^k via the Chebyshev closed form
///   M^k = [[S_k - d S_{k-1}, b S_{k-1}], [c S_{k-1}, S_k - a S_{k-1}]],  y = tr M.
template <class R>
Mat2<R> sl2_power(const Mat2<R>& m, std::int64_t k) {
  if (!(m.det() == R{1})) throw Error(ErrorKind::DeterminantNotOne, "sl2_power needs det M = 1");
  auto [sk, skm1] = cheb_pair(m.trace(), k);
  return {sk - m.d * skm1, m.b * skm1, m.c * skm1, sk - m.a * skm1};
}

}  // namespace twobridge

#endif  // TWOBRIDGE_CHEBYSHEV_HPP
