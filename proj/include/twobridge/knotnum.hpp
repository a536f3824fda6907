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

#ifndef TWOBRIDGE_KNOTNUM_HPP
#define TWOBRIDGE_KNOTNUM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "twobridge/error.hpp"

namespace twobridge {

using Integer = mpz_class;

/// Reduced rational number num/den with den >= 1.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error(ErrorKind::DegenerateValue, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  [[nodiscard]] const Integer& num() const noexcept { return num_; }
  [[nodiscard]] const Integer& den() const noexcept { return den_; }

  [[nodiscard]] std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 2.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorKind::NotReduced, "element is not invertible");
  return floor_mod(old_s, m);
}

}  // namespace detail

/// Two-bridge knot b(p,q), stored as the minimum of its Schubert orbit.
/// The trivial knot is p = 1, q = 0. Instances are produced by canonical_form.
class TwoBridgeKnot {
 public:
  TwoBridgeKnot() = default;

  [[nodiscard]] std::int64_t p() const noexcept { return p_; }
  [[nodiscard]] std::int64_t q() const noexcept { return q_; }
  [[nodiscard]] bool is_trivial() const noexcept { return p_ == 1; }

  /// The (up to four) distinct residues q' in (0,p) with b(p,q') = b(p,q),
  /// sorted ascending. Empty for the trivial knot.
  [[nodiscard]] std::vector<std::int64_t> orbit() const {
    if (is_trivial()) return {};
    std::int64_t inv = detail::mod_inverse(q_, p_);
    std::vector<std::int64_t> out{q_, p_ - q_, inv, p_ - inv};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Odd member of {q, p - q}; exactly one of them is odd since p is odd.
  [[nodiscard]] std::int64_t odd_representative() const noexcept {
    return (q_ % 2 != 0) ? q_ : p_ - q_;
  }

  [[nodiscard]] std::string str() const {
    return "b(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  friend auto operator<=>(const TwoBridgeKnot&, const TwoBridgeKnot&) = default;

 private:
  friend TwoBridgeKnot canonical_form(std::int64_t p, std::int64_t q);
  TwoBridgeKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const TwoBridgeKnot& k) { return os << k.str(); }

/// Orbit-minimal representative of b(p,q) under Schubert's classification.
inline TwoBridgeKnot canonical_form(std::int64_t p, std::int64_t q) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "p must be positive, got " + std::to_string(p));
  if (p % 2 == 0) {
    throw Error(ErrorKind::LinkNotKnot,
                "p = " + std::to_string(p) + " is even, b(p,q) is a two-component link");
  }
  if (p == 1) return TwoBridgeKnot(1, 0);
  std::int64_t r = detail::floor_mod(q, p);
  if (std::gcd(r, p) != 1) {
    throw Error(ErrorKind::NotReduced,
                "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
  std::int64_t inv = detail::mod_inverse(r, p);
  std::int64_t best = std::min({r, p - r, inv, p - inv});
  return TwoBridgeKnot(p, best);
}

inline TwoBridgeKnot trivial_knot() { return canonical_form(1, 0); }

/// Schubert's criterion applied directly to two (p,q) pairs.
inline bool schubert_equivalent(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  (void)canonical_form(p1, q1);
  (void)canonical_form(p2, q2);
  if (p1 != p2) return false;
  const std::int64_t p = p1;
  if (p == 1) return true;
  const std::int64_t a = detail::floor_mod(q1, p);
  const std::int64_t b = detail::floor_mod(q2, p);
  if (a == b || detail::floor_mod(a + b, p) == 0) return true;
  const std::int64_t prod = detail::floor_mod(a * b, p);
  return prod == 1 || prod == p - 1;
}

inline bool schubert_equivalent(const TwoBridgeKnot& a, const TwoBridgeKnot& b) { return a == b; }

inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Canonical knots with 3 <= p <= max_p, ordered by (p, q).
inline std::vector<TwoBridgeKnot> enumerate_knots(std::int64_t max_p) {
  std::vector<TwoBridgeKnot> out;
  for (std::int64_t p = 3; p <= max_p; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      TwoBridgeKnot k = canonical_form(p, q);
      if (k.q() == q) out.push_back(k);
    }
  }
  return out;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_KNOTNUM_HPP
