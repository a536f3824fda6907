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

#ifndef TWOBRIDGE_FACTOR_HPP
#define TWOBRIDGE_FACTOR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/polyring.hpp"

// Factorization over Z by the classical Zassenhaus route:
//   squarefree decomposition (Yun) -> factorization modulo a small prime
//   (distinct-degree + Cantor-Zassenhaus equal-degree splitting) -> Hensel
//   lifting along a factor tree -> recombination of modular factors by
//   subset search, smallest subsets first.

namespace twobridge {

inline constexpr int kFactorDegreeCap = 256;

struct FactorResult {
  /// Signed integer content; f = content * prod(factor^multiplicity).
  Integer content = 1;
  /// Primitive irreducible factors with positive leading coefficient,
  /// sorted by degree then coefficients.
  std::vector<std::pair<IntPoly, int>> factors;

  [[nodiscard]] IntPoly product() const {
    IntPoly acc = IntPoly::constant(content);
    for (const auto& [f, m] : factors) acc *= pow(f, static_cast<unsigned>(m));
    return acc;
  }
  [[nodiscard]] int factor_count() const {
    int n = 0;
    for (const auto& fm : factors) n += fm.second;
    return n;
  }
  [[nodiscard]] bool is_irreducible() const {
    return factors.size() == 1 && factors.front().second == 1 && factors.front().first.degree() >= 1;
  }
};

namespace detail {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31. Dense, low degree first.
// ---------------------------------------------------------------------------
namespace fp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

inline Poly from_int(const IntPoly& f, u64 p) {
  Poly out(f.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f.coefficients()[i].get_mpz_t(), p);
  trim(out);
  return out;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

inline Poly scale(Poly a, u64 c, u64 p) {
  for (auto& v : a) v = v * c % p;
  trim(a);
  return a;
}

inline Poly monic(const Poly& a, u64 p) { return a.empty() ? a : scale(a, inv_mod(a.back(), p), p); }

// a = q * b + r with deg r < deg b.
inline void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 inv = inv_mod(b.back(), p);
  for (int i = deg(r); i >= deg(b); --i) {
    u64 c = r[static_cast<std::size_t>(i)] * inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
      slot = (slot + p - c * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(q);
  trim(r);
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}
inline Poly quo(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return q;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
inline void bezout(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant.
  const u64 inv = inv_mod(r0.front(), p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
}

inline Poly derivative(const Poly& a, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

inline Poly powmod(Poly base, const mpz_class& e, const Poly& m, u64 p) {
  Poly acc{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = rem(mul(acc, acc, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = rem(mul(acc, base, p), m, p);
  }
  return acc;
}

struct DegreeBlock {
  Poly product;  // monic product of all irreducible factors of this degree
  int degree;
};

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<DegreeBlock> distinct_degree(Poly f, u64 p) {
  std::vector<DegreeBlock> out;
  const Poly x{0, 1};
  Poly h = x;
  const mpz_class pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, pz, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.push_back({g, d});
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

// Splits a block whose irreducible factors all have the given degree.
inline void equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(deg(f)));
    for (auto& v : a) v = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly b = powmod(a, e, f, p);
    b = sub(b, Poly{1}, p);
    Poly g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(quo(f, g, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Arithmetic in (Z / mZ)[x] on IntPoly with coefficients kept in [0, m).
// ---------------------------------------------------------------------------

inline IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), f.coefficients()[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

inline IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coefficients().size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), f.coefficients()[i].get_mpz_t(), m.get_mpz_t());
    if (c[i] > half) c[i] -= m;
  }
  return IntPoly(std::move(c));
}

inline IntPoly from_fp(const fp::Poly& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

// Division by a monic polynomial modulo m.
inline void divmod_monic(const IntPoly& a, const IntPoly& h, const Integer& m, IntPoly& q, IntPoly& r) {
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const int dh = h.degree();
  if (a.degree() < dh) {
    q = IntPoly{};
    r = reduce_mod(a, m);
    return;
  }
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - dh) + 1, Integer(0));
  for (int i = a.degree(); i >= dh; --i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), rem[static_cast<std::size_t>(i)].get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    for (int j = 0; j <= dh; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - dh + j)].get_mpz_t(), c.get_mpz_t(), h.coeff(j).get_mpz_t());
    }
    quot[static_cast<std::size_t>(i - dh)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(dh));
  q = reduce_mod(IntPoly(std::move(quot)), m);
  r = reduce_mod(IntPoly(std::move(rem)), m);
}

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) to mod m^2.
inline void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Integer& m) {
  const Integer m2 = m * m;
  IntPoly e = reduce_mod(f - g * h, m2);
  IntPoly q, r;
  divmod_monic(s * e, h, m2, q, r);
  IntPoly g_new = reduce_mod(g + t * e + q * g, m2);
  IntPoly h_new = reduce_mod(h + r, m2);
  IntPoly b = reduce_mod(s * g_new + t * h_new - IntPoly{1}, m2);
  IntPoly c, d;
  divmod_monic(s * b, h_new, m2, c, d);
  s = reduce_mod(s - d, m2);
  t = reduce_mod(t - t * b - c * g_new, m2);
  g = std::move(g_new);
  h = std::move(h_new);
}

// Lifts f = g0 h0 (mod p), h0 monic, to f = g h (mod p^(2^steps)).
inline std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const fp::Poly& g0, const fp::Poly& h0, fp::u64 p,
                                              int steps) {
  fp::Poly s0, t0;
  fp::bezout(g0, h0, p, s0, t0);
  IntPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  Integer m(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  return {g, h};
}

// Factor tree lifting: f = lc(f) * prod(factors) (mod p) -> monic lifts mod p^(2^steps).
inline void lift_all(const IntPoly& f, std::span<const fp::Poly> factors, fp::u64 p, int steps, const Integer& modulus,
                     std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t());
    out.push_back(reduce_mod(f * inv, modulus));
    return;
  }
  const std::size_t k = factors.size() / 2;
  fp::Poly g0{mpz_fdiv_ui(f.leading().get_mpz_t(), p)};
  for (std::size_t i = 0; i < k; ++i) g0 = fp::mul(g0, factors[i], p);
  fp::Poly h0{1};
  for (std::size_t i = k; i < factors.size(); ++i) h0 = fp::mul(h0, factors[i], p);
  auto [g, h] = hensel_lift(f, g0, h0, p, steps);
  lift_all(g, factors.first(k), p, steps, modulus, out);
  lift_all(h, factors.subspan(k), p, steps, modulus, out);
}

inline std::vector<fp::u64> small_odd_primes(std::size_t count_hint) {
  std::vector<fp::u64> out;
  for (fp::u64 n = 3; out.size() < count_hint; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

// Factor degrees achievable as sums of sub-multisets of modular factor degrees.
inline std::vector<bool> subset_degree_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> ok(static_cast<std::size_t>(n) + 1, false);
  ok[0] = true;
  for (int d : degrees) {
    for (int s = n; s >= d; --s) {
      if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = true;
    }
  }
  return ok;
}

// Irreducible factors of a primitive squarefree f with lc > 0, deg >= 1, f(0) != 0.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  if (n == 1) return {f};

  struct Candidate {
    fp::u64 p;
    std::vector<fp::DegreeBlock> blocks;
    std::size_t count;
  };
  std::vector<Candidate> good;
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  constexpr std::size_t kPrimesWanted = 5;
  for (fp::u64 p = 3; good.size() < kPrimesWanted; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    fp::Poly fb = fp::from_int(f, p);
    if (fp::deg(fp::gcd(fb, fp::derivative(fb, p), p)) != 0) continue;
    Candidate c{p, fp::distinct_degree(fp::monic(fb, p), p), 0};
    std::vector<int> degrees;
    for (const auto& b : c.blocks) {
      for (int i = 0; i < fp::deg(b.product) / b.degree; ++i) degrees.push_back(b.degree);
    }
    c.count = degrees.size();
    auto sums = subset_degree_sums(degrees, n);
    for (int d = 0; d <= n; ++d) allowed[static_cast<std::size_t>(d)] = allowed[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
    good.push_back(std::move(c));
    if (good.back().count == 1) return {f};
  }
  bool splittable = false;
  for (int d = 1; d < n; ++d) splittable = splittable || allowed[static_cast<std::size_t>(d)];
  if (!splittable) return {f};

  const Candidate& best = *std::min_element(good.begin(), good.end(), [](const Candidate& a, const Candidate& b) {
    return a.count < b.count || (a.count == b.count && a.p < b.p);
  });
  const fp::u64 p = best.p;
  std::mt19937_64 rng(0x7b5eedULL + p);
  std::vector<fp::Poly> modular;
  for (const auto& b : best.blocks) fp::equal_degree(b.product, b.degree, p, rng, modular);
  std::sort(modular.begin(), modular.end(), [](const fp::Poly& a, const fp::Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  // Coefficient bound for lc(f) * g / lc(g), g any factor of f.
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= static_cast<mp_bitcnt_t>(n);
  bound *= abs(f.leading());
  const Integer need = 2 * bound + 1;
  int steps = 0;
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= need) {
    modulus *= modulus;
    ++steps;
  }

  std::vector<IntPoly> lifted;
  lift_all(f, modular, p, steps, modulus, lifted);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<std::size_t> active(lifted.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  auto image_mod_p = [&](const IntPoly& g) { return fp::monic(fp::from_int(g, p), p); };

  std::size_t s = 1;
  while (2 * s <= active.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      int dsum = 0;
      for (auto i : idx) dsum += lifted[active[i]].degree();
      if (allowed[static_cast<std::size_t>(dsum)]) {
        IntPoly cand = IntPoly::constant(rest.leading());
        for (auto i : idx) cand = reduce_mod(cand * lifted[active[i]], modulus);
        cand = symmetric_mod(cand, modulus);
        const Integer& c0 = cand.coeff(0);
        Integer r0 = rest.coeff(0) * rest.leading();
        if (c0 != 0 && mpz_divisible_p(r0.get_mpz_t(), c0.get_mpz_t())) {
          IntPoly g = cand.primitive_part();
          if (auto q = divide_exact(rest, g)) {
            fp::Poly expected{1};
            for (auto i : idx) expected = fp::mul(expected, fp::from_int(lifted[active[i]], p), p);
            if (image_mod_p(g) == fp::monic(expected, p)) {
              found.push_back(g);
              rest = q->primitive_part();
              std::vector<std::size_t> keep;
              for (std::size_t j = 0; j < active.size(); ++j) {
                if (std::find(idx.begin(), idx.end(), j) == idx.end()) keep.push_back(active[j]);
              }
              active = std::move(keep);
              hit = true;
              break;
            }
          }
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == active.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() >= 1) found.push_back(rest);
  return found;
}

// Yun's squarefree decomposition of a primitive polynomial with lc > 0.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  IntPoly df = f.derivative();
  IntPoly c = gcd_poly(f, df);
  IntPoly w = *divide_exact(f, c);
  IntPoly y = *divide_exact(df, c);
  IntPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() >= 1) {
    IntPoly g = z.is_zero() ? w.primitive_part() : gcd_poly(w, z);
    if (g.degree() >= 1) out.emplace_back(g, i);
    w = *divide_exact(w, g);
    y = *divide_exact(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace detail

/// Complete factorization of f over Z.
inline FactorResult factor_integers(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  if (f.degree() > kFactorDegreeCap) {
    throw Error(ErrorKind::DegreeCap, "degree " + std::to_string(f.degree()) + " exceeds the factorization cap of " +
                                          std::to_string(kFactorDegreeCap));
  }
  FactorResult result;
  IntPoly prim = f.primitive_part();
  result.content = f.content();
  if (f.leading() < 0) result.content = -result.content;
  if (prim.degree() < 1) return result;

  // Strip the power of t.
  int tpow = 0;
  while (prim.coeff(tpow) == 0) ++tpow;
  if (tpow > 0) {
    std::vector<Integer> c(prim.coefficients().begin() + tpow, prim.coefficients().end());
    prim = IntPoly(std::move(c));
    result.factors.emplace_back(IntPoly{0, 1}, tpow);
  }
  for (const auto& [sqf, mult] : detail::squarefree_decomposition(prim)) {
    for (auto& g : detail::zassenhaus(sqf)) result.factors.emplace_back(std::move(g), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    auto ca = a.first.coefficients(), cb = b.first.coefficients();
    if (!std::equal(ca.begin(), ca.end(), cb.begin(), cb.end())) {
      return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
    return a.second < b.second;
  });
  return result;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_FACTOR_HPP
