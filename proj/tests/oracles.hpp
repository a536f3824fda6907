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

// Reference computations used only by the tests. They deliberately avoid the
// library's algorithms: plain int64 vectors, Fox calculus instead of the
// alternating sum, cyclotomic division instead of factoring.

#ifndef TWOBRIDGE_TESTS_ORACLES_HPP
#define TWOBRIDGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Coeffs = std::vector<long long>;  // low degree first

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact division by a monic polynomial.
inline Coeffs div_monic(Coeffs a, const Coeffs& m) {
  const std::size_t dm = m.size() - 1;
  if (a.size() < m.size()) return {};
  Coeffs q(a.size() - dm, 0);
  for (std::size_t i = a.size(); i-- > dm;) {
    const long long c = a[i];
    q[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
  }
  trim(q);
  return q;
}

// Phi_n by dividing t^n - 1 by Phi_d for the proper divisors d.
inline Coeffs cyclotomic(int n) {
  static std::map<int, Coeffs> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Coeffs f(static_cast<std::size_t>(n + 1), 0);
  f[0] = -1;
  f[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) f = div_monic(f, cyclotomic(d));
  }
  memo[n] = f;
  return f;
}

// Sign-sequence letters of the relator word of b(p, q), q odd: +-1 for a, +-2 for b.
inline std::vector<int> relator_letters(long long p, long long q_odd) {
  std::vector<int> w;
  for (long long i = 1; i < p; ++i) {
    const int sign = ((i * q_odd / p) % 2 == 0) ? 1 : -1;
    w.push_back(sign * ((i % 2 == 1) ? 1 : 2));
  }
  return w;
}

// Fox derivative d/da of r = w a w^-1 b^-1 under a, b -> t, normalized to
// lowest exponent 0 and positive leading coefficient.
inline Coeffs fox_alexander(long long p, long long q_odd) {
  const std::vector<int> w = relator_letters(p, q_odd);
  std::vector<int> r = w;
  r.push_back(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  r.push_back(-2);
  std::map<long long, long long> acc;
  long long e = 0;
  for (int x : r) {
    if (x == 1) acc[e] += 1;
    if (x == -1) acc[e - 1] -= 1;
    e += (x > 0) ? 1 : -1;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  if (acc.empty()) return {};
  const long long low = acc.begin()->first;
  Coeffs out(static_cast<std::size_t>(acc.rbegin()->first - low + 1), 0);
  for (const auto& [k, v] : acc) out[static_cast<std::size_t>(k - low)] = v;
  if (out.back() < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

// Random irreducible polynomial by Eisenstein's criterion at the prime ell:
// leading coefficient prime to ell, others divisible by ell, constant term
// not divisible by ell^2, content 1, positive leading coefficient.
inline Coeffs eisenstein(std::mt19937_64& rng, int degree, long long ell) {
  std::uniform_int_distribution<long long> small(-3, 3);
  for (;;) {
    Coeffs c(static_cast<std::size_t>(degree + 1), 0);
    for (int i = 1; i < degree; ++i) c[static_cast<std::size_t>(i)] = ell * small(rng);
    long long lead = 0;
    while (lead % ell == 0) lead = 1 + std::uniform_int_distribution<long long>(0, 4)(rng);
    c[static_cast<std::size_t>(degree)] = lead;
    long long k = 0;
    while (k % ell == 0) k = small(rng);
    c[0] = ell * k;
    long long g = 0;
    for (long long v : c) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1) return c;
  }
}

}  // namespace oracle

#endif  // TWOBRIDGE_TESTS_ORACLES_HPP
