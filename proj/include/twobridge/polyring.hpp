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

#ifndef TWOBRIDGE_POLYRING_HPP
#define TWOBRIDGE_POLYRING_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/knotnum.hpp"

namespace twobridge {

namespace detail {

inline void append_signed_term(std::ostringstream& os, const Integer& c, const std::string& mono,
                               bool first) {
  Integer mag = abs(c);
  if (c < 0) {
    os << "-";
  } else if (!first) {
    os << "+";
  }
  if (mono.empty()) {
    os << mag.get_str();
  } else if (mag != 1) {
    os << mag.get_str() << mono;
  } else {
    os << mono;
  }
}

inline std::string power_str(std::string_view var, long e) {
  if (e == 0) return {};
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// IntPoly: univariate polynomial over Z, dense, low degree first.
// ---------------------------------------------------------------------------

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
  static IntPoly monomial(const Integer& v, int degree) {
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
    c.back() = v;
    return IntPoly(std::move(c));
  }
  /// The polynomial x - r.
  static IntPoly linear_root(const Integer& r) { return IntPoly(std::vector<Integer>{-r, Integer(1)}); }

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept { return c_.size() <= 1; }
  [[nodiscard]] std::span<const Integer> coefficients() const noexcept { return c_; }

  [[nodiscard]] const Integer& coeff(int i) const {
    static const Integer zero(0);
    return (i < 0 || i > degree()) ? zero : c_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] const Integer& leading() const { return coeff(degree()); }

  [[nodiscard]] Integer eval(const Integer& v) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }
  [[nodiscard]] double eval(double v) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
    return acc;
  }

  [[nodiscard]] IntPoly derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return IntPoly(std::move(d));
  }

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  [[nodiscard]] Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Content removed and leading coefficient made positive.
  [[nodiscard]] IntPoly primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    return divide_scalar(g);
  }

  /// Coefficient-wise exact division; caller guarantees divisibility.
  [[nodiscard]] IntPoly divide_scalar(const Integer& d) const {
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
    return IntPoly(std::move(out));
  }

  /// Multiplicity of the root r (number of times x - r divides this).
  [[nodiscard]] int root_multiplicity(const Integer& r) const;

  /// Coefficients reversed: t^deg * f(1/t).
  [[nodiscard]] IntPoly reversed() const {
    std::vector<Integer> out(c_.rbegin(), c_.rend());
    return IntPoly(std::move(out));
  }

  [[nodiscard]] std::string str(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Integer& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      detail::append_signed_term(os, v, detail::power_str(var, i), first);
      first = false;
    }
    return os.str();
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const Integer& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return IntPoly(std::move(out));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

inline IntPoly pow(IntPoly base, unsigned exponent) {
  IntPoly acc{1};
  while (exponent) {
    if (exponent & 1u) acc *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return acc;
}

/// Quotient c with a = b * c over Z, or nullopt when b does not divide a.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db) + 1, Integer(0));
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), qc.get_mpz_t(),
                 b.coeff(j).get_mpz_t());
    }
    quot[static_cast<std::size_t>(i - db)] = std::move(qc);
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

inline int IntPoly::root_multiplicity(const Integer& r) const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "root multiplicity of the zero polynomial");
  int m = 0;
  IntPoly cur = *this;
  const IntPoly lin = linear_root(r);
  while (cur.eval(r) == 0) {
    cur = *divide_exact(cur, lin);
    ++m;
  }
  return m;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer top = r[static_cast<std::size_t>(i)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), top.get_mpz_t(), b.coeff(j).get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

/// Primitive gcd with positive leading coefficient, computed with the
/// subresultant remainder sequence. gcd(f, 0) = primitive part of f.
inline IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly f = a.primitive_part();
  IntPoly g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  if (g.degree() == 0) return IntPoly{1};
  Integer gg = 1, h = 1;
  while (true) {
    const int delta = f.degree() - g.degree();
    IntPoly r = pseudo_remainder(f, g);
    if (r.is_zero()) return g.primitive_part();
    if (r.degree() == 0) return IntPoly{1};
    Integer hpow;
    mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    f = std::move(g);
    g = r.divide_scalar(gg * hpow);
    gg = f.leading();
    // h <- gg^delta / h^(delta - 1); unchanged when delta = 0.
    if (delta > 0) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

/// h with h^2 = f or h^2 = -f over Q (h then has integer coefficients), else nullopt.
inline std::optional<IntPoly> is_perfect_square(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "is_perfect_square of zero");
  if (f.degree() % 2 != 0) return std::nullopt;
  IntPoly g = f.leading() < 0 ? -f : f;
  Integer cont = g.content();
  if (!mpz_perfect_square_p(cont.get_mpz_t())) return std::nullopt;
  Integer root_cont = sqrt(cont);
  IntPoly prim = g.divide_scalar(cont);
  const Integer& lc = prim.leading();
  if (!mpz_perfect_square_p(lc.get_mpz_t())) return std::nullopt;
  // Solve h top-down: prim = h^2, h has degree n/2 and leading sqrt(lc).
  const int n = prim.degree();
  const int m = n / 2;
  std::vector<Integer> h(static_cast<std::size_t>(m) + 1, Integer(0));
  h[static_cast<std::size_t>(m)] = sqrt(lc);
  const Integer two_lead = 2 * h[static_cast<std::size_t>(m)];
  for (int k = m - 1; k >= 0; --k) {
    // coefficient of x^(m + k) in h^2 = 2 h_m h_k + sum_{i=k+1}^{m-1} h_i h_{m+k-i}
    Integer acc = prim.coeff(m + k);
    for (int i = k + 1; i <= m - 1; ++i) acc -= h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(m + k - i)];
    if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(h[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
  }
  IntPoly hp(std::move(h));
  if (hp * hp != prim) return std::nullopt;
  return hp * root_cont;
}

/// Parses "4t^2-7t+4" style text in the given variable.
inline IntPoly parse_intpoly(std::string_view text, char var = 't') {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  std::map<long, Integer> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (i < s.size() && s[i] == '*') ++i;
    Integer coef = digits.empty() ? Integer(1) : Integer(digits);
    long exp = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty()) fail("missing exponent");
        exp = std::stol(e);
      }
    } else if (digits.empty()) {
      fail("expected a coefficient or the variable");
    }
    terms[exp] += sign * coef;
  }
  long top = terms.empty() ? -1 : terms.rbegin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(top + 1), Integer(0));
  for (auto& [e, v] : terms) c[static_cast<std::size_t>(e)] = v;
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// BiPoly: polynomial in (x, z) over Z, sparse.
// ---------------------------------------------------------------------------

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (x exponent, z exponent)

  BiPoly() = default;

  static BiPoly monomial(const Integer& c, int ex, int ez) {
    BiPoly p;
    if (c != 0) p.t_[{ex, ez}] = c;
    return p;
  }
  /// c(z) * x^ex.
  static BiPoly from_z_poly(const IntPoly& c, int ex) {
    BiPoly p;
    for (int j = 0; j <= c.degree(); ++j) {
      if (c.coeff(j) != 0) p.t_[{ex, j}] = c.coeff(j);
    }
    return p;
  }
  /// c(x) with no z.
  static BiPoly from_x_poly(const IntPoly& c) {
    BiPoly p;
    for (int j = 0; j <= c.degree(); ++j) {
      if (c.coeff(j) != 0) p.t_[{j, 0}] = c.coeff(j);
    }
    return p;
  }

  [[nodiscard]] const std::map<Key, Integer>& terms() const noexcept { return t_; }
  [[nodiscard]] bool is_zero() const noexcept { return t_.empty(); }

  [[nodiscard]] int degree_x() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
  }
  [[nodiscard]] int degree_z() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
  }

  /// Coefficient of x^ex as a polynomial in z.
  [[nodiscard]] IntPoly coeff_x(int ex) const {
    std::vector<Integer> c(static_cast<std::size_t>(std::max(0, degree_z() + 1)), Integer(0));
    for (const auto& [k, v] : t_) {
      if (k.first == ex) c[static_cast<std::size_t>(k.second)] = v;
    }
    return IntPoly(std::move(c));
  }

  [[nodiscard]] bool is_even_in_x() const {
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.first.first % 2 == 0; });
  }

  /// Value at z = z0 as a polynomial in x.
  [[nodiscard]] IntPoly eval_z(const Integer& z0) const {
    std::vector<Integer> c(static_cast<std::size_t>(std::max(0, degree_x() + 1)), Integer(0));
    for (const auto& [k, v] : t_) {
      Integer zp;
      mpz_pow_ui(zp.get_mpz_t(), z0.get_mpz_t(), static_cast<unsigned long>(k.second));
      c[static_cast<std::size_t>(k.first)] += v * zp;
    }
    return IntPoly(std::move(c));
  }

  /// Terms in graded lexicographic order: total degree descending, then
  /// x exponent descending (ties broken by z exponent).
  [[nodiscard]] std::vector<std::pair<Key, Integer>> ordered_terms() const {
    std::vector<std::pair<Key, Integer>> out(t_.begin(), t_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.first > b.first.first;
    });
    return out;
  }

  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : ordered_terms()) {
      std::string mono = detail::power_str("x", k.first);
      std::string zp = detail::power_str("z", k.second);
      if (!mono.empty() && !zp.empty()) mono += "*";
      mono += zp;
      detail::append_signed_term(os, v, mono, first);
      first = false;
    }
    return os.str();
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, v);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, -v);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& [k, v] : a.t_) v = -v;
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, va] : a.t_) {
      for (const auto& [kb, vb] : b.t_) out.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    }
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

 private:
  void add_term(const Key& k, const Integer& v) {
    if (v == 0) return;
    auto [it, inserted] = t_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::map<Key, Integer> t_;
};

// ---------------------------------------------------------------------------
// LaurentPoly: Laurent in s, polynomial in z, over Z.
// ---------------------------------------------------------------------------

class LaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (s exponent, z exponent)

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor): scalars embed naturally
    if (c != 0) t_[{0, 0}] = c;
  }

  static LaurentPoly monomial(const Integer& c, int es, int ez) {
    LaurentPoly p;
    if (c != 0) p.t_[{es, ez}] = c;
    return p;
  }
  static LaurentPoly s(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly z(int e = 1) { return monomial(1, 0, e); }

  [[nodiscard]] const std::map<Key, Integer>& terms() const noexcept { return t_; }
  [[nodiscard]] bool is_zero() const noexcept { return t_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return t_.size(); }

  /// Image under s -> 1/s.
  [[nodiscard]] LaurentPoly invert_s() const {
    LaurentPoly out;
    for (const auto& [k, v] : t_) out.t_[{-k.first, k.second}] = v;
    return out;
  }
  [[nodiscard]] bool is_symmetric_in_s() const { return invert_s() == *this; }

  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [k, v] = *it;
      std::string mono;
      if (k.first != 0) mono = k.first == 1 ? "s" : "s^" + std::to_string(k.first);
      std::string zp = detail::power_str("z", k.second);
      if (!mono.empty() && !zp.empty()) mono += "*";
      mono += zp;
      detail::append_signed_term(os, v, mono, first);
      first = false;
    }
    return os.str();
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, v);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, -v);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [k, v] : a.t_) v = -v;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ka, va] : a.t_) {
      for (const auto& [kb, vb] : b.t_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto [it, inserted] = out.t_.try_emplace(k, 0);
        mpz_addmul(it->second.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      }
    }
    std::erase_if(out.t_, [](const auto& kv) { return kv.second == 0; });
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

 private:
  void add_term(const Key& k, const Integer& v) {
    if (v == 0) return;
    auto [it, inserted] = t_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::map<Key, Integer> t_;
};

/// p_k(x) = s^k + s^-k as a polynomial in x = s + 1/s: p_0 = 2, p_1 = x,
/// p_k = x p_{k-1} - p_{k-2}.
inline IntPoly power_sum_basis(int k) {
  IntPoly prev{2}, cur{0, 1};
  if (k == 0) return prev;
  const IntPoly x{0, 1};
  for (int i = 1; i < k; ++i) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Rewrites an s <-> 1/s symmetric Laurent polynomial in x = s + 1/s.
inline BiPoly laurent_to_x(const LaurentPoly& f) {
  // Group by s-exponent: f = sum_k C_k(z) s^k.
  std::map<int, std::map<int, Integer>> by_s;
  for (const auto& [k, v] : f.terms()) by_s[k.first][k.second] = v;
  auto as_z_poly = [](const std::map<int, Integer>& m) {
    std::vector<Integer> c(static_cast<std::size_t>(m.empty() ? 0 : m.rbegin()->first + 1), Integer(0));
    for (const auto& [e, v] : m) c[static_cast<std::size_t>(e)] = v;
    return IntPoly(std::move(c));
  };
  BiPoly out;
  for (const auto& [e, coeffs] : by_s) {
    if (e < 0) {
      if (!by_s.contains(-e) || by_s.at(-e) != coeffs) {
        throw Error(ErrorKind::NotSymmetric, "Laurent polynomial is not invariant under s -> 1/s");
      }
      continue;
    }
    if (e > 0 && (!by_s.contains(-e) || by_s.at(-e) != coeffs)) {
      throw Error(ErrorKind::NotSymmetric, "Laurent polynomial is not invariant under s -> 1/s");
    }
    IntPoly cz = as_z_poly(coeffs);
    IntPoly px = e == 0 ? IntPoly{1} : power_sum_basis(e);
    out += BiPoly::from_x_poly(px) * BiPoly::from_z_poly(cz, 0);
  }
  return out;
}

/// Substitutes x = s + 1/s.
inline LaurentPoly x_to_laurent(const BiPoly& f) {
  LaurentPoly out;
  const LaurentPoly x = LaurentPoly::s(1) + LaurentPoly::s(-1);
  std::map<int, LaurentPoly> xpow{{0, LaurentPoly(1)}};
  for (const auto& [k, v] : f.terms()) {
    if (!xpow.contains(k.first)) {
      int top = xpow.rbegin()->first;
      LaurentPoly cur = xpow.rbegin()->second;
      for (int e = top + 1; e <= k.first; ++e) {
        cur = cur * x;
        xpow[e] = cur;
      }
    }
    out += xpow.at(k.first) * LaurentPoly::monomial(v, 0, k.second);
  }
  return out;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_POLYRING_HPP
