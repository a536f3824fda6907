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

#ifndef TWOBRIDGE_CHARVAR_HPP
#define TWOBRIDGE_CHARVAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/chebyshev.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"
#include "twobridge/knotnum.hpp"
#include "twobridge/polyring.hpp"

namespace twobridge {

// Nonabelian SL2 representations of two-generator knot groups in the
// normal form
//
//   a -> [[s, 1], [0, 1/s]],   b -> [[s, 0], [z - s^2 - s^-2, 1/s]],
//
// so that tr(a) = tr(b) = x = s + 1/s and tr(ab) = z. Matrix entries are
// Laurent polynomials in s with polynomial dependence on z.

using Sl2Sym = Mat2<LaurentPoly>;

enum class Letter : std::uint8_t { a, a_inv, b, b_inv };

inline Letter inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::a_inv;
    case Letter::a_inv: return Letter::a;
    case Letter::b: return Letter::b_inv;
    case Letter::b_inv: return Letter::b;
  }
  return l;
}

inline char letter_char(Letter l) {
  switch (l) {
    case Letter::a: return 'a';
    case Letter::a_inv: return 'A';
    case Letter::b: return 'b';
    case Letter::b_inv: return 'B';
  }
  return '?';
}

/// Word in the free group on a, b. Text form uses A = a^-1, B = b^-1.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static GroupWord parse(std::string_view text) {
    std::vector<Letter> out;
    for (char c : text) {
      switch (c) {
        case 'a': out.push_back(Letter::a); break;
        case 'A': out.push_back(Letter::a_inv); break;
        case 'b': out.push_back(Letter::b); break;
        case 'B': out.push_back(Letter::b_inv); break;
        case ' ': case '\t': break;
        default: throw Error(ErrorKind::ParseError, std::string("unknown letter '") + c + "' in group word");
      }
    }
    return GroupWord(std::move(out));
  }

  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  [[nodiscard]] GroupWord inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l = twobridge::inverse(l);
    return GroupWord(std::move(out));
  }

  /// Word with adjacent inverse pairs cancelled.
  [[nodiscard]] GroupWord reduced() const {
    std::vector<Letter> out;
    for (Letter l : letters_) {
      if (!out.empty() && out.back() == twobridge::inverse(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return GroupWord(std::move(out));
  }

  [[nodiscard]] GroupWord power(std::int64_t n) const {
    const GroupWord base = n < 0 ? inverse() : *this;
    GroupWord out;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
    return out;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (Letter l : letters_) s.push_back(letter_char(l));
    return s;
  }

  friend GroupWord operator*(GroupWord x, const GroupWord& y) {
    x.letters_.insert(x.letters_.end(), y.letters_.begin(), y.letters_.end());
    return x;
  }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline constexpr std::size_t kWordLengthCap = 4096;

namespace detail {

// The z slot may be the variable itself or a specialized integer value.
inline Sl2Sym riley_a() { return {LaurentPoly::s(1), LaurentPoly(1), LaurentPoly(0), LaurentPoly::s(-1)}; }

inline Sl2Sym riley_b(const LaurentPoly& zval) {
  return {LaurentPoly::s(1), LaurentPoly(0), zval - LaurentPoly::s(2) - LaurentPoly::s(-2), LaurentPoly::s(-1)};
}

struct LetterImages {
  Sl2Sym a, a_inv, b, b_inv;

  explicit LetterImages(const LaurentPoly& zval)
      : a(riley_a()), a_inv(a.sl2_inverse()), b(riley_b(zval)), b_inv(b.sl2_inverse()) {}

  [[nodiscard]] const Sl2Sym& operator[](Letter l) const {
    switch (l) {
      case Letter::a: return a;
      case Letter::a_inv: return a_inv;
      case Letter::b: return b;
      case Letter::b_inv: return b_inv;
    }
    return a;
  }
};

inline Sl2Sym word_image(const GroupWord& w, const LetterImages& img) {
  if (w.size() > kWordLengthCap) {
    throw Error(ErrorKind::WordTooLong,
                "word length " + std::to_string(w.size()) + " exceeds cap " + std::to_string(kWordLengthCap));
  }
  Sl2Sym acc = Sl2Sym::identity();
  for (Letter l : w.letters()) acc = acc * img[l];
  return acc;
}

}  // namespace detail

/// (rho(a), rho(b)).
inline std::pair<Sl2Sym, Sl2Sym> rep_generators() {
  return {detail::riley_a(), detail::riley_b(LaurentPoly::z())};
}

inline Sl2Sym rep_word(const GroupWord& w) { return detail::word_image(w, detail::LetterImages(LaurentPoly::z())); }

/// a (ba)^n B (ba)^-n a (ba)^n b (ba)^-n A (ba)^n b, the relator word of
/// b(10n+7, 5).
inline GroupWord family_word(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "family index must be >= 0");
  const GroupWord a = GroupWord::parse("a"), A = GroupWord::parse("A");
  const GroupWord b = GroupWord::parse("b"), B = GroupWord::parse("B");
  const GroupWord up = GroupWord::parse("ba").power(n);
  const GroupWord down = GroupWord::parse("ba").power(-n);
  return a * up * B * down * a * up * b * down * A * up * b;
}

/// rho(w a) - rho(b w).
inline Sl2Sym riley_defect(const GroupWord& w) {
  auto [ra, rb] = rep_generators();
  Sl2Sym rw = rep_word(w);
  return rw * ra - rb * rw;
}

/// The polynomial R(x, z) read off a defect matrix of the form
/// [[0, R], [-(z - s^2 - s^-2) R, 0]].
inline BiPoly extract_R(const Sl2Sym& defect) {
  if (!defect.a.is_zero() || !defect.d.is_zero()) {
    throw Error(ErrorKind::ShapeViolation, "defect matrix has a nonzero diagonal");
  }
  const LaurentPoly lower = LaurentPoly::z() - LaurentPoly::s(2) - LaurentPoly::s(-2);
  if (!(defect.c == -(lower * defect.b))) {
    throw Error(ErrorKind::ShapeViolation, "lower-left entry is not -(z - s^2 - s^-2) times the upper-right");
  }
  BiPoly r;
  try {
    r = laurent_to_x(defect.b);
  } catch (const Error&) {
    throw Error(ErrorKind::ShapeViolation, "upper-right entry is not symmetric in s");
  }
  if (!r.is_even_in_x()) throw Error(ErrorKind::ShapeViolation, "R is not even in x");
  return r;
}

// ---------------------------------------------------------------------------
// Generic relator words.
// ---------------------------------------------------------------------------

enum class WordStart { A, B };
enum class RelatorForm { WaEqualsBw, AwEqualsWb };

struct RileyConvention {
  WordStart start = WordStart::A;
  RelatorForm relator = RelatorForm::WaEqualsBw;
};

/// The convention under which the generic word agrees with the family words.
inline constexpr RileyConvention kRileyConvention{WordStart::A, RelatorForm::WaEqualsBw};

inline constexpr std::int64_t kGenericRileyCap = 127;

/// x^{e_1} y^{e_2} ... with e_i = (-1)^floor(i q/p), alternating x, y.
inline GroupWord generic_word(std::int64_t p, std::int64_t q_odd, WordStart start = kRileyConvention.start) {
  std::vector<Letter> out;
  for (std::int64_t i = 1; i < p; ++i) {
    const bool positive = ((i * q_odd / p) % 2) == 0;
    const bool first_gen = (i % 2 == 1) == (start == WordStart::A);
    if (first_gen) {
      out.push_back(positive ? Letter::a : Letter::a_inv);
    } else {
      out.push_back(positive ? Letter::b : Letter::b_inv);
    }
  }
  return GroupWord(std::move(out));
}

namespace detail {

inline void check_generic_input(std::int64_t p, std::int64_t q_odd) {
  (void)canonical_form(p, q_odd);
  if (p < 3) throw Error(ErrorKind::InvalidArgument, "generic Riley polynomial needs p >= 3");
  if (q_odd % 2 == 0) throw Error(ErrorKind::InvalidArgument, "q must be the odd representative");
  if (p > kGenericRileyCap) {
    throw Error(ErrorKind::InvalidArgument,
                "p = " + std::to_string(p) + " exceeds the symbolic cost cap of " + std::to_string(kGenericRileyCap));
  }
}

inline Sl2Sym generic_defect(std::int64_t p, std::int64_t q_odd, RileyConvention conv, const LaurentPoly& zval) {
  const LetterImages img(zval);
  const Sl2Sym rw = word_image(generic_word(p, q_odd, conv.start), img);
  if (conv.relator == RelatorForm::WaEqualsBw) return rw * img.a - img.b * rw;
  return img.a * rw - rw * img.b;
}

}  // namespace detail

inline BiPoly generic_riley(std::int64_t p, std::int64_t q_odd, RileyConvention conv = kRileyConvention) {
  detail::check_generic_input(p, q_odd);
  return extract_R(detail::generic_defect(p, q_odd, conv, LaurentPoly::z()));
}

inline BiPoly generic_riley(const TwoBridgeKnot& k) {
  if (k.is_trivial()) throw Error(ErrorKind::InvalidArgument, "the trivial knot has no nonabelian representations");
  return generic_riley(k.p(), k.odd_representative());
}

// ---------------------------------------------------------------------------
// The q = 5 families b(5(2n+1) + 2, 5) (Plus) and b(5(2n+1) - 2, 5) (Minus).
// ---------------------------------------------------------------------------

inline std::int64_t family_p(std::int64_t n, FamilySign variant) {
  return 5 * (2 * n + 1) + (variant == FamilySign::Plus ? 2 : -2);
}

struct FamilyCoeffs {
  IntPoly alpha, beta, gamma;
  std::int64_t n = 0;
  FamilySign variant = FamilySign::Plus;

  /// alpha x^4 + beta x^2 + gamma.
  [[nodiscard]] BiPoly polynomial() const {
    return BiPoly::from_z_poly(alpha, 4) + BiPoly::from_z_poly(beta, 2) + BiPoly::from_z_poly(gamma, 0);
  }
};

inline FamilyCoeffs family_coeffs(std::int64_t n, FamilySign variant) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "family index must be >= 0");
  FamilyCoeffs fc;
  fc.n = n;
  fc.variant = variant;
  if (variant == FamilySign::Minus) {
    BiPoly r = generic_riley(canonical_form(family_p(n, variant), 5));
    if (r.degree_x() > 4) throw Error(ErrorKind::ShapeViolation, "R has x-degree above 4");
    fc.alpha = r.coeff_x(4);
    fc.beta = r.coeff_x(2);
    fc.gamma = r.coeff_x(0);
    return fc;
  }
  const IntPoly z{0, 1};
  auto [X, Y] = cheb_pair(z, n);
  const IntPoly D = X - Y;
  const IntPoly zm2 = z - IntPoly{2};
  const IntPoly X2 = X * X, X3 = X2 * X, X4 = X3 * X, X5 = X4 * X;
  const IntPoly Y2 = Y * Y, Y3 = Y2 * Y, Y5 = Y3 * Y2;
  fc.alpha = zm2 * X2 * pow(D, 3);
  fc.beta = -(zm2 * X * D *
              (IntPoly{2} * X3 * z + X3 - X2 * Y * z - IntPoly{6} * X2 * Y + X * Y2 + IntPoly{2} * Y3));
  fc.gamma = pow(D, 5) + zm2 * (X5 * z * z + X5 * z - IntPoly{5} * X4 * Y * z - IntPoly{5} * X4 * Y +
                                IntPoly{10} * X3 * Y2 - Y5);
  return fc;
}

/// Symbolic R of the family word equals the closed-form coefficients up to sign.
inline bool family_cross_check(std::int64_t n) {
  if (n < 0 || n > 10) throw Error(ErrorKind::InvalidArgument, "family cross-check needs 0 <= n <= 10");
  const BiPoly symbolic = extract_R(riley_defect(family_word(n)));
  const BiPoly closed = family_coeffs(n, FamilySign::Plus).polynomial();
  return symbolic == closed || symbolic == -closed;
}

/// Whether z - 1 divides R for the family member.
inline bool reducibility_check(std::int64_t n, FamilySign variant) {
  if (n < 0 || n > 30) throw Error(ErrorKind::InvalidArgument, "reducibility check needs 0 <= n <= 30");
  if (variant == FamilySign::Plus) {
    const FamilyCoeffs fc = family_coeffs(n, variant);
    const Integer one(1);
    return fc.alpha.eval(one) == 0 && fc.beta.eval(one) == 0 && fc.gamma.eval(one) == 0;
  }
  // R(x, 1) vanishes iff the defect vanishes identically at z = 1.
  const TwoBridgeKnot k = canonical_form(family_p(n, variant), 5);
  const Sl2Sym defect = detail::generic_defect(k.p(), k.odd_representative(), kRileyConvention, LaurentPoly(1));
  return defect.b.is_zero();
}

struct Lemma2Report {
  std::int64_t n = 0;
  bool discriminant_identity = false;
  bool discriminant_not_square = false;
  bool gamma_at_two_is_one = false;
  bool rewrite_not_divisible = false;
  int z_minus_two_multiplicity = 0;

  [[nodiscard]] bool all_pass() const {
    return discriminant_identity && discriminant_not_square && gamma_at_two_is_one && rewrite_not_divisible &&
           z_minus_two_multiplicity % 2 == 1;
  }
};

inline Lemma2Report lemma2_obligations(std::int64_t n) {
  if (n < 0 || n > 10) throw Error(ErrorKind::InvalidArgument, "lemma checks need 0 <= n <= 10");
  Lemma2Report rep;
  rep.n = n;
  const FamilyCoeffs fc = family_coeffs(n, FamilySign::Plus);
  const IntPoly z{0, 1};
  auto [X, Y] = cheb_pair(z, n);
  const IntPoly D = X - Y;
  const IntPoly zm2 = z - IntPoly{2};
  const IntPoly disc = fc.beta * fc.beta - IntPoly{4} * fc.alpha * fc.gamma;
  const IntPoly quartic = X * X * z - IntPoly{6} * X * X + IntPoly{8} * X * Y - IntPoly{4} * Y * Y;
  const IntPoly norm = X * X - X * Y * z + Y * Y;
  rep.discriminant_identity = disc == zm2 * X * X * D * D * quartic * norm * norm;
  rep.discriminant_not_square = !is_perfect_square(disc).has_value();
  rep.gamma_at_two_is_one = fc.gamma.eval(Integer(2)) == 1;
  const IntPoly rewrite = zm2 * X * X - IntPoly{4} * D * D;
  rep.rewrite_not_divisible = rewrite == quartic && rewrite.eval(Integer(2)) != 0;
  rep.z_minus_two_multiplicity = disc.root_multiplicity(Integer(2));
  return rep;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_CHARVAR_HPP
