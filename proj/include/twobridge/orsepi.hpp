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

#ifndef TWOBRIDGE_ORSEPI_HPP
#define TWOBRIDGE_ORSEPI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twobridge/alexander.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"
#include "twobridge/knotnum.hpp"

namespace twobridge {

// Ohtsuki-Riley-Sakuma words. For a target expansion a = (a_1..a_n) with
// reversal a~, a word with m segments expands to
//
//   e_1 a, 2c_1, e_2 a~, 2c_2, e_3 a, ...
//
// and the two-bridge knot of its value maps onto the target whenever the
// value is defined.

struct OrsBounds {
  int max_segments = 9;
  std::int64_t max_connector = 4;
};

struct OrsWord {
  CfEntries target_cf;
  std::vector<int> signs;
  std::vector<std::int64_t> connectors;

  [[nodiscard]] int segments() const noexcept { return static_cast<int>(signs.size()); }

  void validate() const {
    if (target_cf.empty()) throw Error(ErrorKind::InvalidArgument, "ORS word needs a nonempty target expansion");
    if (signs.size() < 2) throw Error(ErrorKind::InvalidArgument, "ORS word needs at least two segments");
    if (connectors.size() + 1 != signs.size()) {
      throw Error(ErrorKind::InvalidArgument, "ORS word needs exactly one connector between consecutive segments");
    }
    for (int e : signs) {
      if (e != 1 && e != -1) throw Error(ErrorKind::InvalidArgument, "ORS signs must be +1 or -1");
    }
  }

  friend bool operator==(const OrsWord&, const OrsWord&) = default;
};

inline CfEntries ors_expand(const OrsWord& w) {
  w.validate();
  CfEntries out;
  for (std::size_t j = 0; j < w.signs.size(); ++j) {
    if (j > 0) out.push_back(2 * w.connectors[j - 1]);
    const std::int64_t e = w.signs[j];
    if (j % 2 == 0) {
      for (std::int64_t a : w.target_cf) out.push_back(e * a);
    } else {
      for (auto it = w.target_cf.rbegin(); it != w.target_cf.rend(); ++it) out.push_back(e * *it);
    }
  }
  return out;
}

inline Fraction ors_evaluate(const OrsWord& w) { return eval_cf(ors_expand(w)); }

struct EpimorphismWitness {
  TwoBridgeKnot source;
  TwoBridgeKnot target;
  OrsWord word;
  Fraction value;

  [[nodiscard]] CfEntries expansion() const { return ors_expand(word); }
};

/// Memoized Alexander polynomials and crossing numbers. Not thread-safe.
class InvariantCache {
 public:
  const AlexPoly& alexander(const TwoBridgeKnot& k) {
    auto it = alex_.find(k);
    if (it == alex_.end()) it = alex_.emplace(k, alexander_poly(k)).first;
    return it->second;
  }
  std::int64_t crossing(const TwoBridgeKnot& k) {
    auto it = crossing_.find(k);
    if (it == crossing_.end()) it = crossing_.emplace(k, crossing_number(k)).first;
    return it->second;
  }

 private:
  std::map<TwoBridgeKnot, AlexPoly> alex_;
  std::map<TwoBridgeKnot, std::int64_t> crossing_;
};

/// Knots b(p', q') with p' a proper divisor of p, p' >= 3, whose Alexander
/// polynomial divides the source's and whose crossing number is at most a
/// third of the source's. Ordered by (p', q').
inline std::vector<TwoBridgeKnot> candidate_targets(const TwoBridgeKnot& source, InvariantCache& cache) {
  if (source.is_trivial()) throw Error(ErrorKind::InvalidArgument, "candidate targets need a nontrivial source");
  std::vector<TwoBridgeKnot> out;
  const std::int64_t c_src = cache.crossing(source);
  for (std::int64_t d = 3; d < source.p(); d += 2) {
    if (source.p() % d != 0) continue;
    for (const TwoBridgeKnot& t : enumerate_knots(d)) {
      if (t.p() != d) continue;
      if (c_src < 3 * cache.crossing(t)) continue;
      if (!divides_alexander(cache.alexander(source), cache.alexander(t))) continue;
      out.push_back(t);
    }
  }
  return out;
}

inline std::vector<TwoBridgeKnot> candidate_targets(const TwoBridgeKnot& source) {
  InvariantCache cache;
  return candidate_targets(source, cache);
}

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t x = 0, y = 0, r = 0;
  if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) || __builtin_add_overflow(x, y, &r)) {
    throw Overflow{};
  }
  return r;
}

inline Integer checked_mul_add(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return a * b + c * d;
}

template <class T>
struct CfMat {
  T a, b, c, d;

  static CfMat identity() { return {T(1), T(0), T(0), T(1)}; }
  static CfMat entry(std::int64_t v) { return {T(0), T(1), T(1), T(v)}; }

  friend CfMat operator*(const CfMat& x, const CfMat& y) {
    return {checked_mul_add(x.a, y.a, x.b, y.c), checked_mul_add(x.a, y.b, x.b, y.d),
            checked_mul_add(x.c, y.a, x.d, y.c), checked_mul_add(x.c, y.b, x.d, y.d)};
  }
};

inline std::int64_t mod_of(std::int64_t v, std::int64_t p) { return floor_mod(v, p); }
inline std::int64_t mod_of(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}
inline bool abs_exceeds(std::int64_t v, std::int64_t bound) { return v > bound || v < -bound; }
inline bool abs_exceeds(const Integer& v, std::int64_t bound) { return abs(v) > bound; }
inline bool abs_equals(std::int64_t v, std::int64_t bound) { return v == bound || v == -bound; }
inline bool abs_equals(const Integer& v, std::int64_t bound) { return abs(v) == bound; }

// Sign vector compared before connector vector; + precedes -.
struct WitnessKey {
  std::vector<int> signs;
  std::vector<std::int64_t> connectors;

  friend bool operator<(const WitnessKey& x, const WitnessKey& y) {
    for (std::size_t i = 0; i < x.signs.size(); ++i) {
      if (x.signs[i] != y.signs[i]) return x.signs[i] > y.signs[i];
    }
    return x.connectors < y.connectors;
  }
};

// Exhaustive search over words with exactly m segments built on one target
// expansion. Prefixes whose denominator already exceeds the source's are cut:
// appending whole segments never shrinks it.
template <class T>
class SegmentSearch {
 public:
  SegmentSearch(const CfEntries& rep, std::int64_t p_src, const std::set<std::int64_t>& orbit, int m,
                std::int64_t max_connector)
      : p_src_(p_src), orbit_(orbit), m_(m), max_c_(max_connector) {
    CfEntries rev(rep.rbegin(), rep.rend());
    for (int e : {1, -1}) {
      CfMat<T> fwd = CfMat<T>::identity(), bwd = CfMat<T>::identity();
      for (std::int64_t v : rep) fwd = fwd * CfMat<T>::entry(e * v);
      for (std::int64_t v : rev) bwd = bwd * CfMat<T>::entry(e * v);
      seg_[0][e == 1 ? 0 : 1] = fwd;
      seg_[1][e == 1 ? 0 : 1] = bwd;
    }
    signs_.assign(static_cast<std::size_t>(m), 1);
    connectors_.assign(static_cast<std::size_t>(m - 1), 0);
  }

  std::optional<WitnessKey> run() {
    dfs(1, seg_[0][0]);
    return best_;
  }

 private:
  void dfs(int placed, const CfMat<T>& prefix) {
    if (placed == m_) {
      if (abs_equals(prefix.d, p_src_) && orbit_.contains(mod_of(prefix.b, p_src_))) {
        WitnessKey key{signs_, connectors_};
        if (!best_ || key < *best_) best_ = key;
      }
      return;
    }
    const int prev_sign = signs_[static_cast<std::size_t>(placed - 1)];
    for (std::int64_t c = -max_c_; c <= max_c_; ++c) {
      const CfMat<T> joined = prefix * CfMat<T>::entry(2 * c);
      for (int e : {1, -1}) {
        if (c == 0 && e == -prev_sign) continue;  // collapses to a shorter word
        CfMat<T> next = joined * seg_[placed % 2][e == 1 ? 0 : 1];
        if (abs_exceeds(next.d, p_src_)) continue;
        signs_[static_cast<std::size_t>(placed)] = e;
        connectors_[static_cast<std::size_t>(placed - 1)] = c;
        dfs(placed + 1, next);
      }
    }
  }

  std::int64_t p_src_;
  const std::set<std::int64_t>& orbit_;
  int m_;
  std::int64_t max_c_;
  CfMat<T> seg_[2][2];
  std::vector<int> signs_;
  std::vector<std::int64_t> connectors_;
  std::optional<WitnessKey> best_;
};

inline std::optional<WitnessKey> search_segments(const CfEntries& rep, std::int64_t p_src,
                                                 const std::set<std::int64_t>& orbit, int m,
                                                 std::int64_t max_connector) {
  try {
    return SegmentSearch<std::int64_t>(rep, p_src, orbit, m, max_connector).run();
  } catch (const Overflow&) {
    return SegmentSearch<Integer>(rep, p_src, orbit, m, max_connector).run();
  }
}

}  // namespace detail

/// Positive expansions of the target's orbit fractions, in orbit order,
/// without repeats.
inline std::vector<CfEntries> target_expansions(const TwoBridgeKnot& target) {
  std::vector<CfEntries> out;
  for (std::int64_t q : target.orbit()) {
    CfEntries cf = positive_cf(q, target.p());
    if (std::find(out.begin(), out.end(), cf) == out.end()) out.push_back(std::move(cf));
  }
  return out;
}

/// Least ORS witness under the order (segments, expansion index, signs,
/// connectors), with the first sign fixed to +1 (the other half is the
/// mirror image).
inline std::optional<EpimorphismWitness> search_witness(const TwoBridgeKnot& source, const TwoBridgeKnot& target,
                                                        const OrsBounds& bounds = {}) {
  if (source.is_trivial() || target.is_trivial()) {
    throw Error(ErrorKind::InvalidArgument, "witness search needs nontrivial source and target");
  }
  if (bounds.max_segments < 2 || bounds.max_connector < 0) {
    throw Error(ErrorKind::InvalidArgument, "search bounds need max_segments >= 2 and max_connector >= 0");
  }
  const auto orbit_vec = source.orbit();
  const std::set<std::int64_t> orbit(orbit_vec.begin(), orbit_vec.end());
  const auto reps = target_expansions(target);
  for (int m = 2; m <= bounds.max_segments; ++m) {
    for (const CfEntries& rep : reps) {
      auto key = detail::search_segments(rep, source.p(), orbit, m, bounds.max_connector);
      if (!key) continue;
      OrsWord word{rep, key->signs, key->connectors};
      return EpimorphismWitness{source, target, word, ors_evaluate(word)};
    }
  }
  return std::nullopt;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_ORSEPI_HPP
