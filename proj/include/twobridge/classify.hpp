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

#ifndef TWOBRIDGE_CLASSIFY_HPP
#define TWOBRIDGE_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "twobridge/alexander.hpp"
#include "twobridge/knotnum.hpp"
#include "twobridge/orsepi.hpp"

namespace twobridge {

enum class Status { Minimal, NonMinimal, Undecided };

enum class Reason {
  TrivialKnot,
  TorusPrime,
  TorusComposite,
  OrsWitness,
  NoCandidates,
  TwistKnot,
  DoubleTwistRule,
  AlexDegree2,
  AlexIrreducible,
  FamilyQ5Rule,
  SearchExhausted,
};

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Minimal: return "Minimal";
    case Status::NonMinimal: return "NonMinimal";
    case Status::Undecided: return "Undecided";
  }
  return "?";
}

constexpr std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::TrivialKnot: return "TrivialKnot";
    case Reason::TorusPrime: return "TorusPrime";
    case Reason::TorusComposite: return "TorusComposite";
    case Reason::OrsWitness: return "OrsWitness";
    case Reason::NoCandidates: return "NoCandidates";
    case Reason::TwistKnot: return "TwistKnot";
    case Reason::DoubleTwistRule: return "DoubleTwistRule";
    case Reason::AlexDegree2: return "AlexDegree2";
    case Reason::AlexIrreducible: return "AlexIrreducible";
    case Reason::FamilyQ5Rule: return "FamilyQ5Rule";
    case Reason::SearchExhausted: return "SearchExhausted";
  }
  return "?";
}

struct ClassificationReport {
  TwoBridgeKnot knot;
  Status status = Status::Undecided;
  std::vector<Reason> reasons;
  std::optional<EpimorphismWitness> witness;
  std::vector<TwoBridgeKnot> candidates_remaining;

  [[nodiscard]] bool has(Reason r) const { return std::find(reasons.begin(), reasons.end(), r) != reasons.end(); }
};

namespace detail {

inline bool orbit_contains(const TwoBridgeKnot& k, std::int64_t q) {
  const auto orbit = k.orbit();
  return std::find(orbit.begin(), orbit.end(), q) != orbit.end();
}

// p = 5k +- 3 with k not divisible by 6, for a knot whose orbit contains 5.
inline bool family_q5_applies(const TwoBridgeKnot& k) {
  if (!orbit_contains(k, 5)) return false;
  for (std::int64_t shift : {3, -3}) {
    const std::int64_t rest = k.p() - shift;
    if (rest > 0 && rest % 5 == 0 && (rest / 5) % 6 != 0) return true;
  }
  return false;
}

inline bool double_twist_applies(const TwoBridgeKnot& k) {
  for (std::int64_t q : k.orbit()) {
    if (q < 2) continue;
    const std::int64_t r = k.p() % q;
    if (r == 1 || r == q - 1) return true;
  }
  return false;
}

}  // namespace detail

/// Evidence-based verdict: torus rule, then ORS witnesses onto each candidate
/// quotient, then the sufficient conditions for minimality.
inline ClassificationReport classify(const TwoBridgeKnot& k, const OrsBounds& bounds, InvariantCache& cache) {
  ClassificationReport rep;
  rep.knot = k;
  if (k.is_trivial()) {
    rep.status = Status::Minimal;
    rep.reasons.push_back(Reason::TrivialKnot);
    return rep;
  }

  const auto candidates = candidate_targets(k, cache);
  auto first_witness = [&]() -> std::optional<EpimorphismWitness> {
    for (const TwoBridgeKnot& t : candidates) {
      if (auto w = search_witness(k, t, bounds)) return w;
    }
    return std::nullopt;
  };

  if (k.q() == 1) {
    if (is_prime(static_cast<std::uint64_t>(k.p()))) {
      rep.status = Status::Minimal;
      rep.reasons.push_back(Reason::TorusPrime);
      return rep;
    }
    rep.status = Status::NonMinimal;
    rep.reasons.push_back(Reason::TorusComposite);
    if ((rep.witness = first_witness())) rep.reasons.push_back(Reason::OrsWitness);
    return rep;
  }

  if ((rep.witness = first_witness())) {
    rep.status = Status::NonMinimal;
    rep.reasons.push_back(Reason::OrsWitness);
    return rep;
  }

  if (candidates.empty()) rep.reasons.push_back(Reason::NoCandidates);
  if (detail::orbit_contains(k, 2)) rep.reasons.push_back(Reason::TwistKnot);
  if (detail::double_twist_applies(k)) rep.reasons.push_back(Reason::DoubleTwistRule);
  if (cache.alexander(k).degree() == 2) rep.reasons.push_back(Reason::AlexDegree2);
  // Factoring is the expensive rule; only consult it when nothing cheaper fired.
  const bool q5 = detail::family_q5_applies(k);
  if (rep.reasons.empty() && !q5 && alexander_irreducible(cache.alexander(k))) {
    rep.reasons.push_back(Reason::AlexIrreducible);
  }
  if (q5) rep.reasons.push_back(Reason::FamilyQ5Rule);

  if (!rep.reasons.empty()) {
    rep.status = Status::Minimal;
    return rep;
  }
  rep.status = Status::Undecided;
  rep.reasons.push_back(Reason::SearchExhausted);
  rep.candidates_remaining = candidates;
  return rep;
}

inline ClassificationReport classify(const TwoBridgeKnot& k, const OrsBounds& bounds = {}) {
  InvariantCache cache;
  return classify(k, bounds, cache);
}

inline constexpr std::int64_t kTableMaxP = 199;

inline std::vector<ClassificationReport> build_table(std::int64_t max_p, const OrsBounds& bounds = {}) {
  if (max_p > kTableMaxP) {
    throw Error(ErrorKind::InvalidArgument, "table size is limited to p <= " + std::to_string(kTableMaxP));
  }
  InvariantCache cache;
  std::vector<ClassificationReport> out;
  for (const TwoBridgeKnot& k : enumerate_knots(max_p)) out.push_back(classify(k, bounds, cache));
  return out;
}

// ---------------------------------------------------------------------------
// Reference classification for p <= 100 and the q <= 6 band.
// ---------------------------------------------------------------------------

inline constexpr std::array<std::pair<int, int>, 47> kNonMinimalUpTo100{{
    {9, 1},   {15, 1},  {21, 1},  {27, 1},  {27, 5},  {33, 1},  {33, 5},  {35, 1},  {39, 1},  {39, 7},
    {45, 1},  {45, 7},  {45, 19}, {49, 1},  {51, 1},  {55, 1},  {57, 1},  {57, 5},  {63, 1},  {63, 5},
    {63, 11}, {65, 1},  {69, 1},  {69, 11}, {69, 19}, {75, 1},  {75, 13}, {75, 29}, {77, 1},  {81, 1},
    {81, 7},  {81, 13}, {85, 1},  {85, 9},  {85, 38}, {87, 1},  {87, 5},  {87, 7},  {91, 1},  {93, 1},
    {93, 5},  {93, 11}, {95, 1},  {95, 9},  {99, 1},  {99, 17}, {99, 29},
}};

enum class OracleVerdict { Minimal, NonMinimal, OutOfScope };

constexpr std::string_view to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Minimal: return "Minimal";
    case OracleVerdict::NonMinimal: return "NonMinimal";
    case OracleVerdict::OutOfScope: return "OutOfTheoremScope";
  }
  return "?";
}

/// Verdict from the closed-form rule for orbits containing some q <= 6, or
/// from the table for p <= 100.
inline OracleVerdict theorem_oracle(const TwoBridgeKnot& k) {
  if (k.is_trivial()) return OracleVerdict::Minimal;
  const auto orbit = k.orbit();
  if (!orbit.empty() && orbit.front() <= 6) {
    const bool torus_composite = orbit.front() == 1 && !is_prime(static_cast<std::uint64_t>(k.p()));
    const std::int64_t r = k.p() % 30;
    const bool five = detail::orbit_contains(k, 5) && (r == 3 || r == 27);
    return (torus_composite || five) ? OracleVerdict::NonMinimal : OracleVerdict::Minimal;
  }
  if (k.p() <= 100) {
    for (const auto& [p, q] : kNonMinimalUpTo100) {
      if (canonical_form(p, q) == k) return OracleVerdict::NonMinimal;
    }
    return OracleVerdict::Minimal;
  }
  return OracleVerdict::OutOfScope;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_CLASSIFY_HPP
