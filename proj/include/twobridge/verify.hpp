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

#ifndef TWOBRIDGE_VERIFY_HPP
#define TWOBRIDGE_VERIFY_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twobridge/alexander.hpp"
#include "twobridge/charvar.hpp"
#include "twobridge/chebyshev.hpp"
#include "twobridge/classify.hpp"

namespace twobridge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

inline SuiteReport verify_identities() {
  SuiteReport rep{"identities", {}};

  int bad = 0;
  for (int k = -500; k <= 500; ++k) bad += verify_pell(k) ? 0 : 1;
  rep.checks.push_back({"pell identity, |k| <= 500", bad == 0, std::to_string(bad) + " failures"});

  bad = 0;
  const auto seq = cheb_sequence(300);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    bad += ((seq[n].eval(Integer(1)) == 0) == (n % 3 == 2)) ? 0 : 1;
  }
  rep.checks.push_back({"z-1 | S_n iff n = 2 mod 3, n <= 300", bad == 0, std::to_string(bad) + " failures"});

  bad = 0;
  for (int n = 0; n <= 10; ++n) bad += lemma2_obligations(n).all_pass() ? 0 : 1;
  rep.checks.push_back({"discriminant obligations, n <= 10", bad == 0, std::to_string(bad) + " failures"});

  bad = 0;
  std::size_t count = 0;
  for (const auto& k : enumerate_knots(199)) {
    ++count;
    try {
      (void)determinant(k);
    } catch (const std::logic_error&) {
      ++bad;
    }
  }
  rep.checks.push_back({"|Delta(-1)| = p, p <= 199", bad == 0,
                        std::to_string(count) + " knots, " + std::to_string(bad) + " failures"});

  bad = 0;
  for (std::int64_t p = 3; p <= 99; p += 2) {
    std::vector<Integer> c(static_cast<std::size_t>(p), Integer(1));
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -1;
    bad += alexander_poly(canonical_form(p, 1)).poly() == IntPoly(c) ? 0 : 1;
  }
  rep.checks.push_back({"torus Alexander polynomials, p <= 99", bad == 0, std::to_string(bad) + " failures"});
  return rep;
}

inline SuiteReport verify_riley() {
  SuiteReport rep{"riley", {}};

  int bad = 0;
  for (int n = 0; n <= 6; ++n) bad += family_cross_check(n) ? 0 : 1;
  rep.checks.push_back({"family R matches closed form, n <= 6", bad == 0, std::to_string(bad) + " failures"});

  bad = 0;
  for (int n = 0; n <= 12; ++n) {
    bad += reducibility_check(n, FamilySign::Plus) == (n % 3 == 2) ? 0 : 1;
    bad += reducibility_check(n, FamilySign::Minus) == (n % 3 == 0) ? 0 : 1;
  }
  rep.checks.push_back({"z-1 divisibility pattern, n <= 12", bad == 0, std::to_string(bad) + " failures"});

  bad = 0;
  for (const auto& k : enumerate_knots(21)) {
    const BiPoly r = generic_riley(k);
    bad += (r.degree_z() == (k.p() - 1) / 2 && r.is_even_in_x()) ? 0 : 1;
  }
  rep.checks.push_back({"generic R has z-degree (p-1)/2, p <= 21", bad == 0, std::to_string(bad) + " failures"});
  return rep;
}

inline SuiteReport verify_table(const OrsBounds& bounds = {}) {
  SuiteReport rep{"table", {}};
  const auto table = build_table(100, bounds);

  std::set<TwoBridgeKnot> expected, found;
  for (const auto& [p, q] : kNonMinimalUpTo100) expected.insert(canonical_form(p, q));
  int unsound = 0, undecided = 0, undecided_bad = 0;
  for (const auto& r : table) {
    if (r.status == Status::NonMinimal) {
      found.insert(r.knot);
      if (!r.witness && !r.has(Reason::TorusComposite)) ++unsound;
    }
    if (r.status == Status::Undecided) {
      ++undecided;
      if (theorem_oracle(r.knot) != OracleVerdict::Minimal) ++undecided_bad;
    }
  }
  std::string missing, extra;
  for (const auto& k : expected) {
    if (!found.contains(k)) missing += " " + k.str();
  }
  for (const auto& k : found) {
    if (!expected.contains(k)) extra += " " + k.str();
  }
  rep.checks.push_back({"non-minimal set for p <= 100 matches the 47 reference pairs",
                        missing.empty() && extra.empty(),
                        std::to_string(found.size()) + "/" + std::to_string(expected.size()) +
                            (missing.empty() ? "" : "; missing:" + missing) + (extra.empty() ? "" : "; extra:" + extra)});
  rep.checks.push_back({"every non-minimal verdict carries evidence", unsound == 0,
                        std::to_string(unsound) + " without witness"});
  rep.checks.push_back({"undecided knots are reference-minimal", undecided_bad == 0,
                        std::to_string(undecided) + " undecided"});
  return rep;
}

inline std::vector<SuiteReport> run_verify(const std::string& suite, const OrsBounds& bounds = {}) {
  std::vector<SuiteReport> out;
  if (suite == "identities" || suite == "all") out.push_back(verify_identities());
  if (suite == "riley" || suite == "all") out.push_back(verify_riley());
  if (suite == "table" || suite == "all") out.push_back(verify_table(bounds));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace twobridge

#endif  // TWOBRIDGE_VERIFY_HPP
