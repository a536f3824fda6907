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

#ifndef TWOBRIDGE_IO_HPP
#define TWOBRIDGE_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "twobridge/classify.hpp"
#include "twobridge/factor.hpp"
#include "twobridge/polyring.hpp"

namespace twobridge::io {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

/// {"var": "t", "terms": [[exponent, coefficient], ...]}, highest exponent first.
inline json poly_json(const IntPoly& f, const std::string& var = "t") {
  json terms = json::array();
  for (int e = f.degree(); e >= 0; --e) {
    if (f.coeff(e) != 0) terms.push_back({e, integer_json(f.coeff(e))});
  }
  return {{"var", var}, {"terms", terms}};
}

/// {"vars": ["x", "z"], "terms": [[i, j, coefficient], ...]}.
inline json bipoly_json(const BiPoly& f) {
  json terms = json::array();
  for (const auto& [k, v] : f.ordered_terms()) terms.push_back({k.first, k.second, integer_json(v)});
  return {{"vars", {"x", "z"}}, {"terms", terms}};
}

inline json knot_json(const TwoBridgeKnot& k) { return {{"p", k.p()}, {"q", k.q()}}; }

inline json factor_json(const FactorResult& f, const std::string& var = "t") {
  json factors = json::array();
  for (const auto& [g, m] : f.factors) {
    factors.push_back({{"factor", g.str(var)}, {"poly", poly_json(g, var)}, {"multiplicity", m}});
  }
  return {{"content", integer_json(f.content)}, {"factors", factors}};
}

inline json bounds_json(const OrsBounds& b) {
  return {{"max_segments", b.max_segments}, {"max_connector", b.max_connector}};
}

inline json witness_json(const EpimorphismWitness& w) {
  return {{"source", knot_json(w.source)},
          {"target", knot_json(w.target)},
          {"target_cf", w.word.target_cf},
          {"signs", w.word.signs},
          {"connectors", w.word.connectors},
          {"expansion", w.expansion()},
          {"value", w.value.str()}};
}

inline json report_json(const ClassificationReport& r) {
  json reasons = json::array();
  for (Reason x : r.reasons) reasons.push_back(std::string(to_string(x)));
  json remaining = json::array();
  for (const auto& k : r.candidates_remaining) remaining.push_back(knot_json(k));
  return {{"knot", knot_json(r.knot)},
          {"status", std::string(to_string(r.status))},
          {"reasons", reasons},
          {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
          {"candidates_remaining", remaining}};
}

inline std::string join_reasons(const ClassificationReport& r, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < r.reasons.size(); ++i) {
    if (i) out.push_back(sep);
    out += to_string(r.reasons[i]);
  }
  return out;
}

inline std::string csv_header() { return "p,q,status,reasons,witness_expansion,target_p,target_q"; }

inline std::string csv_row(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.knot.p() << ',' << r.knot.q() << ',' << to_string(r.status) << ',' << join_reasons(r) << ',';
  if (r.witness) {
    os << '"' << format_cf(r.witness->expansion()) << "\"," << r.witness->target.p() << ','
       << r.witness->target.q();
  } else {
    os << ",,";
  }
  return os.str();
}

inline std::string text_row(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.knot.str();
  for (std::size_t w = r.knot.str().size(); w < 12; ++w) os << ' ';
  os << to_string(r.status);
  for (std::size_t w = to_string(r.status).size(); w < 12; ++w) os << ' ';
  os << join_reasons(r, ',');
  if (r.witness) os << "  -> " << r.witness->target.str() << " via [" << format_cf(r.witness->expansion()) << ']';
  return os.str();
}

}  // namespace twobridge::io

#endif  // TWOBRIDGE_IO_HPP
