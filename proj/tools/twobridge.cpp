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

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twobridge/io.hpp"
#include "twobridge/twobridge.hpp"
#include "twobridge/verify.hpp"

namespace {

using namespace twobridge;
using io::json;

OrsBounds parse_bounds(const std::string& text) {
  const CfEntries v = parse_cf(text);
  if (v.size() != 2 || v[0] < 2 || v[1] < 0) {
    throw Error(ErrorKind::ParseError, "bounds must look like N,C with N >= 2 and C >= 0, got '" + text + "'");
  }
  return {static_cast<int>(v[0]), v[1]};
}

// Flag beats environment beats default.
OrsBounds resolve_bounds(const std::string& flag) {
  if (!flag.empty()) return parse_bounds(flag);
  if (const char* env = std::getenv("TWOBRIDGE_ORS_BOUNDS"); env && *env) return parse_bounds(env);
  return {};
}

FamilySign parse_variant(const std::string& v) {
  if (v == "plus" || v == "+2") return FamilySign::Plus;
  if (v == "minus" || v == "-2") return FamilySign::Minus;
  throw Error(ErrorKind::ParseError, "variant must be plus or minus, got '" + v + "'");
}

struct Envelope {
  std::string command;
  json inputs = json::object();
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  [[nodiscard]] json wrap(json result, const std::optional<OrsBounds>& bounds = std::nullopt) const {
    json out{{"command", command}, {"version", TWOBRIDGE_VERSION}, {"inputs", inputs}};
    if (bounds) out["bounds"] = io::bounds_json(*bounds);
    out["result"] = std::move(result);
    if (timing) {
      out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                              .count();
    }
    return out;
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json riley_report(const BiPoly& r) {
  IntPoly content;
  for (int e = 0; e <= r.degree_x(); ++e) {
    const IntPoly c = r.coeff_x(e);
    if (c.is_zero()) continue;
    content = content.is_zero() ? c.primitive_part() : gcd_poly(content, c);
  }
  return {{"R", io::bipoly_json(r)},
          {"text", r.str()},
          {"degree_x", r.degree_x()},
          {"degree_z", r.degree_z()},
          {"z_content", io::factor_json(factor_integers(content), "z")},
          {"z_minus_1_divides", r.eval_z(Integer(1)).is_zero()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-bridge knot minimality toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TWOBRIDGE_VERSION));
  Envelope env;
  app.add_flag("--timing", env.timing, "Include elapsed time in JSON output");

  std::int64_t p = 0, q = 0;
  bool as_json = false;
  std::string bounds_flag;

  auto* knot = app.add_subcommand("knot", "Canonical form and basic invariants");
  knot->add_option("p", p)->required();
  knot->add_option("q", q)->required();
  knot->add_flag("--json", as_json);

  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  std::string entries;
  auto* cf_eval = cf->add_subcommand("eval", "Evaluate a bracket expansion such as 6,2,-3");
  cf_eval->add_option("entries", entries)->required();
  auto* cf_expand = cf->add_subcommand("expand", "Positive expansion of q/p");
  cf_expand->add_option("p", p)->required();
  cf_expand->add_option("q", q)->required();
  std::int64_t family_k = 1;
  std::string variant = "plus";
  auto* cf_family = cf->add_subcommand("family", "Expansion of 5/(30k +- 3) onto the trefoil");
  cf_family->add_option("k", family_k)->required();
  cf_family->add_option("--variant", variant, "plus or minus");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("p", p)->required();
  alex->add_option("q", q)->required();
  std::optional<std::int64_t> eval_at;
  bool factor = false;
  alex->add_option("--eval", eval_at, "Evaluate at an integer");
  alex->add_flag("--factor", factor, "Factor over the integers");
  alex->add_flag("--json", as_json);

  auto* riley = app.add_subcommand("riley", "Nonabelian character variety polynomial R(x,z)");
  std::vector<std::int64_t> pq;
  std::optional<std::int64_t> family_n;
  riley->add_option("pq", pq, "p q")->expected(0, 2);
  riley->add_option("--family", family_n, "Family index n");
  riley->add_option("--variant", variant, "plus or minus");

  auto* ors = app.add_subcommand("ors-search", "Search for an ORS epimorphism witness");
  ors->add_option("p", p)->required();
  ors->add_option("q", q)->required();
  std::vector<std::int64_t> target;
  std::optional<int> max_segments;
  std::optional<std::int64_t> max_connector;
  ors->add_option("--target", target, "Target p' q'")->expected(2);
  ors->add_option("--max-segments", max_segments);
  ors->add_option("--max-connector", max_connector);
  ors->add_flag("--json", as_json);

  auto* cls = app.add_subcommand("classify", "Minimality classification with evidence");
  cls->add_option("p", p)->required();
  cls->add_option("q", q)->required();
  cls->add_option("--bounds", bounds_flag, "Search bounds N,C");
  cls->add_flag("--json", as_json);

  auto* table = app.add_subcommand("table", "Classify every knot up to a determinant bound");
  std::int64_t max_p = 100;
  std::string format = "text";
  table->add_option("--max-p", max_p)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--bounds", bounds_flag, "Search bounds N,C");

  auto* oracle = app.add_subcommand("oracle", "Reference verdict from the closed-form rules");
  oracle->add_option("p", p)->required();
  oracle->add_option("q", q)->required();

  auto* verify = app.add_subcommand("verify", "Run a built-in check suite");
  std::string suite = "all";
  verify->add_option("suite", suite)->check(CLI::IsMember({"identities", "riley", "table", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*knot) {
      env.command = "knot";
      env.inputs = {{"p", p}, {"q", q}};
      const TwoBridgeKnot k = canonical_form(p, q);
      if (as_json) {
        json r = io::knot_json(k);
        r["orbit"] = k.orbit();
        if (!k.is_trivial()) {
          r["crossing_number"] = crossing_number(k);
          r["determinant"] = determinant(k);
          r["alexander"] = alexander_poly(k).str();
        }
        print_json(env.wrap(r));
      } else {
        std::cout << k.str() << '\n';
        if (!k.is_trivial()) {
          std::cout << "orbit: " << format_cf(k.orbit()) << '\n'
                    << "crossing number: " << crossing_number(k) << '\n'
                    << "determinant: " << determinant(k) << '\n'
                    << "alexander: " << alexander_poly(k).str() << '\n';
        }
      }
    } else if (*cf) {
      if (*cf_eval) {
        std::cout << eval_cf(parse_cf(entries)).str() << '\n';
      } else if (*cf_expand) {
        std::cout << format_cf(positive_cf(q, p)) << '\n';
      } else {
        const CfEntries e = expand_paper_family(family_k, parse_variant(variant));
        std::cout << format_cf(e) << " = " << eval_cf(e).str() << '\n';
      }
    } else if (*alex) {
      env.command = "alexander";
      env.inputs = {{"p", p}, {"q", q}};
      const TwoBridgeKnot k = canonical_form(p, q);
      const AlexPoly a = alexander_poly(k);
      if (as_json) {
        json r{{"knot", io::knot_json(k)}, {"poly", io::poly_json(a.poly())}, {"text", a.str()}};
        if (eval_at) r["value"] = io::integer_json(a.poly().eval(Integer(static_cast<long>(*eval_at))));
        if (factor) r["factorization"] = io::factor_json(factor_integers(a.poly()));
        print_json(env.wrap(r));
      } else {
        std::cout << a.str() << '\n';
        if (eval_at) std::cout << a.poly().eval(Integer(static_cast<long>(*eval_at))).get_str() << '\n';
        if (factor) {
          const FactorResult f = factor_integers(a.poly());
          std::cout << f.content.get_str();
          for (const auto& [g, m] : f.factors) std::cout << " * (" << g.str() << ')' << (m > 1 ? "^" + std::to_string(m) : "");
          std::cout << '\n';
        }
      }
    } else if (*riley) {
      env.command = "riley";
      BiPoly r;
      if (family_n) {
        const FamilySign v = parse_variant(variant);
        env.inputs = {{"family", *family_n}, {"variant", v == FamilySign::Plus ? "plus" : "minus"}};
        r = v == FamilySign::Plus ? extract_R(riley_defect(family_word(*family_n)))
                                  : family_coeffs(*family_n, v).polynomial();
      } else {
        if (pq.size() != 2) throw CLI::ValidationError("riley", "expected p q or --family n");
        env.inputs = {{"p", pq[0]}, {"q", pq[1]}};
        r = generic_riley(canonical_form(pq[0], pq[1]));
      }
      print_json(env.wrap(riley_report(r)));
    } else if (*ors) {
      env.command = "ors-search";
      env.inputs = {{"p", p}, {"q", q}};
      OrsBounds b = resolve_bounds("");
      if (max_segments) b.max_segments = *max_segments;
      if (max_connector) b.max_connector = *max_connector;
      const TwoBridgeKnot k = canonical_form(p, q);
      std::vector<TwoBridgeKnot> targets;
      if (target.size() == 2) {
        env.inputs["target"] = {{"p", target[0]}, {"q", target[1]}};
        targets.push_back(canonical_form(target[0], target[1]));
      } else {
        targets = candidate_targets(k);
      }
      std::optional<EpimorphismWitness> w;
      for (const auto& t : targets) {
        if ((w = search_witness(k, t, b))) break;
      }
      if (as_json) {
        print_json(env.wrap(w ? io::witness_json(*w) : json(nullptr), b));
      } else if (w) {
        std::cout << w->source.str() << " -> " << w->target.str() << " via [" << format_cf(w->expansion())
                  << "] = " << w->value.str() << '\n';
      } else {
        std::cout << "no witness within bounds " << b.max_segments << ',' << b.max_connector << '\n';
      }
    } else if (*cls) {
      env.command = "classify";
      env.inputs = {{"p", p}, {"q", q}};
      const OrsBounds b = resolve_bounds(bounds_flag);
      const ClassificationReport r = classify(canonical_form(p, q), b);
      if (as_json) {
        print_json(env.wrap(io::report_json(r), b));
      } else {
        std::cout << io::text_row(r) << '\n';
      }
    } else if (*table) {
      env.command = "table";
      env.inputs = {{"max_p", max_p}};
      const OrsBounds b = resolve_bounds(bounds_flag);
      const auto rows = build_table(max_p, b);
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(io::report_json(r));
        print_json(env.wrap(arr, b));
      } else if (format == "csv") {
        std::cout << io::csv_header() << '\n';
        for (const auto& r : rows) std::cout << io::csv_row(r) << '\n';
      } else {
        for (const auto& r : rows) std::cout << io::text_row(r) << '\n';
      }
    } else if (*oracle) {
      std::cout << to_string(theorem_oracle(canonical_form(p, q))) << '\n';
    } else if (*verify) {
      bool ok = true;
      for (const auto& s : run_verify(suite, resolve_bounds(""))) {
        for (const auto& c : s.checks) {
          std::cout << (c.passed ? "PASS " : "FAIL ") << s.suite << ": " << c.name << " (" << c.detail << ")\n";
        }
        ok = ok && s.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
