// Copyright 2026 The rankgrowth Authors.
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

#ifndef RANKGROWTH_IO_DOCUMENT_HPP
#define RANKGROWTH_IO_DOCUMENT_HPP

// JSON rendering of results.  Rationals are always "p/q" strings.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rankgrowth/engine.hpp"
#include "rankgrowth/polynomial.hpp"
#include "rankgrowth/rational.hpp"
#include "rankgrowth/staircase.hpp"

namespace rankgrowth::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kToolName = "rankgrowth";
inline constexpr const char* kToolVersion = "1.0.0";

inline OrderedJson to_json(const MultiIndex& u) {
  OrderedJson out = OrderedJson::array();
  for (auto e : u) out.push_back(e);
  return out;
}

inline OrderedJson to_json(const Polynomial& p) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [e, c] : sorted_terms(p)) {
    terms.push_back(OrderedJson{{"exponent", to_json(e)}, {"coefficient", to_fraction_string(c)}});
  }
  OrderedJson vars = OrderedJson::array();
  for (std::size_t i = 0; i < p.variables(); ++i) vars.push_back(variable_name(i, p.variables()));
  return OrderedJson{{"text", to_string(p)}, {"variables", vars}, {"terms", terms}};
}

inline OrderedJson to_json(const GrowthPolynomial& g) {
  OrderedJson dominant = OrderedJson::array();
  for (const auto& [e, c] : dominant_terms(g.polynomial)) {
    dominant.push_back(OrderedJson{{"exponent", to_json(e)}, {"coefficient", to_fraction_string(c)}});
  }
  OrderedJson numerator = OrderedJson::array();
  for (const auto& [e, c] : g.numerator.coefficients) {
    numerator.push_back(OrderedJson{{"exponent", to_json(e)}, {"coefficient", to_fraction_string(Rational(c))}});
  }
  return OrderedJson{{"polynomial", to_json(g.polynomial)},
                     {"threshold", to_json(g.threshold)},
                     {"degree_bound", to_json(g.degree_bound)},
                     {"certification", to_string(g.status)},
                     {"dominant_terms", dominant},
                     {"numerator", numerator}};
}

inline OrderedJson to_json(const VerificationReport& v) {
  OrderedJson points = OrderedJson::array();
  for (const auto& p : v.points) {
    points.push_back(OrderedJson{{"degree", to_json(p.degree)},
                                 {"predicted", to_fraction_string(p.predicted)},
                                 {"direct", to_fraction_string(Rational(p.direct))}});
  }
  return OrderedJson{{"lo", to_json(v.lo)}, {"hi", to_json(v.hi)}, {"mismatches", v.mismatches.size()},
                     {"points", points}};
}

inline OrderedJson to_json(const GrowthResult& r) {
  OrderedJson out = to_json(r.growth);
  out["staircase"] = OrderedJson{{"box", to_json(r.table.box())},
                                 {"corner", to_json(r.staircase.corner)},
                                 {"status", to_string(r.staircase.status)},
                                 {"box_growths", r.box_growths}};
  out["verification"] = to_json(r.verification);
  return out;
}

inline OrderedJson to_json(const SystemReport& r) {
  OrderedJson parts = OrderedJson::array();
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    const auto& p = r.parts[i];
    OrderedJson part{{"part", i + 1}, {"triangular", p.triangular}, {"quasi_triangular", p.quasi_triangular}};
    if (p.triangular_witness) part["triangular_witness"] = describe(*p.triangular_witness, false);
    if (p.quasi_witness) part["quasi_witness"] = describe(*p.quasi_witness, true);
    parts.push_back(std::move(part));
  }
  OrderedJson out{{"commutes", r.commutes}};
  if (r.commutation_witness) out["commutation_witness"] = describe(*r.commutation_witness);
  out["parts"] = parts;
  out["pool_size"] = r.pool_size;
  out["tests_run"] = r.tests_run;
  return out;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char hex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xf]);
  return out;
}

/// Parses a `to_json(Polynomial)` document back.
inline Polynomial polynomial_from_json(const Json& j) {
  const auto& vars = j.at("variables");
  Polynomial p(vars.size());
  for (const auto& term : j.at("terms")) {
    std::vector<std::uint32_t> e;
    for (const auto& x : term.at("exponent")) e.push_back(x.get<std::uint32_t>());
    p.add_term(MultiIndex(std::move(e)), parse_rational(term.at("coefficient").get<std::string>()));
  }
  return p;
}

}  // namespace rankgrowth::io

#endif  // RANKGROWTH_IO_DOCUMENT_HPP
