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

#ifndef RANKGROWTH_IO_PROBLEM_HPP
#define RANKGROWTH_IO_PROBLEM_HPP

// Problem files: parsing, dispatch to a backend and mode, result documents.
//
// {"backend": tag, "backend_data": {...}, "operators": [...], "partition": [...],
//  "declared": [...], "A": [...], "B": [...], "mode": ..., "box": [...],
//  "window": w, "threads": n, "context": {...}, "betti": {...}, "star": bool}

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rankgrowth/backends/chain.hpp"
#include "rankgrowth/backends/circuit.hpp"
#include "rankgrowth/backends/graphic.hpp"
#include "rankgrowth/backends/ideal_count.hpp"
#include "rankgrowth/backends/linear.hpp"
#include "rankgrowth/backends/trivial.hpp"
#include "rankgrowth/engine.hpp"
#include "rankgrowth/errors.hpp"
#include "rankgrowth/io/document.hpp"

namespace rankgrowth::io {

enum ExitCode : int { kCertified = 0, kInputError = 1, kInconclusive = 2, kHypothesisFailure = 3 };

struct RunOptions {
  std::optional<std::vector<std::uint32_t>> box;
  std::optional<std::size_t> window;
  std::optional<std::string> mode;
  std::optional<std::size_t> threads;
  std::optional<std::uint64_t> seed_sample;
  bool timing = false;
};

struct RunOutcome {
  int exit_code = kInputError;
  OrderedJson document;
  std::string message;
};

inline const std::set<std::string>& known_modes() {
  static const std::set<std::string> modes{"dimension", "cumulative",  "context", "phi-rank",
                                           "betti",     "ideal-count", "sumset",  "check"};
  return modes;
}

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

template <class T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(what + ": unexpected value " + j.dump());
  }
}

inline std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

inline std::uint32_t as_natural(const Json& j, const std::string& what) {
  const auto v = as_int(j, what);
  if (v < 0 || v > 1'000'000) throw InputError(what + ": expected a natural number, got " + j.dump());
  return static_cast<std::uint32_t>(v);
}

inline IntVec as_intvec(const Json& j, const std::string& what) {
  IntVec out;
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) throw InputError(what + ": expected an integer or an integer array, got " + j.dump());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

inline MultiIndex as_multi_index(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array of naturals, got " + j.dump());
  std::vector<std::uint32_t> out;
  for (const auto& x : j) out.push_back(as_natural(x, what));
  return MultiIndex(std::move(out));
}

inline Partition parse_partition(const Json& config, const char* key, std::size_t m) {
  if (!config.contains(key)) return Partition::trivial(m);
  const Json& j = config.at(key);
  if (!j.is_array() || j.empty()) throw InputError("partition: expected a nonempty array of part sizes");
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& x : j) {
    const auto d = as_natural(x, "partition");
    if (d == 0) throw InputError("partition: part sizes must be positive");
    sizes.push_back(d);
    total += d;
  }
  if (total != m) {
    throw InputError("partition: part sizes sum to " + std::to_string(total) + " but there are " + std::to_string(m) +
                     " operators");
  }
  return Partition(std::move(sizes));
}

inline std::vector<PartHypothesis> parse_declared(const Json& config, std::size_t parts) {
  if (!config.contains("declared")) return {};
  const Json& j = config.at("declared");
  if (!j.is_array() || j.size() != parts) throw InputError("declared: one entry per part is required");
  std::vector<PartHypothesis> out;
  for (const auto& x : j) {
    const auto s = as<std::string>(x, "declared");
    if (s == "triangular") {
      out.push_back(PartHypothesis::triangular);
    } else if (s == "quasi-triangular") {
      out.push_back(PartHypothesis::quasi_triangular);
    } else {
      throw InputError("declared: unknown hypothesis \"" + s + "\"");
    }
  }
  return out;
}

template <class F>
auto parse_list(const Json& config, const char* key, F&& element) {
  using E = decltype(element(std::declval<const Json&>()));
  std::vector<E> out;
  if (!config.contains(key)) return out;
  const Json& j = config.at(key);
  if (!j.is_array()) throw InputError(std::string(key) + ": expected an array");
  for (const auto& x : j) out.push_back(element(x));
  return out;
}

// --- Operator languages ----------------------------------------------------

inline std::vector<Operator<IntVec>> parse_affine_ops(const Json& ops, std::size_t dimension) {
  if (!ops.is_array() || ops.empty()) throw InputError("operators: expected a nonempty array");
  std::vector<Operator<IntVec>> out;
  for (const auto& op : ops) {
    if (!op.is_object()) throw InputError("operators: expected objects with \"translate\" and optional \"scale\"");
    IntVec shift = op.contains("translate") ? as_intvec(op.at("translate"), "translate") : IntVec(dimension, 0);
    if (shift.size() != dimension) throw InputError("translate: vector " + to_string(shift) + " has wrong dimension");
    const std::int64_t scale = op.contains("scale") ? as_int(op.at("scale"), "scale") : 1;
    std::string name = op.contains("name") ? as<std::string>(op.at("name"), "name")
                                           : (scale == 1 ? "+" + to_string(shift)
                                                         : std::to_string(scale) + "x+" + to_string(shift));
    out.push_back(Operator<IntVec>{std::move(name), [shift, scale](const IntVec& x) {
                                     if (x.size() != shift.size()) throw InputError("element has wrong dimension");
                                     IntVec y = x;
                                     for (std::size_t i = 0; i < y.size(); ++i) y[i] = scale * y[i] + shift[i];
                                     return y;
                                   }});
  }
  return out;
}

/// Implicit backends: all variables by default, or a list of {"variable": i}
/// (1-based) / "x<i>" names.
inline std::vector<std::size_t> parse_variable_ops(const Json& config, const char* key, std::size_t m) {
  std::vector<std::size_t> out;
  if (!config.contains(key)) {
    for (std::size_t i = 0; i < m; ++i) out.push_back(i);
    return out;
  }
  const Json& ops = config.at(key);
  if (!ops.is_array() || ops.empty()) throw InputError("operators: expected a nonempty array");
  for (const auto& op : ops) {
    std::int64_t v = 0;
    if (op.is_object()) {
      v = as_int(require(op, "variable", "operators"), "variable");
    } else if (op.is_string() && op.get<std::string>().size() > 1 && op.get<std::string>()[0] == 'x') {
      try {
        v = std::stoll(op.get<std::string>().substr(1));
      } catch (const std::exception&) {
        throw InputError("operators: unknown operator " + op.dump());
      }
    } else {
      throw InputError("operators: expected {\"variable\": i} or \"x<i>\", got " + op.dump());
    }
    if (v < 1 || static_cast<std::size_t>(v) > m) {
      throw InputError("operators: variable " + std::to_string(v) + " out of range 1.." + std::to_string(m));
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

inline std::function<std::int64_t(std::int64_t)> parse_vertex_map(const Json& op) {
  if (op.contains("vertex_shift")) {
    const auto k = as_int(op.at("vertex_shift"), "vertex_shift");
    return [k](std::int64_t v) { return v + k; };
  }
  if (op.contains("vertex_map")) {
    auto table = std::make_shared<std::map<std::int64_t, std::int64_t>>();
    for (const auto& pair : op.at("vertex_map")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("vertex_map: expected [from, to] pairs");
      (*table)[as_int(pair[0], "vertex_map")] = as_int(pair[1], "vertex_map");
    }
    const std::string fallback = op.contains("default") ? as<std::string>(op.at("default"), "default") : "identity";
    if (fallback != "identity" && fallback != "error") throw InputError("vertex_map default must be identity or error");
    const bool strict = fallback == "error";
    return [table, strict](std::int64_t v) {
      auto it = table->find(v);
      if (it != table->end()) return it->second;
      if (strict) throw MapError("vertex " + std::to_string(v) + " is not in the vertex map");
      return v;
    };
  }
  throw InputError("operators: expected \"vertex_shift\" or \"vertex_map\", got " + op.dump());
}

inline std::vector<VertexMap> parse_vertex_ops(const Json& ops) {
  if (!ops.is_array() || ops.empty()) throw InputError("operators: expected a nonempty array");
  std::vector<VertexMap> out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Json& op = ops[i];
    if (!op.is_object()) throw InputError("operators: expected objects");
    std::string name = op.contains("name") ? as<std::string>(op.at("name"), "name") : "g" + std::to_string(i + 1);
    out.push_back(VertexMap{std::move(name), parse_vertex_map(op)});
  }
  return out;
}

// --- Running a parsed problem -------------------------------------------------

struct Context {
  std::string mode;
  std::string backend;
  StabilizationConfig cfg;
  bool star = false;
};

inline int exit_for(Certification c) { return c == Certification::certified ? kCertified : kInconclusive; }

template <Matroid M>
RunOutcome run_generic(const Context& ctx, const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                       const std::vector<element_t<M>>& b, const std::optional<OperatorSystem<M>>& psi) {
  RunOutcome out;
  OrderedJson& doc = out.document;
  if (ctx.mode == "check") {
    std::vector<element_t<M>> sample = a;
    sample.insert(sample.end(), b.begin(), b.end());
    if (sample.empty()) throw InputError("check mode needs a nonempty sample: give elements in \"A\" or \"B\"");
    const SystemReport report = check_system(sys, sample, ctx.cfg.check);
    bool ok = report.commutes;
    for (std::size_t part = 0; part < report.parts.size(); ++part) {
      const bool want_triangular = sys.declared(part) == PartHypothesis::triangular;
      if (want_triangular ? !report.parts[part].triangular : !report.parts[part].quasi_triangular) ok = false;
    }
    doc["status"] = ok ? "pass" : "hypothesis-failure";
    doc["check"] = to_json(report);
    out.exit_code = ok ? kCertified : kHypothesisFailure;
    out.message = ok ? "all declared hypotheses pass the sampled check" : "a declared hypothesis fails";
    return out;
  }
  GrowthResult r;
  if (ctx.mode == "dimension" || ctx.mode == "sumset" || (ctx.mode == "phi-rank" && !ctx.star)) {
    r = dimension_polynomial(sys, a, b, ctx.cfg);
  } else if (ctx.mode == "cumulative" || (ctx.mode == "phi-rank" && ctx.star)) {
    r = cumulative_polynomial(sys, a, b, ctx.cfg);
  } else if (ctx.mode == "context") {
    if (!psi) throw InputError("context mode needs a \"context\" system");
    r = context_dimension_polynomial(sys, *psi, a, b, ctx.cfg);
  } else {
    throw InputError("mode \"" + ctx.mode + "\" is not available for the " + ctx.backend + " backend");
  }
  doc["status"] = to_string(r.growth.status);
  doc["result"] = to_json(r);
  if (ctx.mode == "phi-rank") {
    const Integer rank = r.growth.numerator_at_ones();
    if (ctx.star && rank < 0) throw Error("closure rank of the augmented system is negative");
    doc["phi_rank"] = OrderedJson{{"augmented", ctx.star}, {"value", to_fraction_string(Rational(rank))}};
  }
  out.exit_code = exit_for(r.growth.status);
  out.message = to_string(r.growth.polynomial);
  if (ctx.mode == "phi-rank") out.message = "rank " + r.growth.numerator_at_ones().str() + ", P = " + out.message;
  return out;
}

template <class ParseOps, class Build>
auto context_system(const Json& config, ParseOps&& parse_ops, Build&& build)
    -> std::optional<decltype(build(parse_ops(config), Partition()))> {
  if (!config.contains("context")) return std::nullopt;
  const Json& c = config.at("context");
  auto ops = parse_ops(c);
  const std::size_t m = ops.size();
  return build(std::move(ops), parse_partition(c, "partition", m));
}

inline RunOutcome run_trivial(const Json& config, const Context& ctx) {
  const Json data = config.value("backend_data", Json::object());
  if (ctx.mode == "sumset") {
    const Json& sets = require(data, "sets", "backend_data");
    if (!sets.is_array() || sets.empty()) throw InputError("sets: expected a nonempty array of sets");
    std::vector<std::vector<IntVec>> parsed;
    for (const auto& s : sets) {
      if (!s.is_array()) throw InputError("sets: each set must be an array");
      std::vector<IntVec> v;
      for (const auto& x : s) v.push_back(as_intvec(x, "sets"));
      parsed.push_back(std::move(v));
    }
    auto sys = make_sumset_system(parsed);
    const std::size_t d = sys.matroid().dimension();
    auto a = parse_list(config, "A", [](const Json& x) { return as_intvec(x, "A"); });
    if (!config.contains("A")) a.push_back(IntVec(d, 0));
    const auto b = parse_list(config, "B", [](const Json& x) { return as_intvec(x, "B"); });
    return run_generic(ctx, sys, a, b, std::optional<OperatorSystem<TrivialMatroid>>{});
  }
  const std::size_t d = data.contains("dimension") ? as_natural(data.at("dimension"), "dimension") : 1;
  auto parse_ops = [d](const Json& j) { return parse_affine_ops(require(j, "operators", "problem"), d); };
  auto build = [&](std::vector<Operator<IntVec>> ops, Partition p) {
    return OperatorSystem<TrivialMatroid>(TrivialMatroid(d), std::move(ops), p, parse_declared(config, p.parts()));
  };
  auto ops = parse_ops(config);
  const std::size_t m = ops.size();
  const auto sys = build(std::move(ops), parse_partition(config, "partition", m));
  const auto a = parse_list(config, "A", [](const Json& x) { return as_intvec(x, "A"); });
  const auto b = parse_list(config, "B", [](const Json& x) { return as_intvec(x, "B"); });
  auto build_psi = [d](std::vector<Operator<IntVec>> o, Partition p) {
    return OperatorSystem<TrivialMatroid>(TrivialMatroid(d), std::move(o), std::move(p));
  };
  return run_generic(ctx, sys, a, b, context_system(config, parse_ops, build_psi));
}

inline RunOutcome run_ideal_count(const Json& config, const Context& ctx) {
  const Json& data = require(config, "backend_data", "problem");
  const std::size_t m = as_natural(require(data, "dimension", "backend_data"), "dimension");
  std::vector<MultiIndex> minima;
  if (data.contains("complement")) {
    for (const auto& g : data.at("complement")) minima.push_back(as_multi_index(g, "complement"));
  }
  const IdealCountMatroid matroid{DownSet(m, minima)};
  auto parse_ops = [m](const Json& j) {
    std::vector<Operator<MultiIndex>> ops;
    for (auto i : parse_variable_ops(j, "operators", m)) ops.push_back(coordinate_increment(i, m));
    return ops;
  };
  auto build = [&](std::vector<Operator<MultiIndex>> ops, Partition p) {
    return OperatorSystem<IdealCountMatroid>(matroid, std::move(ops), std::move(p));
  };
  auto ops = parse_ops(config);
  const std::size_t arity = ops.size();
  const auto sys = OperatorSystem<IdealCountMatroid>(matroid, std::move(ops),
                                                     parse_partition(config, "partition", arity),
                                                     parse_declared(config, parse_partition(config, "partition", arity).parts()));
  auto a = parse_list(config, "A", [](const Json& x) { return as_multi_index(x, "A"); });
  if (!config.contains("A")) a = ideal_seed(m);
  const auto b = parse_list(config, "B", [](const Json& x) { return as_multi_index(x, "B"); });
  if (ctx.mode != "ideal-count") return run_generic(ctx, sys, a, b, context_system(config, parse_ops, build));

  const GrowthResult graded = dimension_polynomial(sys, a, b, ctx.cfg);
  const GrowthResult cumulative = cumulative_polynomial(sys, a, b, ctx.cfg);
  RunOutcome out;
  const Certification status = rankgrowth::detail::worst({graded.growth.status, cumulative.growth.status});
  out.document["status"] = to_string(status);
  out.document["result"] = to_json(graded);
  out.document["cumulative"] = to_json(cumulative);
  out.exit_code = exit_for(status);
  out.message = "H = " + to_string(graded.growth.polynomial) + ", H* = " + to_string(cumulative.growth.polynomial);
  return out;
}

/// {"generator": j, "monomial": [...]}, a bare exponent array, or
/// {"terms": [{"coefficient": "p/q", "generator": j, "monomial": [...]}, ...]}.
inline SparseVector parse_module_element(const Json& x, const MonomialModule& module) {
  auto monomial = [&](const Json& t, const Rational& c) {
    const std::size_t g = t.is_object() && t.contains("generator") ? as_natural(t.at("generator"), "generator") : 0;
    const MultiIndex r = as_multi_index(t.is_object() ? require(t, "monomial", "element") : t, "monomial");
    SparseVector v = module.monomial(g, r);
    for (auto& [k, a] : v) a *= c;
    return v;
  };
  if (x.is_object() && x.contains("terms")) {
    SparseVector sum;
    for (const auto& t : x.at("terms")) {
      const Rational c = t.contains("coefficient") ? parse_rational(as<std::string>(t.at("coefficient"), "coefficient"))
                                                   : Rational(1);
      for (const auto& [k, a] : monomial(t, c)) {
        auto [slot, inserted] = sum.try_emplace(k, 0);
        slot->second += a;
        if (slot->second == 0) sum.erase(slot);
      }
    }
    return sum;
  }
  return monomial(x, Rational(1));
}

inline RunOutcome run_linear(const Json& config, const Context& ctx) {
  const Json& data = require(config, "backend_data", "problem");
  const std::size_t m = as_natural(require(data, "variables", "backend_data"), "variables");
  const std::size_t generators = data.contains("generators") ? as_natural(data.at("generators"), "generators") : 1;
  std::vector<MonomialRelation> relations;
  if (data.contains("relations")) {
    for (const auto& rel : data.at("relations")) {
      if (rel.is_object() && rel.contains("terms")) {
        if (rel.at("terms").size() != 1) {
          throw UnsupportedInputError("relation " + rel.dump() + " is not a monomial; only monomial relations are supported");
        }
        const Json& t = rel.at("terms")[0];
        relations.push_back(MonomialRelation{t.contains("generator") ? as_natural(t.at("generator"), "generator") : 0u,
                                             as_multi_index(require(t, "monomial", "relation"), "relation")});
      } else if (rel.is_object()) {
        relations.push_back(MonomialRelation{rel.contains("generator") ? as_natural(rel.at("generator"), "generator") : 0u,
                                             as_multi_index(require(rel, "monomial", "relation"), "relation")});
      } else {
        relations.push_back(MonomialRelation{0, as_multi_index(rel, "relation")});
      }
    }
  }
  const MonomialModule module(m, generators, std::move(relations));
  auto parse_ops = [&](const Json& j) {
    std::vector<Operator<SparseVector>> ops;
    for (auto i : parse_variable_ops(j, "operators", m)) ops.push_back(module.multiplication(i));
    return ops;
  };
  auto build = [](std::vector<Operator<SparseVector>> ops, Partition p) {
    return OperatorSystem<LinearMatroid>(LinearMatroid(), std::move(ops), std::move(p));
  };
  auto ops = parse_ops(config);
  const std::size_t arity = ops.size();
  const Partition p = parse_partition(config, "partition", arity);
  const OperatorSystem<LinearMatroid> sys(LinearMatroid(), std::move(ops), p, parse_declared(config, p.parts()));
  auto a = parse_list(config, "A", [&](const Json& x) { return parse_module_element(x, module); });
  if (!config.contains("A")) a = module_generators(module);
  const auto b = parse_list(config, "B", [&](const Json& x) { return parse_module_element(x, module); });
  return run_generic(ctx, sys, a, b, context_system(config, parse_ops, build));
}

inline Edge parse_edge(const Json& x) {
  if (x.is_string()) {
    const std::string s = x.get<std::string>();
    if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'b' || s[0] == 'c')) {
      try {
        return counterexample_edge(static_cast<GadgetEdge>(s[0] - 'a'), std::stoll(s.substr(1)));
      } catch (const std::logic_error&) {
      }
    }
    throw InputError("edge: unknown edge name \"" + s + "\"");
  }
  const IntVec v = as_intvec(x, "edge");
  if (v.size() != 2 && v.size() != 3) throw InputError("edge: expected [u, v] or [u, v, label], got " + x.dump());
  return Edge::make(v[0], v[1], v.size() == 3 ? v[2] : 0);
}

inline RunOutcome run_graphic(const Json& config, const Context& ctx) {
  const Json data = config.value("backend_data", Json());
  if (data.is_string() && data.get<std::string>() == "counterexample") {
    const std::int64_t limit =
        4 * (static_cast<std::int64_t>(ctx.cfg.max_box) + static_cast<std::int64_t>(ctx.cfg.window) + 2);
    OperatorSystem<GraphicMatroid> sys = make_counterexample_graph(limit);
    if (config.contains("declared")) sys = sys.with_partition(Partition::trivial(1), parse_declared(config, 1));
    auto a = parse_list(config, "A", parse_edge);
    if (!config.contains("A")) a = counterexample_seeds();
    const auto b = parse_list(config, "B", parse_edge);
    return run_generic(ctx, sys, a, b, std::optional<OperatorSystem<GraphicMatroid>>{});
  }
  auto parse_ops = [](const Json& j) {
    std::vector<Operator<Edge>> ops;
    for (const auto& f : parse_vertex_ops(require(j, "operators", "problem"))) {
      ops.push_back(induced_edge_map(f.name, f.vertex));
    }
    return ops;
  };
  auto build = [](std::vector<Operator<Edge>> ops, Partition p) {
    return OperatorSystem<GraphicMatroid>(GraphicMatroid(), std::move(ops), std::move(p));
  };
  auto ops = parse_ops(config);
  const std::size_t arity = ops.size();
  const Partition p = parse_partition(config, "partition", arity);
  const OperatorSystem<GraphicMatroid> sys(GraphicMatroid(), std::move(ops), p, parse_declared(config, p.parts()));
  const auto a = parse_list(config, "A", parse_edge);
  const auto b = parse_list(config, "B", parse_edge);
  return run_generic(ctx, sys, a, b, context_system(config, parse_ops, build));
}

inline RunOutcome run_chain(const Json& config, const Context& ctx) {
  const Json data = config.value("backend_data", Json::object());
  SimplicialComplex complex = SimplicialComplex::full();
  if (data.contains("complex")) {
    const Json& c = data.at("complex");
    if (c.is_string() && c.get<std::string>() == "path") {
      complex = SimplicialComplex::integer_path();
    } else if (c.is_string() && c.get<std::string>() == "full") {
      complex = SimplicialComplex::full();
    } else if (c.is_array()) {
      std::vector<Simplex> simplices;
      for (const auto& s : c) simplices.push_back(as_intvec(s, "complex"));
      complex = SimplicialComplex::from_simplices(simplices);
    } else {
      throw InputError("complex: expected \"path\", \"full\" or a list of simplices");
    }
  }
  const auto maps = parse_vertex_ops(require(config, "operators", "problem"));
  const Partition p = parse_partition(config, "partition", maps.size());
  ChainSystem chain = make_chain_system(complex, maps, p);
  if (config.contains("declared")) {
    chain.system = chain.system.with_partition(p, parse_declared(config, p.parts()));
  }
  const auto a = parse_list(config, "A", [](const Json& x) { return Simplex(as_intvec(x, "A")); });
  if (ctx.mode == "check") {
    return run_generic(ctx, chain.system, close_under_faces(a), {}, std::optional<OperatorSystem<ChainMatroid>>{});
  }
  if (ctx.mode != "betti") throw InputError("the chain backend supports the betti and check modes");
  const Json betti = config.value("betti", Json::object());
  const std::size_t n = betti.contains("n") ? as_natural(betti.at("n"), "betti.n") : 0;
  const std::string orbit = betti.contains("orbit") ? as<std::string>(betti.at("orbit"), "betti.orbit") : "graded";
  if (orbit != "graded" && orbit != "cumulative") throw InputError("betti.orbit must be graded or cumulative");
  const BettiResult r =
      betti_polynomials(chain, a, n, orbit == "graded" ? OrbitMode::graded : OrbitMode::cumulative, ctx.cfg);
  RunOutcome out;
  out.document["status"] = to_string(r.betti.status);
  OrderedJson primary = to_json(r.betti);
  primary["n"] = n;
  primary["orbit"] = orbit;
  out.document["result"] = primary;
  out.document["components"] = OrderedJson{{"cells", to_json(r.cells)},
                                           {"boundaries", to_json(r.boundaries)},
                                           {"next_boundaries", to_json(r.next_boundaries)}};
  out.exit_code = exit_for(r.betti.status);
  out.message = "b_" + std::to_string(n) + " = " + to_string(r.betti.polynomial);
  return out;
}

inline RunOutcome run_circuit(const Json& config, const Context& ctx) {
  const Json& data = require(config, "backend_data", "problem");
  const std::size_t m = as_natural(require(data, "variables", "backend_data"), "variables");
  const Partition p = parse_partition(config, "partition", m);
  auto parse_rule = [](const Json& j) {
    if (j.is_string() && j.get<std::string>() == "free") return DegreeRule::free_matroid();
    if (j.is_object() && j.contains("uniform")) return DegreeRule::uniform(as_natural(j.at("uniform"), "uniform"));
    if (j.is_object() && j.contains("circuits")) {
      std::vector<Circuit> cs;
      for (const auto& c : j.at("circuits")) {
        Circuit circuit;
        for (const auto& e : c) circuit.push_back(as_multi_index(e, "circuit"));
        cs.push_back(std::move(circuit));
      }
      return DegreeRule::explicit_family(std::move(cs));
    }
    throw InputError("degree rule: expected \"free\", {\"uniform\": r} or {\"circuits\": [...]}");
  };
  std::map<MultiIndex, DegreeRule> rules;
  if (data.contains("degrees")) {
    for (const auto& entry : data.at("degrees")) {
      rules[as_multi_index(require(entry, "degree", "degrees"), "degree")] = parse_rule(entry);
    }
  }
  const DegreeRule fallback = data.contains("default") ? parse_rule(data.at("default")) : DegreeRule::free_matroid();
  const CircuitMatroid matroid(m, p, std::move(rules), fallback);
  if (config.contains("operators")) throw InputError("the circuit backend uses multiplication by every variable");
  auto sys = make_circuit_system(matroid);
  if (config.contains("declared")) sys = sys.with_partition(p, parse_declared(config, p.parts()));
  const auto a = parse_list(config, "A", [](const Json& x) { return as_multi_index(x, "A"); });
  const auto b = parse_list(config, "B", [](const Json& x) { return as_multi_index(x, "B"); });
  return run_generic(ctx, sys, a, b, std::optional<OperatorSystem<CircuitMatroid>>{});
}

}  // namespace detail

/// Runs a parsed problem.  Never throws: errors become exit codes 1 and 3.
namespace detail {

/// Digest of the problem; the thread count does not change any output.
inline std::string problem_digest(Json config) {
  if (config.is_object()) config.erase("threads");
  return fnv1a_digest(config.dump());
}

}  // namespace detail

inline RunOutcome run_problem(Json config, const RunOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  RunOutcome out;
  try {
    if (!config.is_object()) throw InputError("problem: expected a JSON object");
    if (options.mode) config["mode"] = *options.mode;
    if (options.box) config["box"] = *options.box;
    if (options.window) config["window"] = *options.window;
    if (options.threads) config["threads"] = *options.threads;
    if (options.seed_sample) config["seed_sample"] = *options.seed_sample;

    detail::Context ctx;
    ctx.backend = detail::as<std::string>(detail::require(config, "backend", "problem"), "backend");
    ctx.mode = config.contains("mode") ? detail::as<std::string>(config.at("mode"), "mode") : "dimension";
    if (!known_modes().contains(ctx.mode)) throw InputError("unknown mode \"" + ctx.mode + "\"");
    if (config.contains("box")) ctx.cfg.box = detail::as_multi_index(config.at("box"), "box");
    if (config.contains("window")) {
      ctx.cfg.window = detail::as_natural(config.at("window"), "window");
      if (ctx.cfg.window < 1) throw InputError("window must be at least 1");
    }
    if (config.contains("threads")) ctx.cfg.threads = std::max<std::size_t>(1, detail::as_natural(config.at("threads"), "threads"));
    if (config.contains("seed_sample")) ctx.cfg.check.seed = detail::as<std::uint64_t>(config.at("seed_sample"), "seed_sample");
    if (config.contains("check_depth")) ctx.cfg.check.depth = detail::as_natural(config.at("check_depth"), "check_depth");
    ctx.star = config.value("star", false);
    if (ctx.mode == "sumset" && ctx.backend != "trivial") throw InputError("sumset mode needs the trivial backend");
    if (ctx.mode == "ideal-count" && ctx.backend != "ideal-count") {
      throw InputError("ideal-count mode needs the ideal-count backend");
    }
    if (ctx.mode == "betti" && ctx.backend != "chain") throw InputError("betti mode needs the chain backend");

    if (ctx.backend == "trivial") {
      out = detail::run_trivial(config, ctx);
    } else if (ctx.backend == "ideal-count") {
      out = detail::run_ideal_count(config, ctx);
    } else if (ctx.backend == "linear") {
      out = detail::run_linear(config, ctx);
    } else if (ctx.backend == "graphic") {
      out = detail::run_graphic(config, ctx);
    } else if (ctx.backend == "chain") {
      out = detail::run_chain(config, ctx);
    } else if (ctx.backend == "circuit") {
      out = detail::run_circuit(config, ctx);
    } else {
      throw InputError("unknown backend \"" + ctx.backend + "\"");
    }
    OrderedJson doc{{"tool", kToolName}, {"version", kToolVersion}, {"input_digest", detail::problem_digest(config)},
                    {"backend", ctx.backend}, {"mode", ctx.mode}};
    for (auto& [k, v] : out.document.items()) doc[k] = v;
    out.document = std::move(doc);
  } catch (const HypothesisError& e) {
    out.exit_code = kHypothesisFailure;
    out.message = std::string("hypothesis failure: ") + e.what();
    out.document = OrderedJson{{"tool", kToolName},        {"version", kToolVersion},
                               {"input_digest", detail::problem_digest(config)},
                               {"status", "hypothesis-failure"}, {"witness", e.what()}};
  } catch (const InputError& e) {
    out.exit_code = kInputError;
    out.message = std::string("input error: ") + e.what();
    out.document = OrderedJson{{"tool", kToolName}, {"version", kToolVersion}, {"status", "input-error"},
                               {"error", e.what()}};
  } catch (const Error& e) {
    out.exit_code = kInputError;
    out.message = std::string("error: ") + e.what();
    out.document = OrderedJson{{"tool", kToolName}, {"version", kToolVersion}, {"status", "error"}, {"error", e.what()}};
  }
  if (options.timing) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    out.document["timing"] = OrderedJson{{"seconds", seconds}};
  }
  return out;
}

inline RunOutcome run_problem_text(const std::string& text, const RunOptions& options = {}) {
  Json config;
  try {
    config = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    RunOutcome out;
    out.exit_code = kInputError;
    out.message = std::string("input error: malformed JSON: ") + e.what();
    out.document = OrderedJson{{"tool", kToolName}, {"version", kToolVersion}, {"status", "input-error"},
                               {"error", out.message}};
    return out;
  }
  return run_problem(std::move(config), options);
}

}  // namespace rankgrowth::io

#endif  // RANKGROWTH_IO_PROBLEM_HPP
