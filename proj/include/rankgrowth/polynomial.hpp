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

#ifndef RANKGROWTH_POLYNOMIAL_HPP
#define RANKGROWTH_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/rational.hpp"

namespace rankgrowth {

/// Multivariate polynomial over Q in a fixed number of variables, stored as
/// exponent -> nonzero coefficient.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c) {
    Polynomial p(variables);
    p.add_term(MultiIndex(variables), c);
    return p;
  }

  static Polynomial variable(std::size_t variables, std::size_t i) {
    Polynomial p(variables);
    p.add_term(unit_index(i, variables), 1);
    return p;
  }

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const MultiIndex& e, const Rational& c) {
    if (e.size() != variables_) throw InputError("exponent " + to_string(e) + " has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial out(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  template <class T>
  Rational evaluate(const std::vector<T>& point) const {
    if (point.size() != variables_) throw InputError("evaluation point has wrong number of coordinates");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < variables_; ++i) {
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= Rational(point[i]);
      }
      total += term;
    }
    return total;
  }

  Rational evaluate(const MultiIndex& point) const { return evaluate(point.entries()); }

  /// Sum of all coefficients, i.e. the value at (1, ..., 1).
  Rational value_at_ones() const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
  }

  /// Per-variable maximum exponent (zero polynomial: all zeros).
  MultiIndex degree_bound() const {
    MultiIndex out(variables_);
    for (const auto& [e, c] : terms_) out = join(out, e);
    return out;
  }

 private:
  void require_compatible(const Polynomial& o) const {
    if (o.variables_ != variables_) throw InputError("polynomials in different numbers of variables");
  }

  std::size_t variables_ = 0;
  Terms terms_;
};

/// Degree-descending graded-lex comparison used for printing: higher total
/// degree first, ties broken by the larger exponent of Y1, then Y2, ...
inline bool graded_lex_greater(const MultiIndex& a, const MultiIndex& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
  return a.entries() > b.entries();
}

inline std::vector<std::pair<MultiIndex, Rational>> sorted_terms(const Polynomial& p) {
  std::vector<std::pair<MultiIndex, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return graded_lex_greater(x.first, y.first); });
  return out;
}

inline std::string variable_name(std::size_t i, std::size_t variables) {
  return variables == 1 ? std::string("Y") : "Y" + std::to_string(i + 1);
}

/// e.g. "1/2*Y1^2 + 3/2*Y1 + 1"; univariate polynomials use the variable Y.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p)) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variable_name(i, p.variables());
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += to_display_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_display_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

/// C(Y + shift, e) as a polynomial in variable `var` of `variables`.
inline Polynomial binomial_polynomial(std::int64_t shift, std::uint32_t e, std::size_t var, std::size_t variables) {
  Polynomial out = Polynomial::constant(variables, 1);
  const Polynomial y = Polynomial::variable(variables, var);
  for (std::uint32_t j = 0; j < e; ++j) {
    out = out * (y + Polynomial::constant(variables, Rational(shift - static_cast<std::int64_t>(j))));
  }
  out *= Rational(1) / Rational(factorial(e));
  return out;
}

/// Terms whose exponent is maximal for the order "compare coordinate σ(k)
/// first, then σ(k-1), ..." for some permutation σ.
inline std::vector<std::pair<MultiIndex, Rational>> dominant_terms(const Polynomial& p) {
  std::vector<std::pair<MultiIndex, Rational>> out;
  if (p.is_zero()) return out;
  std::vector<std::size_t> sigma(p.variables());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<MultiIndex> chosen;
  do {
    const MultiIndex* best = nullptr;
    for (const auto& [e, c] : p.terms()) {
      if (best == nullptr) {
        best = &e;
        continue;
      }
      for (std::size_t pos = sigma.size(); pos-- > 0;) {
        const std::size_t i = sigma[pos];
        if (e[i] != (*best)[i]) {
          if (e[i] > (*best)[i]) best = &e;
          break;
        }
      }
    }
    chosen.insert(*best);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (const auto& e : chosen) out.emplace_back(e, p.coefficient(e));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return graded_lex_greater(x.first, y.first); });
  return out;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_POLYNOMIAL_HPP
