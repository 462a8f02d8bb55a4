// Copyright 2026 The multseq Authors.
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

#ifndef MULTSEQ_BIPOLY_HPP_
#define MULTSEQ_BIPOLY_HPP_

#include <map>
#include <string>
#include <utility>

#include "multseq/rational.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

// Sparse polynomial in two variables x and y. Keys are (x-degree, y-degree);
// zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;

  static BiPoly constant(const Rational& c);
  static BiPoly term(int x_deg, int y_deg, const Rational& c = Rational(1));
  static BiPoly in_x(const UniPoly& p);
  static BiPoly in_y(const UniPoly& p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(int x_deg, int y_deg) const;
  int x_degree() const;  // -1 for zero
  int y_degree() const;

  // Drops every term with y-degree above `order`.
  BiPoly truncate_y(int order) const;
  // Coefficient of y^k as a polynomial in x.
  UniPoly y_coefficient(int k) const;
  // Coefficient of x^k as a polynomial in y.
  UniPoly x_coefficient(int k) const;
  // Substitutes x = at.
  UniPoly eval_x(const Rational& at) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Key& k, const Rational& c);

  Terms terms_;
};

// Multiplies and drops terms of y-degree above `order` as it goes.
BiPoly mul_truncated_y(const BiPoly& a, const BiPoly& b, int order);

// p(g(x, y)) by Horner's rule.
BiPoly compose(const UniPoly& p, const BiPoly& g);

}  // namespace multseq

#endif  // MULTSEQ_BIPOLY_HPP_
