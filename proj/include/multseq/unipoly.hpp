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

#ifndef MULTSEQ_UNIPOLY_HPP_
#define MULTSEQ_UNIPOLY_HPP_

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multseq/rational.hpp"

namespace multseq {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of
// var^i. The coefficient vector never carries trailing zeros, so the zero
// polynomial is the empty vector and has degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c, std::string var = "x");
  // The monomial c * var^n.
  static UniPoly monomial(int n, const Rational& c = Rational(1), std::string var = "x");
  // var - r
  static UniPoly linear_factor(const Rational& r, std::string var = "x");

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::span<const Rational> view() const noexcept { return coeffs_; }
  const std::string& var() const noexcept { return var_; }
  UniPoly with_var(std::string var) const;

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  // Coefficient of var^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  UniPoly derivative() const;
  UniPoly derivative(int order) const;
  // this(g(var))
  UniPoly compose(const UniPoly& g) const;
  // Divides by the leading coefficient. The zero polynomial stays zero.
  UniPoly monic() const;
  // Multiplies by a positive rational so that all coefficients are integers
  // with gcd 1. Sign and roots are preserved.
  UniPoly primitive() const;
  // this(-var)
  UniPoly reflect() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);

  // Equality compares coefficients only; the variable name is metadata.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
UniPoly operator%(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), monic. Throws ErrorCode::kZeroPolynomial on p == 0.
UniPoly square_free_part(const UniPoly& p);

// Yun's square-free decomposition: p = lc * prod_i factors[i]^(i+1), each
// factor monic, square-free and pairwise coprime. factors may contain 1s.
std::vector<UniPoly> square_free_decomposition(const UniPoly& p);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace multseq

#endif  // MULTSEQ_UNIPOLY_HPP_
