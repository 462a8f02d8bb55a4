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

#include "multseq/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "multseq/error.hpp"

namespace multseq {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c, std::string var) {
  return UniPoly(std::vector<Rational>{c}, std::move(var));
}

UniPoly UniPoly::monomial(int n, const Rational& c, std::string var) {
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  v[static_cast<size_t>(n)] = c;
  return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::linear_factor(const Rational& r, std::string var) {
  return UniPoly(std::vector<Rational>{-r, Rational(1)}, std::move(var));
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly out = *this;
  out.var_ = std::move(var);
  return out;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::derivative(int order) const {
  UniPoly out = *this;
  for (int i = 0; i < order && !out.is_zero(); ++i) out = out.derivative();
  return out;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc({}, g.var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += UniPoly::constant(*it, g.var_);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd(0);
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  UniPoly out = *this;
  out *= Rational(den_lcm, num_gcd);
  return out;
}

UniPoly UniPoly::reflect() const {
  UniPoly out = *this;
  for (size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << multseq::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly({}, a.var()), a};
  std::vector<Rational> quot(static_cast<size_t>(da - db) + 1);
  const Rational& lb = b.leading();
  for (int i = da; i >= db; --i) {
    const Rational& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    Rational f = top / lb;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
    quot[static_cast<size_t>(i - db)] = std::move(f);
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive();
  UniPoly y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "undefined for zero polynomial");
  if (p.is_constant()) return UniPoly::constant(Rational(1), p.var());
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "undefined for zero polynomial");
  std::vector<UniPoly> factors;
  if (p.is_constant()) return factors;
  const UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = p / a;
  UniPoly c = (dp / a);
  UniPoly d = c - b.derivative();
  while (!b.is_constant()) {
    UniPoly f = gcd(b, d);
    factors.push_back(f);
    b = b / f;
    c = d / f;
    d = c - b.derivative();
  }
  return factors;
}

}  // namespace multseq
