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

#include "multseq/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace multseq {

BiPoly BiPoly::constant(const Rational& c) { return term(0, 0, c); }

BiPoly BiPoly::term(int x_deg, int y_deg, const Rational& c) {
  BiPoly out;
  out.add_term({x_deg, y_deg}, c);
  return out;
}

BiPoly BiPoly::in_x(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({i, 0}, p.coeff(i));
  return out;
}

BiPoly BiPoly::in_y(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({0, i}, p.coeff(i));
  return out;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int x_deg, int y_deg) const {
  auto it = terms_.find({x_deg, y_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::x_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::y_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly BiPoly::truncate_y(int order) const {
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.second <= order) out.terms_.emplace(k, c);
  }
  return out;
}

UniPoly BiPoly::y_coefficient(int k) const {
  std::vector<Rational> v(static_cast<size_t>(std::max(x_degree(), 0)) + 1);
  for (const auto& [key, c] : terms_) {
    if (key.second == k) v[static_cast<size_t>(key.first)] = c;
  }
  return UniPoly(std::move(v), "x");
}

UniPoly BiPoly::x_coefficient(int k) const {
  std::vector<Rational> v(static_cast<size_t>(std::max(y_degree(), 0)) + 1);
  for (const auto& [key, c] : terms_) {
    if (key.first == k) v[static_cast<size_t>(key.second)] = c;
  }
  return UniPoly(std::move(v), "y");
}

UniPoly BiPoly::eval_x(const Rational& at) const {
  UniPoly out({}, "y");
  for (int k = x_degree(); k >= 0; --k) {
    out *= at;
    out += x_coefficient(k);
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiPoly mul_truncated_y(const BiPoly& a, const BiPoly& b, int order) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int yd = ka.second + kb.second;
      if (order >= 0 && yd > order) continue;
      out += BiPoly::term(ka.first + kb.first, yd, ca * cb);
    }
  }
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) { return mul_truncated_y(a, b, -1); }

BiPoly compose(const UniPoly& p, const BiPoly& g) {
  BiPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * g;
    acc += BiPoly::constant(p.coeff(i));
  }
  return acc;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << multseq::to_string(c);
    if (k.first > 0) os << "*x^" << k.first;
    if (k.second > 0) os << "*y^" << k.second;
  }
  return os.str();
}

}  // namespace multseq
