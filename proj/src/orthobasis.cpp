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

#include "multseq/orthobasis.hpp"

#include <algorithm>

#include "multseq/error.hpp"

namespace multseq {

BasisId BasisId::laguerre(const Rational& alpha) {
  if (alpha <= -1) throw Error(ErrorCode::kDomain, "alpha out of range");
  return BasisId(BasisKind::kLaguerre, alpha);
}

const Rational& BasisId::alpha() const {
  if (!alpha_) throw Error(ErrorCode::kInvalidArgument, "basis has no alpha parameter");
  return *alpha_;
}

std::string BasisId::name() const {
  switch (kind_) {
    case BasisKind::kMonomial: return "monomial";
    case BasisKind::kLaguerre: return "laguerre";
    case BasisKind::kHermite: return "hermite";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& name) {
  if (name == "monomial") return BasisKind::kMonomial;
  if (name == "laguerre") return BasisKind::kLaguerre;
  if (name == "hermite") return BasisKind::kHermite;
  throw Error(ErrorCode::kParse, "unknown basis '" + name + "'");
}

UniPoly laguerre_polynomial(int n, const Rational& alpha) {
  if (alpha <= -1) throw Error(ErrorCode::kDomain, "alpha out of range");
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative basis index");
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  Rational k_fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) k_fact *= k;
    // C(n+alpha, n-k) = prod_{j=1}^{n-k} (alpha+k+j) / (n-k)!
    Rational binom(1);
    for (int j = 1; j <= n - k; ++j) {
      binom *= alpha + k + j;
      binom /= j;
    }
    Rational term = binom / k_fact;
    c[static_cast<size_t>(k)] = (k % 2 == 0) ? term : Rational(-term);
  }
  return UniPoly(std::move(c), "x");
}

UniPoly hermite_polynomial(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative basis index");
  UniPoly prev{1};
  if (n == 0) return prev;
  const UniPoly two_x{0, 2};
  UniPoly cur = two_x;
  for (int k = 1; k < n; ++k) {
    UniPoly next = two_x * cur - prev * Rational(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly basis_polynomial(const BasisId& basis, int n) {
  switch (basis.kind()) {
    case BasisKind::kMonomial: return UniPoly::monomial(n);
    case BasisKind::kLaguerre: return laguerre_polynomial(n, basis.alpha());
    case BasisKind::kHermite: return hermite_polynomial(n);
  }
  throw Error(ErrorCode::kInternal, "unknown basis kind");
}

BasisTable::BasisTable(BasisId basis, int size) : basis_(std::move(basis)) {
  polys_.reserve(static_cast<size_t>(std::max(size, 0)));
  if (basis_.kind() == BasisKind::kHermite) {
    // Shared recurrence instead of rebuilding each H_n from scratch.
    const UniPoly two_x{0, 2};
    for (int n = 0; n < size; ++n) {
      if (n == 0) {
        polys_.push_back(UniPoly{1});
      } else if (n == 1) {
        polys_.push_back(two_x);
      } else {
        polys_.push_back(two_x * polys_[static_cast<size_t>(n - 1)] -
                         polys_[static_cast<size_t>(n - 2)] * Rational(2 * (n - 1)));
      }
    }
    return;
  }
  for (int n = 0; n < size; ++n) polys_.push_back(basis_polynomial(basis_, n));
}

BasisExpansion BasisTable::expand(const UniPoly& p) const {
  if (p.degree() >= size()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial degree exceeds basis table");
  }
  BasisExpansion out{basis_, {}};
  out.coefficients.resize(static_cast<size_t>(p.degree() + 1));
  std::vector<Rational> rem = p.coeffs();
  for (int n = p.degree(); n >= 0; --n) {
    const Rational& top = rem[static_cast<size_t>(n)];
    if (top == 0) continue;
    const UniPoly& pn = polys_[static_cast<size_t>(n)];
    Rational c = top / pn.leading();
    for (int i = 0; i <= n; ++i) rem[static_cast<size_t>(i)] -= c * pn.coeff(i);
    out.coefficients[static_cast<size_t>(n)] = std::move(c);
  }
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

UniPoly BasisTable::assemble(const BasisExpansion& e) const {
  if (static_cast<int>(e.coefficients.size()) > size()) {
    throw Error(ErrorCode::kInvalidArgument, "expansion length exceeds basis table");
  }
  std::vector<Rational> acc(e.coefficients.size());
  for (size_t n = 0; n < e.coefficients.size(); ++n) {
    const Rational& c = e.coefficients[n];
    if (c == 0) continue;
    const auto& pc = polys_[n].coeffs();
    for (size_t i = 0; i < pc.size(); ++i) acc[i] += c * pc[i];
  }
  return UniPoly(std::move(acc), "x");
}

BasisExpansion expand_in_basis(const UniPoly& p, const BasisId& basis) {
  return BasisTable(basis, p.degree() + 1).expand(p);
}

UniPoly assemble_from_basis(const BasisExpansion& e) {
  return BasisTable(e.basis, static_cast<int>(e.coefficients.size())).assemble(e);
}

}  // namespace multseq
