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

#ifndef MULTSEQ_ORTHOBASIS_HPP_
#define MULTSEQ_ORTHOBASIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "multseq/rational.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

enum class BasisKind { kMonomial, kLaguerre, kHermite };

// A polynomial basis {P_n}. Laguerre bases carry their parameter alpha > -1.
class BasisId {
 public:
  static BasisId monomial() { return BasisId(BasisKind::kMonomial, std::nullopt); }
  static BasisId hermite() { return BasisId(BasisKind::kHermite, std::nullopt); }
  // Throws ErrorCode::kDomain ("alpha out of range") unless alpha > -1.
  static BasisId laguerre(const Rational& alpha);

  BasisKind kind() const { return kind_; }
  const Rational& alpha() const;  // laguerre only
  bool has_alpha() const { return alpha_.has_value(); }
  std::string name() const;  // "monomial" | "laguerre" | "hermite"

  friend bool operator==(const BasisId&, const BasisId&) = default;

 private:
  BasisId(BasisKind kind, std::optional<Rational> alpha) : kind_(kind), alpha_(std::move(alpha)) {}

  BasisKind kind_;
  std::optional<Rational> alpha_;
};

BasisKind parse_basis_kind(const std::string& name);

// Coefficients c_n of a polynomial with respect to basis P_n.
struct BasisExpansion {
  BasisId basis = BasisId::monomial();
  std::vector<Rational> coefficients;  // no trailing zeros
};

// sum_{k=0}^{n} C(n+alpha, n-k) (-x)^k / k!. Throws kDomain unless alpha > -1.
UniPoly laguerre_polynomial(int n, const Rational& alpha);

// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
UniPoly hermite_polynomial(int n);

UniPoly basis_polynomial(const BasisId& basis, int n);

// The first `size` basis polynomials, built once and reused for repeated
// change-of-basis work on polynomials of degree < size.
class BasisTable {
 public:
  BasisTable(BasisId basis, int size);

  const BasisId& basis() const { return basis_; }
  int size() const { return static_cast<int>(polys_.size()); }
  const UniPoly& operator[](int n) const { return polys_.at(static_cast<size_t>(n)); }

  // Back-substitution on the triangular change-of-basis system.
  BasisExpansion expand(const UniPoly& p) const;
  UniPoly assemble(const BasisExpansion& e) const;

 private:
  BasisId basis_;
  std::vector<UniPoly> polys_;
};

BasisExpansion expand_in_basis(const UniPoly& p, const BasisId& basis);
UniPoly assemble_from_basis(const BasisExpansion& e);

}  // namespace multseq

#endif  // MULTSEQ_ORTHOBASIS_HPP_
