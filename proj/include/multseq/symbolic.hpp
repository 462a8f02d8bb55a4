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

#ifndef MULTSEQ_SYMBOLIC_HPP_
#define MULTSEQ_SYMBOLIC_HPP_

#include "multseq/bipoly.hpp"
#include "multseq/orthobasis.hpp"
#include "multseq/rational.hpp"
#include "multseq/sequence.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

// Polynomial part of the symbol with the e^{-xy} factor left implicit,
// truncated to y-degree <= order.
struct SymbolTruncation {
  BiPoly grid;
  int order = 0;
  BasisId basis = BasisId::monomial();
};

// sum_n a_n y^n L_n^(alpha)(xy + x)
SymbolTruncation symbol_basis_form(const SequenceSpec& s, const Rational& alpha, int order);

// sum_k p^(k)(y) (-xy(y+1))^k / ((alpha+1)...(alpha+k) k!)
SymbolTruncation symbol_p_form(const SequenceSpec& s, const Rational& alpha, int order);

// p(y - xy(y+1))
BiPoly substituted_p(const UniPoly& p);

// y p(y) + y(y+1) p'(y) / (1 + alpha)
UniPoly pencil_q(const UniPoly& p, const Rational& alpha);

// f'g - fg'
UniPoly wronskian(const UniPoly& f, const UniPoly& g);

// f << g. Throws kDomain "inputs must be real-rooted", and kInvalidArgument
// when both are zero. The zero polynomial is in proper position with anything.
bool proper_position(const UniPoly& f, const UniPoly& g);

// proper_position(p, pencil_q(p, alpha)); false for p that is zero or not
// real-rooted.
bool pencil_stability(const UniPoly& p, const Rational& alpha);

// e^{y^2/4} sum_k lambda_k H_k(x) (-y)^k / (2^k k!), truncated to y-degree <= order.
SymbolTruncation hermite_symbol(const SequenceSpec& s, int order);

}  // namespace multseq

#endif  // MULTSEQ_SYMBOLIC_HPP_
