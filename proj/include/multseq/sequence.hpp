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

#ifndef MULTSEQ_SEQUENCE_HPP_
#define MULTSEQ_SEQUENCE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "multseq/rational.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

// lambda_n = P(n) for every n >= 0.
struct PolyInN {
  UniPoly p;
};

// A finite prefix lambda_0..lambda_{m-1}. With `complete` set every later
// entry is zero; otherwise the tail is unknown and never extrapolated.
struct ExplicitList {
  std::vector<Rational> values;
  bool complete = false;
};

class SequenceSpec {
 public:
  static SequenceSpec poly(UniPoly p);
  static SequenceSpec list(std::vector<Rational> values, bool complete = false);
  // "poly:c0,c1,..." or "list:v0,v1,...". Throws ErrorCode::kParse.
  static SequenceSpec parse(const std::string& text, bool complete = false);

  bool is_poly() const { return std::holds_alternative<PolyInN>(repr_); }
  bool is_list() const { return std::holds_alternative<ExplicitList>(repr_); }
  const PolyInN& as_poly() const { return std::get<PolyInN>(repr_); }
  const ExplicitList& as_list() const { return std::get<ExplicitList>(repr_); }

  // Whether lambda_n is determined (always for polynomials and complete
  // lists).
  bool known(long n) const;
  // lambda_n; throws ErrorCode::kInsufficientPrefix when not known.
  Rational at(long n) const;
  // Largest index with a known value, or nullopt when every index is known.
  std::optional<long> last_known() const;

  // c * lambda_n
  SequenceSpec scaled(const Rational& c) const;
  // (-1)^n lambda_n
  SequenceSpec alternated() const;

  std::string to_string() const;  // parse() round-trips this

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);

 private:
  explicit SequenceSpec(std::variant<PolyInN, ExplicitList> r) : repr_(std::move(r)) {}

  std::variant<PolyInN, ExplicitList> repr_;
};

// a_k of lambda_n = sum_k a_k C(n, k).
struct DeltaCoefficients {
  std::vector<Rational> values;
  // Every a_k beyond `values` is exactly zero.
  bool exact_tail_known = false;
};

// a_k = sum_{j<=k} (-1)^{k-j} C(k,j) lambda_j for k <= upto. Polynomial
// sequences ignore `upto` and return all deg P + 1 coefficients.
DeltaCoefficients binomial_invert(const SequenceSpec& s, long upto);

// lambda_n = sum_k a_k C(n, k).
Rational lambda_from_delta(const DeltaCoefficients& a, long n);

struct Triviality {
  enum class Kind { kTrivial, kNontrivial, kUndetermined };
  Kind kind = Kind::kUndetermined;
  long k = 0;  // for kTrivial: every entry outside {k, k+1} vanishes
};

Triviality is_trivial(const SequenceSpec& s);

// p(y) = sum_k C(k+alpha, k) a_k y^k. Requires a polynomial sequence.
UniPoly build_p(const SequenceSpec& s, const Rational& alpha);

// Q(y) = sum_k a_k y^k / k!, so that sum_n lambda_n x^n/n! = Q(x) e^x.
UniPoly build_classical_Q(const SequenceSpec& s);

// First upto+1 coefficients of
//   (1+y)^(-alpha-1) sum_n lambda_n C(n+alpha, n) (y/(1+y))^n.
std::vector<Rational> strs_coefficients(const SequenceSpec& s, const Rational& alpha, long upto);

// Default truncation for series cross-checks: max(deg P + 4, 8).
long default_series_order(const SequenceSpec& s);

}  // namespace multseq

#endif  // MULTSEQ_SEQUENCE_HPP_
