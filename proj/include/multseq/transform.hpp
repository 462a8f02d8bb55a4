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

#ifndef MULTSEQ_TRANSFORM_HPP_
#define MULTSEQ_TRANSFORM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "multseq/orthobasis.hpp"
#include "multseq/rational.hpp"
#include "multseq/sequence.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

// T(P_n) = lambda_n P_n on polynomials of degree <= max_degree.
class DiagonalOperator {
 public:
  // Throws ErrorCode::kInsufficientPrefix if lambda_{max_degree} is unknown.
  DiagonalOperator(const SequenceSpec& s, BasisId basis, int max_degree);

  int max_degree() const { return table_.size() - 1; }
  const BasisId& basis() const { return table_.basis(); }
  UniPoly operator()(const UniPoly& p) const;

 private:
  BasisTable table_;
  std::vector<Rational> lambda_;
};

// Expand p in the basis, scale coefficient n by lambda_n, assemble back.
UniPoly apply_diagonal(const SequenceSpec& s, const BasisId& basis, const UniPoly& p);

struct FuzzConfig {
  std::uint64_t seed = 0;
  int trials = 200;
  int max_degree = 8;
  std::vector<Rational> root_grid = default_root_grid();

  // Quarter steps over [-4, 4].
  static std::vector<Rational> default_root_grid();
  void validate() const;
};

// A real-rooted polynomial together with the roots it was built from.
struct RootedPoly {
  UniPoly poly;
  std::vector<Rational> roots;  // with repetition; empty if not built from roots
  std::string label;
};

// Deterministic in (cfg.seed, trial): scale * prod (x - r_i) with 1..max_degree
// roots drawn from cfg.root_grid.
RootedPoly random_real_rooted(const FuzzConfig& cfg, int trial);

struct Counterexample {
  RootedPoly input;
  UniPoly image;
  int real_roots = 0;  // distinct real roots of the square-free part of image
  int degree = 0;      // degree of that square-free part
};

struct AllPassed {
  int trials = 0;
};
struct PreservationFailure {
  int trial = 0;
  Counterexample counterexample;
};
using PreservationResult = std::variant<AllPassed, PreservationFailure>;

// Applies the operator to cfg.trials fuzzed real-rooted polynomials; the
// first non-real-rooted image (in trial order) is reported.
PreservationResult verify_preservation(const SequenceSpec& s, const BasisId& basis,
                                       const FuzzConfig& cfg);

// Real-rooted test polynomials of degree <= cap in a fixed canonical order:
// per degree d, the basis polynomial P_d, (1+x)^d, P_{d-1} +/- P_d, then
// products of d distinct factors from the grid {-3,-2,-1,-1/2,0,1/2,1,2,3}.
std::vector<RootedPoly> structured_family(const BasisId& basis, int cap);

// Checks `input` under `op`; returns the counterexample if the image is not
// real-rooted.
std::optional<Counterexample> check_image(const DiagonalOperator& op, const RootedPoly& input);

// Deterministic search over real-rooted inputs of degree <= degree_cap; the
// first failing image wins. Order: for d = 1..cap the structured family
// members of degree d and the powers (x - r)^d, r in {-40, -79/2, ..., 40};
// then root multisets of size 2..3 from a wide integer grid ([-4, 16] for
// Laguerre bases, [-8, 8] otherwise); then root multisets of size 2..cap from
// {-3, -5/2, ..., 3}.
std::optional<Counterexample> search_counterexample(const SequenceSpec& s, const BasisId& basis,
                                                    int degree_cap);

}  // namespace multseq

#endif  // MULTSEQ_TRANSFORM_HPP_
