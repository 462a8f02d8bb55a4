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

#ifndef MULTSEQ_CLASSIFY_HPP_
#define MULTSEQ_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "multseq/orthobasis.hpp"
#include "multseq/rational.hpp"
#include "multseq/roots.hpp"
#include "multseq/sequence.hpp"
#include "multseq/transform.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

enum class Status { kYes, kNo, kUndetermined };
const char* to_string(Status s);

enum class Reason {
  kTrivial,
  kRootsInRange,        // the test polynomial is real-rooted with zeros in range
  kRootOutsideRange,
  kNonrealRoots,
  kHermiteAccepted,
  kNotClassical,        // Hermite: normalized sequence fails the classical test
  kDecreasing,          // Hermite: lambda_n > lambda_{n+1}
  kSignGap,
  kMixedSigns,
  kImageNotRealRooted,  // bounded test found a witness polynomial
  kPrefixConsistent,
};
const char* to_string(Reason r);

// [lo, hi] with lo == nullopt meaning -infinity.
struct RootRangeSpec {
  std::optional<Rational> lo;
  Rational hi;
};

// Every distinct real root of `poly` (p or Q), located inside `range`.
struct RootLocations {
  std::string poly;
  RootRangeSpec range;
  std::vector<IsolatingInterval> roots;
};

// A real root of `poly` lying outside `range`; the interval is disjoint from it.
struct OffendingRoot {
  std::string poly;
  RootRangeSpec range;
  IsolatingInterval root;
};

// Sturm deficit: the square-free part of `poly` has fewer distinct real roots
// than its degree.
struct NonrealPair {
  std::string poly;
  int real_roots = 0;
  int degree = 0;
};

// lambda_k, lambda_l nonzero with lambda_i = 0 and k < i < l.
struct SignGap {
  long k = 0, i = 0, l = 0;
};

// lambda_same * lambda_{same+1} > 0 and lambda_flip * lambda_{flip+1} < 0:
// the entries neither keep one sign nor alternate.
struct MixedSigns {
  long same = 0, flip = 0;
};

// (normalized) lambda_n > lambda_{n+1}.
struct Decrease {
  long n = 0;
};

struct TrivialK {
  long k = 0;
};

struct ConsistencyBound {
  int cap = 0;
};

struct Witness {
  BasisId basis = BasisId::monomial();
  Counterexample counterexample;
};

// Hermite acceptance: the normalized sequence is nonnegative, its Q has all
// roots in (-inf, 0], and lambda_{n+1} - lambda_n >= 0 on every integer n >= 0.
struct HermiteEvidence {
  RootLocations classical;
  UniPoly difference;  // P(n+1) - P(n) of the normalized sequence
};

using Certificate = std::variant<RootLocations, OffendingRoot, NonrealPair, SignGap, MixedSigns,
                                 Decrease, TrivialK, ConsistencyBound, Witness, HermiteEvidence>;

struct Verdict {
  Status status = Status::kUndetermined;
  Reason reason = Reason::kPrefixConsistent;
  Certificate certificate = ConsistencyBound{};
};

// How a Hermite classification rewrote the sequence before testing it.
struct SignNormalization {
  bool alternate = false;  // lambda_n -> (-1)^n lambda_n
  bool negate = false;     // lambda_n -> -lambda_n
  std::string to_string() const;
};

struct ClassificationReport {
  BasisId basis = BasisId::monomial();
  SequenceSpec sequence = SequenceSpec::poly(UniPoly{});
  Verdict verdict;
  SignNormalization normalization;
  std::optional<UniPoly> p;  // Laguerre
  std::optional<UniPoly> q;  // classical and Hermite (of the normalized sequence)
};

struct ClassifyOptions {
  Rational tolerance = default_isolation_tolerance();
  // Degree cap for bounded tests on explicit lists; -1 picks
  // min(list length - 1, kDefaultBoundedCap).
  int degree_cap = -1;
};

inline constexpr int kDefaultBoundedCap = 6;
inline constexpr int kMaxBoundedCap = 10;

ClassificationReport classify_laguerre(const SequenceSpec& s, const Rational& alpha,
                                       const ClassifyOptions& opts = {});
ClassificationReport classify_classical(const SequenceSpec& s, const ClassifyOptions& opts = {});
ClassificationReport classify_hermite(const SequenceSpec& s, const ClassifyOptions& opts = {});
ClassificationReport classify(const SequenceSpec& s, const BasisId& basis,
                              const ClassifyOptions& opts = {});

struct BoundedRejection {
  Reason reason;
  Certificate certificate;  // SignGap or Witness
};
struct Consistent {
  int cap = 0;
};
using BoundedResult = std::variant<BoundedRejection, Consistent>;

// Sound rejection harness for explicit lists: sign gaps in the known prefix,
// then the structured_family() images up to degree_cap. Throws kInvalidArgument
// for a polynomial sequence, kInsufficientPrefix when the list does not cover
// degree_cap, and "cap too large" above kMaxBoundedCap.
BoundedResult bounded_consistency_test(const SequenceSpec& s, const BasisId& basis, int degree_cap);

// First (k, i, l) gap among the known entries, if any.
std::optional<SignGap> find_sign_gap(const SequenceSpec& s);

// Signs of P(n) over all integers n >= 0 as a step function: entry (n, sign)
// holds from n up to the next entry. Decided exactly from the real roots of P.
std::vector<std::pair<long, int>> integer_sign_profile(const UniPoly& p);

}  // namespace multseq

#endif  // MULTSEQ_CLASSIFY_HPP_
