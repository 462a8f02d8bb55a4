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

#ifndef MULTSEQ_ROOTS_HPP_
#define MULTSEQ_ROOTS_HPP_

#include <utility>
#include <variant>
#include <vector>

#include "multseq/rational.hpp"
#include "multseq/unipoly.hpp"

namespace multseq {

// A closed rational interval holding exactly one distinct real root of some
// polynomial. lo == hi only when the root is that rational number; otherwise
// the square-free part is nonzero at both endpoints and changes sign across
// the interval.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

struct AllReals {};
struct ClosedInterval {
  Rational lo;
  Rational hi;
};
using RootRange = std::variant<AllReals, ClosedInterval>;

// Sturm chain of the square-free part of a nonzero polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const UniPoly& square_free() const { return chain_.front(); }
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // Distinct real roots in the half-open interval (a, b].
  int count_half_open(const Rational& a, const Rational& b) const;
  int count_all() const;

 private:
  static int count_sign_changes(const std::vector<int>& signs);

  std::vector<UniPoly> chain_;
};

// Cauchy bound: every complex root r of p satisfies |r| < root_bound(p).
// Requires deg p >= 1.
Rational root_bound(const UniPoly& p);

// Number of distinct real roots of p in the range. Closed intervals count
// their endpoints. Throws ErrorCode::kZeroPolynomial for p == 0.
int count_real_roots(const UniPoly& p, const RootRange& range = AllReals{});

// Every complex root is real. Constants (including zero) are real-rooted.
bool is_real_rooted(const UniPoly& p);

// (distinct real roots, degree) of the square-free part of p. p nonzero.
std::pair<int, int> real_root_deficit(const UniPoly& p);

// p is real-rooted and every real root lies in [a, b]. Nonzero constants
// qualify vacuously. Throws for p == 0 or a > b.
bool zeros_within(const UniPoly& p, const Rational& a, const Rational& b);

enum class Semidefinite { kNonnegative, kNonpositive, kIndefinite, kZero };
const char* to_string(Semidefinite s);

// Exact sign behaviour of p over the whole real line.
Semidefinite sign_semidefinite_on_reals(const UniPoly& p);

inline Rational default_isolation_tolerance() { return pow2_neg(30); }

// One interval per distinct real root, sorted increasingly and pairwise
// disjoint, each of width <= tolerance. Rational roots come back as exact
// point intervals. Throws ErrorCode::kZeroPolynomial for p == 0.
std::vector<IsolatingInterval> isolate_real_roots(
    const UniPoly& p, const Rational& tolerance = default_isolation_tolerance());

// Shrinks `iv` (an interval of `square_free`) so that `point` is not in its
// interior. If the root equals `point` the result is the point interval.
IsolatingInterval separate_from(const UniPoly& square_free, IsolatingInterval iv,
                                const Rational& point);

// Narrows an interval of `square_free` by bisection until its width is at
// most `tolerance`.
IsolatingInterval refine(const UniPoly& square_free, IsolatingInterval iv,
                         const Rational& tolerance);

}  // namespace multseq

#endif  // MULTSEQ_ROOTS_HPP_
