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

#ifndef MULTSEQ_RATIONAL_HPP_
#define MULTSEQ_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace multseq {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, reduced, zero is 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or an integer literal (optional leading sign). Rejects
// whitespace, zero denominators and anything else with ErrorCode::kParse.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!, exact for
// rational `top`. Returns 0 for k < 0.
Rational binomial(const Rational& top, long k);

Rational factorial(long n);

// 2^-bits as an exact rational.
Rational pow2_neg(unsigned bits);

// The rational with the smallest denominator (then smallest absolute
// numerator) in the closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace multseq

#endif  // MULTSEQ_RATIONAL_HPP_
