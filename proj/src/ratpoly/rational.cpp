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

#include "multseq/rational.hpp"

#include <cctype>

#include "multseq/error.hpp"

namespace multseq {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (den.empty() || den.front() == '-' || den.front() == '+' || !is_integer_literal(den)) {
      throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) {
      throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    }
    out = Rational(parse_integer(num), d);
    out.canonicalize();
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational binomial(const Rational& top, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long j = 0; j < k; ++j) {
    out *= top - j;
    out /= j + 1;
  }
  return out;
}

Rational factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational pow2_neg(unsigned bits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  return Rational(Integer(1), d);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "simplest_between: lo > hi");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent of the Stern-Brocot tree.
  const Integer fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac_lo = lo - fl;
  const Rational frac_hi = hi - fl;
  Rational inner = simplest_between(1 / frac_hi, 1 / frac_lo);
  return Rational(fl) + 1 / inner;
}

}  // namespace multseq
