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

#include "multseq/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "multseq/error.hpp"

namespace multseq {
namespace {

std::vector<Rational> parse_csv(const std::string& body, const std::string& whole) {
  std::vector<Rational> out;
  if (body.empty()) throw Error(ErrorCode::kParse, "empty value list in '" + whole + "'");
  size_t start = 0;
  while (true) {
    const size_t comma = body.find(',', start);
    const std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(tok));
    } catch (const Error&) {
      throw Error(ErrorCode::kParse, "malformed value '" + tok + "' in '" + whole + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_alpha(const Rational& alpha) {
  if (alpha <= -1) throw Error(ErrorCode::kDomain, "alpha out of range");
}

const UniPoly& require_poly(const SequenceSpec& s) {
  if (!s.is_poly()) throw Error(ErrorCode::kInvalidArgument, "requires polynomial-type sequence");
  return s.as_poly().p;
}

}  // namespace

SequenceSpec SequenceSpec::poly(UniPoly p) { return SequenceSpec(PolyInN{p.with_var("n")}); }

SequenceSpec SequenceSpec::list(std::vector<Rational> values, bool complete) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "explicit list must be nonempty");
  return SequenceSpec(ExplicitList{std::move(values), complete});
}

SequenceSpec SequenceSpec::parse(const std::string& text, bool complete) {
  if (text.rfind("poly:", 0) == 0) return poly(UniPoly(parse_csv(text.substr(5), text), "n"));
  if (text.rfind("list:", 0) == 0) return list(parse_csv(text.substr(5), text), complete);
  throw Error(ErrorCode::kParse, "sequence '" + text + "' must start with 'poly:' or 'list:'");
}

bool SequenceSpec::known(long n) const {
  if (n < 0) return false;
  if (is_poly()) return true;
  const auto& l = as_list();
  return l.complete || n < static_cast<long>(l.values.size());
}

Rational SequenceSpec::at(long n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative sequence index");
  if (is_poly()) return as_poly().p(Rational(n));
  const auto& l = as_list();
  if (n < static_cast<long>(l.values.size())) return l.values[static_cast<size_t>(n)];
  if (l.complete) return Rational(0);
  throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix: lambda_" + std::to_string(n) +
                                                  " is not part of the list");
}

std::optional<long> SequenceSpec::last_known() const {
  if (is_poly() || as_list().complete) return std::nullopt;
  return static_cast<long>(as_list().values.size()) - 1;
}

SequenceSpec SequenceSpec::scaled(const Rational& c) const {
  if (is_poly()) return poly(as_poly().p * c);
  auto values = as_list().values;
  for (auto& v : values) v *= c;
  return list(std::move(values), as_list().complete);
}

SequenceSpec SequenceSpec::alternated() const {
  if (is_poly()) {
    throw Error(ErrorCode::kInvalidArgument, "(-1)^n P(n) is not a polynomial sequence");
  }
  auto values = as_list().values;
  for (size_t i = 1; i < values.size(); i += 2) values[i] = -values[i];
  return list(std::move(values), as_list().complete);
}

std::string SequenceSpec::to_string() const {
  std::ostringstream os;
  const std::vector<Rational>* v = nullptr;
  std::vector<Rational> zero{Rational(0)};
  if (is_poly()) {
    os << "poly:";
    v = as_poly().p.is_zero() ? &zero : &as_poly().p.coeffs();
  } else {
    os << "list:";
    v = &as_list().values;
  }
  for (size_t i = 0; i < v->size(); ++i) os << (i ? "," : "") << multseq::to_string((*v)[i]);
  return os.str();
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
  if (a.is_poly() != b.is_poly()) return false;
  if (a.is_poly()) return a.as_poly().p == b.as_poly().p;
  return a.as_list().values == b.as_list().values && a.as_list().complete == b.as_list().complete;
}

DeltaCoefficients binomial_invert(const SequenceSpec& s, long upto) {
  DeltaCoefficients out;
  long last = upto;
  if (s.is_poly()) {
    last = s.as_poly().p.degree();
    out.exact_tail_known = true;
  } else if (upto < 0) {
    throw Error(ErrorCode::kInvalidArgument, "upto must be nonnegative");
  }
  if (!s.known(std::max(last, 0L)) && last >= 0) {
    throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix");
  }
  std::vector<Rational> lambda;
  for (long j = 0; j <= last; ++j) lambda.push_back(s.at(j));
  // In-place forward differences: after pass k, lambda[k] = a_k.
  for (long k = 1; k <= last; ++k) {
    for (long j = last; j >= k; --j) lambda[static_cast<size_t>(j)] -= lambda[static_cast<size_t>(j - 1)];
  }
  out.values = std::move(lambda);
  return out;
}

Rational lambda_from_delta(const DeltaCoefficients& a, long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative sequence index");
  const long have = static_cast<long>(a.values.size());
  if (n >= have && !a.exact_tail_known) {
    throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix: a_k unknown beyond k=" +
                                                    std::to_string(have - 1));
  }
  Rational out(0);
  Rational binom(1);  // C(n, k)
  for (long k = 0; k <= std::min(n, have - 1); ++k) {
    if (k > 0) {
      binom *= n - k + 1;
      binom /= k;
    }
    out += a.values[static_cast<size_t>(k)] * binom;
  }
  return out;
}

Triviality is_trivial(const SequenceSpec& s) {
  using Kind = Triviality::Kind;
  if (s.is_poly()) {
    if (s.as_poly().p.is_zero()) return {Kind::kTrivial, 0};
    return {Kind::kNontrivial, 0};
  }
  const auto& l = s.as_list();
  std::vector<long> nz;
  for (size_t i = 0; i < l.values.size(); ++i) {
    if (l.values[i] != 0) nz.push_back(static_cast<long>(i));
  }
  if (!nz.empty() && nz.back() - nz.front() > 1) return {Kind::kNontrivial, 0};
  if (!l.complete) return {Kind::kUndetermined, nz.empty() ? 0 : nz.front()};
  return {Kind::kTrivial, nz.empty() ? 0 : nz.front()};
}

UniPoly build_p(const SequenceSpec& s, const Rational& alpha) {
  require_poly(s);
  require_alpha(alpha);
  const auto a = binomial_invert(s, 0);
  std::vector<Rational> c(a.values.size());
  Rational binom(1);  // C(k+alpha, k) = prod_{j=1}^{k} (alpha+j)/j
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (k > 0) {
      binom *= alpha + static_cast<long>(k);
      binom /= static_cast<long>(k);
    }
    c[k] = binom * a.values[k];
  }
  return UniPoly(std::move(c), "y");
}

UniPoly build_classical_Q(const SequenceSpec& s) {
  require_poly(s);
  const auto a = binomial_invert(s, 0);
  std::vector<Rational> c(a.values.size());
  Rational fact(1);
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    c[k] = a.values[k] / fact;
  }
  return UniPoly(std::move(c), "y");
}

std::vector<Rational> strs_coefficients(const SequenceSpec& s, const Rational& alpha, long upto) {
  require_alpha(alpha);
  if (upto < 0) throw Error(ErrorCode::kInvalidArgument, "upto must be nonnegative");
  if (!s.known(upto)) throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix");
  std::vector<Rational> out(static_cast<size_t>(upto) + 1);
  for (long n = 0; n <= upto; ++n) {
    const Rational weight = s.at(n) * binomial(alpha + n, n);
    if (weight == 0) continue;
    // y^n (1+y)^(-n-alpha-1) = sum_j C(-n-alpha-1, j) y^(n+j)
    const Rational exponent = -alpha - n - 1;
    Rational binom(1);
    for (long j = 0; n + j <= upto; ++j) {
      if (j > 0) {
        binom *= exponent - (j - 1);
        binom /= j;
      }
      out[static_cast<size_t>(n + j)] += weight * binom;
    }
  }
  return out;
}

long default_series_order(const SequenceSpec& s) {
  const long deg = s.is_poly() ? s.as_poly().p.degree() : static_cast<long>(s.as_list().values.size()) - 1;
  return std::max(deg + 4, 8L);
}

}  // namespace multseq
