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

#include "multseq/classify.hpp"

#include <algorithm>
#include <set>

#include "multseq/error.hpp"

namespace multseq {

namespace {

bool outside(const IsolatingInterval& iv, const RootRangeSpec& range) {
  if (range.lo && iv.hi < *range.lo) return true;
  return iv.lo > range.hi;
}

bool inside(const IsolatingInterval& iv, const RootRangeSpec& range) {
  return (!range.lo || iv.lo >= *range.lo) && iv.hi <= range.hi;
}

// Zeros of a nonzero polynomial against a closed range. Endpoints are split
// off each interval first so every interval ends up inside or outside.
Verdict locate(const UniPoly& poly, const std::string& name, const RootRangeSpec& range,
               const Rational& tol) {
  if (poly.is_constant()) {
    return {Status::kYes, Reason::kRootsInRange, RootLocations{name, range, {}}};
  }
  const auto [real, degree] = real_root_deficit(poly);
  if (real < degree) {
    return {Status::kNo, Reason::kNonrealRoots, NonrealPair{name, real, degree}};
  }
  const UniPoly sf = square_free_part(poly);
  std::vector<IsolatingInterval> roots = isolate_real_roots(poly, tol);
  for (auto& iv : roots) {
    if (range.lo) iv = separate_from(sf, iv, *range.lo);
    iv = separate_from(sf, iv, range.hi);
    if (outside(iv, range)) {
      return {Status::kNo, Reason::kRootOutsideRange, OffendingRoot{name, range, iv}};
    }
    if (!inside(iv, range)) throw Error(ErrorCode::kInternal, "root straddles range endpoint");
  }
  return {Status::kYes, Reason::kRootsInRange, RootLocations{name, range, std::move(roots)}};
}

Verdict trivial_verdict(long k) { return {Status::kYes, Reason::kTrivial, TrivialK{k}}; }

int resolve_cap(const ExplicitList& l, int requested) {
  if (requested >= 0) return requested;
  const int avail = static_cast<int>(l.values.size()) - 1;
  return l.complete ? kDefaultBoundedCap : std::min(avail, kDefaultBoundedCap);
}

Verdict from_bounded(const BoundedResult& r) {
  if (const auto* rej = std::get_if<BoundedRejection>(&r)) {
    return {Status::kNo, rej->reason, rej->certificate};
  }
  return {Status::kUndetermined, Reason::kPrefixConsistent,
          ConsistencyBound{std::get<Consistent>(r).cap}};
}

Verdict list_verdict(const SequenceSpec& s, const BasisId& basis, const ClassifyOptions& opts) {
  const Triviality t = is_trivial(s);
  if (t.kind == Triviality::Kind::kTrivial) return trivial_verdict(t.k);
  return from_bounded(bounded_consistency_test(s, basis, resolve_cap(s.as_list(), opts.degree_cap)));
}

void require_nonzero_list(const SequenceSpec& s) {
  if (s.is_list() && s.as_list().values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty list");
  }
}

std::optional<SignGap> gap_in_profile(const std::vector<std::pair<long, int>>& prof) {
  std::optional<long> k, i;
  for (const auto& [n, sg] : prof) {
    if (!k) {
      if (sg != 0) k = n;
    } else if (!i) {
      if (sg == 0) i = n;
    } else if (sg != 0) {
      return SignGap{*k, *i, n};
    }
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::kYes:
      return "yes";
    case Status::kNo:
      return "no";
    case Status::kUndetermined:
      return "undetermined";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::kTrivial:
      return "trivial sequence";
    case Reason::kRootsInRange:
      return "real-rooted with all zeros in range";
    case Reason::kRootOutsideRange:
      return "zero outside range";
    case Reason::kNonrealRoots:
      return "nonreal zeros";
    case Reason::kHermiteAccepted:
      return "nonnegative, nondecreasing, classical multiplier sequence";
    case Reason::kNotClassical:
      return "not a classical multiplier sequence";
    case Reason::kDecreasing:
      return "decreasing step";
    case Reason::kSignGap:
      return "zero between nonzero entries";
    case Reason::kMixedSigns:
      return "signs neither constant nor alternating";
    case Reason::kImageNotRealRooted:
      return "image of a real-rooted polynomial is not real-rooted";
    case Reason::kPrefixConsistent:
      return "prefix passes bounded checks";
  }
  return "?";
}

std::string SignNormalization::to_string() const {
  if (alternate && negate) return "alternate,negate";
  if (alternate) return "alternate";
  if (negate) return "negate";
  return "none";
}

std::optional<SignGap> find_sign_gap(const SequenceSpec& s) {
  if (s.is_poly()) return gap_in_profile(integer_sign_profile(s.as_poly().p));
  const auto& v = s.as_list().values;
  std::vector<std::pair<long, int>> prof;
  for (size_t n = 0; n < v.size(); ++n) prof.emplace_back(static_cast<long>(n), sgn(v[n]));
  return gap_in_profile(prof);
}

std::vector<std::pair<long, int>> integer_sign_profile(const UniPoly& p) {
  if (p.is_zero()) return {{0, 0}};
  // Integers near each root, plus 0. Between neighbourhoods P keeps one sign,
  // which its value at the start of the stretch already shows.
  std::set<long> pts{0};
  if (!p.is_constant()) {
    for (const auto& iv : isolate_real_roots(p)) {
      const long a = floor(iv.lo).get_si() - 1;
      const long b = ceil(iv.hi).get_si() + 1;
      if (b < 0) continue;
      for (long n = std::max(a, 0L); n <= b; ++n) pts.insert(n);
    }
  }
  std::vector<std::pair<long, int>> out;
  for (long n : pts) out.emplace_back(n, sgn(p(Rational(n))));
  return out;
}

BoundedResult bounded_consistency_test(const SequenceSpec& s, const BasisId& basis,
                                       int degree_cap) {
  if (!s.is_list()) {
    throw Error(ErrorCode::kInvalidArgument, "bounded test requires an explicit list");
  }
  if (degree_cap < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree cap");
  if (degree_cap > kMaxBoundedCap) throw Error(ErrorCode::kInvalidArgument, "cap too large");
  if (!s.known(degree_cap)) {
    throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix for degree cap " +
                                                    std::to_string(degree_cap));
  }
  if (auto gap = find_sign_gap(s)) return BoundedRejection{Reason::kSignGap, *gap};
  const DiagonalOperator op(s, basis, degree_cap);
  for (const auto& f : structured_family(basis, degree_cap)) {
    if (auto ce = check_image(op, f)) {
      return BoundedRejection{Reason::kImageNotRealRooted, Witness{basis, std::move(*ce)}};
    }
  }
  return Consistent{degree_cap};
}

ClassificationReport classify_laguerre(const SequenceSpec& s, const Rational& alpha,
                                       const ClassifyOptions& opts) {
  require_nonzero_list(s);
  ClassificationReport rep;
  rep.basis = BasisId::laguerre(alpha);
  rep.sequence = s;
  if (s.is_list()) {
    rep.verdict = list_verdict(s, rep.basis, opts);
    return rep;
  }
  const Triviality t = is_trivial(s);
  if (t.kind == Triviality::Kind::kTrivial) {
    rep.verdict = trivial_verdict(t.k);
    return rep;
  }
  rep.p = build_p(s, alpha);
  rep.verdict = locate(*rep.p, "p", {Rational(-1), Rational(0)}, opts.tolerance);
  return rep;
}

ClassificationReport classify_classical(const SequenceSpec& s, const ClassifyOptions& opts) {
  require_nonzero_list(s);
  ClassificationReport rep;
  rep.basis = BasisId::monomial();
  rep.sequence = s;
  if (s.is_list()) {
    rep.verdict = list_verdict(s, rep.basis, opts);
    return rep;
  }
  const Triviality t = is_trivial(s);
  if (t.kind == Triviality::Kind::kTrivial) {
    rep.verdict = trivial_verdict(t.k);
    return rep;
  }
  rep.q = build_classical_Q(s);
  rep.verdict = locate(*rep.q, "Q", {std::nullopt, Rational(0)}, opts.tolerance);
  return rep;
}

namespace {

// Sign pattern of the nonzero entries: one sign, alternating, or a witness
// that it is neither. Assumes no sign gap.
struct SignPattern {
  bool alternating = false;
  bool negative = false;
  std::optional<MixedSigns> mixed;
};

SignPattern pattern_of_list(const std::vector<Rational>& v) {
  std::optional<long> same, flip;
  for (size_t n = 0; n + 1 < v.size(); ++n) {
    const int a = sgn(v[n]) * sgn(v[n + 1]);
    if (a > 0 && !same) same = static_cast<long>(n);
    if (a < 0 && !flip) flip = static_cast<long>(n);
  }
  SignPattern out;
  if (same && flip) {
    out.mixed = MixedSigns{*same, *flip};
    return out;
  }
  out.alternating = flip.has_value();
  std::vector<Rational> w = v;
  if (out.alternating) {
    for (size_t n = 1; n < w.size(); n += 2) w[n] = -w[n];
  }
  out.negative = std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) <= 0; }) &&
                 std::any_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) < 0; });
  return out;
}

// A polynomial never alternates (it keeps one sign beyond its largest root),
// so the only question is whether it changes sign on the integers.
SignPattern pattern_of_poly(const UniPoly& p) {
  const auto prof = integer_sign_profile(p);
  std::optional<long> flip;
  for (size_t j = 0; j + 1 < prof.size(); ++j) {
    if (prof[j + 1].first == prof[j].first + 1 && prof[j].second * prof[j + 1].second < 0) {
      flip = prof[j].first;
      break;
    }
  }
  SignPattern out;
  if (flip) {
    out.mixed = MixedSigns{prof.back().first, *flip};
    return out;
  }
  out.negative = sgn(p.leading()) < 0;
  return out;
}

std::optional<long> first_decrease_list(const SequenceSpec& s) {
  const auto& l = s.as_list();
  const long last = static_cast<long>(l.values.size()) - (l.complete ? 0 : 1);
  for (long n = 0; n < last; ++n) {
    if (s.at(n) > s.at(n + 1)) return n;
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify_hermite(const SequenceSpec& s, const ClassifyOptions& opts) {
  require_nonzero_list(s);
  ClassificationReport rep;
  rep.basis = BasisId::hermite();
  rep.sequence = s;
  const Triviality t = is_trivial(s);
  if (t.kind == Triviality::Kind::kTrivial) {
    rep.verdict = trivial_verdict(t.k);
    return rep;
  }
  if (auto gap = find_sign_gap(s)) {
    rep.verdict = {Status::kNo, Reason::kSignGap, *gap};
    return rep;
  }
  const SignPattern pat =
      s.is_poly() ? pattern_of_poly(s.as_poly().p) : pattern_of_list(s.as_list().values);
  if (pat.mixed) {
    rep.verdict = {Status::kNo, Reason::kMixedSigns, *pat.mixed};
    return rep;
  }
  rep.normalization = {pat.alternating, pat.negative};
  SequenceSpec norm = pat.alternating ? s.alternated() : s;
  if (pat.negative) norm = norm.scaled(Rational(-1));

  if (norm.is_list()) {
    if (is_trivial(norm).kind == Triviality::Kind::kNontrivial) {
      if (auto n = first_decrease_list(norm)) {
        rep.verdict = {Status::kNo, Reason::kDecreasing, Decrease{*n}};
        return rep;
      }
    }
    const int cap = resolve_cap(norm.as_list(), opts.degree_cap);
    rep.verdict = from_bounded(bounded_consistency_test(norm, rep.basis, cap));
    if (rep.verdict.status == Status::kUndetermined) {
      rep.verdict = from_bounded(bounded_consistency_test(norm, BasisId::monomial(), cap));
    }
    return rep;
  }

  const ClassificationReport classical = classify_classical(norm, opts);
  rep.q = classical.q;
  if (classical.verdict.status != Status::kYes) {
    rep.verdict = {Status::kNo, Reason::kNotClassical, classical.verdict.certificate};
    return rep;
  }
  const UniPoly& P = norm.as_poly().p;
  const UniPoly diff = P.compose(UniPoly({Rational(1), Rational(1)}, P.var())) - P;
  for (const auto& [n, sg] : integer_sign_profile(diff)) {
    if (sg < 0) {
      rep.verdict = {Status::kNo, Reason::kDecreasing, Decrease{n}};
      return rep;
    }
  }
  RootLocations roots = std::get_if<RootLocations>(&classical.verdict.certificate)
                            ? std::get<RootLocations>(classical.verdict.certificate)
                            : RootLocations{"Q", {std::nullopt, Rational(0)}, {}};
  rep.verdict = {Status::kYes, Reason::kHermiteAccepted, HermiteEvidence{std::move(roots), diff}};
  return rep;
}

ClassificationReport classify(const SequenceSpec& s, const BasisId& basis,
                              const ClassifyOptions& opts) {
  switch (basis.kind()) {
    case BasisKind::kMonomial:
      return classify_classical(s, opts);
    case BasisKind::kLaguerre:
      return classify_laguerre(s, basis.alpha(), opts);
    case BasisKind::kHermite:
      return classify_hermite(s, opts);
  }
  throw Error(ErrorCode::kInternal, "unknown basis");
}

}  // namespace multseq
