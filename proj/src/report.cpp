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

#include "multseq/report.hpp"

#include <algorithm>

#include "multseq/error.hpp"
#include "multseq/orthobasis.hpp"
#include "multseq/roots.hpp"

namespace multseq {

namespace {

Json range_json(const RootRangeSpec& r) {
  Json j;
  j["lo"] = r.lo ? Json(to_string(*r.lo)) : Json(nullptr);
  j["hi"] = to_string(r.hi);
  return j;
}

Json basis_fields(Json j, const BasisId& b) {
  j["basis"] = std::string(b.name());
  if (b.has_alpha()) j["alpha"] = to_string(b.alpha());
  return j;
}

Json bipoly_json(const BiPoly& b) {
  Json out = Json::array();
  for (const auto& [k, c] : b.terms()) out.push_back(Json::array({k.first, k.second, to_string(c)}));
  return out;
}

}  // namespace

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json coeff_list(const UniPoly& p) { return rational_list(p.coeffs()); }

Json sequence_json(const SequenceSpec& s) {
  Json j;
  if (s.is_poly()) {
    j["kind"] = "poly";
    j["coeffs"] = coeff_list(s.as_poly().p);
  } else {
    j["kind"] = "list";
    j["values"] = rational_list(s.as_list().values);
    j["complete"] = s.as_list().complete;
  }
  return j;
}

Json interval_json(const IsolatingInterval& iv) {
  Json j;
  j["lo"] = to_string(iv.lo);
  j["hi"] = to_string(iv.hi);
  j["mult"] = iv.multiplicity;
  return j;
}

Json counterexample_json(const Counterexample& ce) {
  Json j;
  j["label"] = ce.input.label;
  j["input"] = coeff_list(ce.input.poly);
  j["input_roots"] = rational_list(ce.input.roots);
  j["image"] = coeff_list(ce.image);
  j["real_roots"] = ce.real_roots;
  j["degree"] = ce.degree;
  return j;
}

namespace {

Json root_locations_json(const RootLocations& c) {
  Json j;
  j["type"] = "root-locations";
  j["poly"] = c.poly;
  j["range"] = range_json(c.range);
  j["roots"] = Json::array();
  for (const auto& iv : c.roots) j["roots"].push_back(interval_json(iv));
  return j;
}

struct CertificateWriter {
  Json operator()(const RootLocations& c) const { return root_locations_json(c); }
  Json operator()(const OffendingRoot& c) const {
    return {{"type", "offending-root"}, {"poly", c.poly}, {"range", range_json(c.range)},
            {"root", interval_json(c.root)}};
  }
  Json operator()(const NonrealPair& c) const {
    return {{"type", "nonreal-pair"}, {"poly", c.poly}, {"real_roots", c.real_roots},
            {"degree", c.degree}};
  }
  Json operator()(const SignGap& c) const {
    return {{"type", "sign-gap"}, {"k", c.k}, {"i", c.i}, {"l", c.l}};
  }
  Json operator()(const MixedSigns& c) const {
    return {{"type", "mixed-signs"}, {"same", c.same}, {"flip", c.flip}};
  }
  Json operator()(const Decrease& c) const { return {{"type", "monotonicity"}, {"n", c.n}}; }
  Json operator()(const TrivialK& c) const { return {{"type", "trivial"}, {"k", c.k}}; }
  Json operator()(const ConsistencyBound& c) const {
    return {{"type", "consistency-bound"}, {"cap", c.cap}};
  }
  Json operator()(const Witness& c) const {
    Json j = basis_fields({{"type", "witness"}}, c.basis);
    j["counterexample"] = counterexample_json(c.counterexample);
    return j;
  }
  Json operator()(const HermiteEvidence& c) const {
    return {{"type", "hermite"}, {"classical", root_locations_json(c.classical)},
            {"difference", coeff_list(c.difference)}};
  }
};

}  // namespace

Json certificate_json(const Certificate& c) { return std::visit(CertificateWriter{}, c); }

Json classify_report(const ClassificationReport& r) {
  Json j = basis_fields({{"verb", "classify"}}, r.basis);
  j["sequence"] = sequence_json(r.sequence);
  j["verdict"] = to_string(r.verdict.status);
  j["reason"] = to_string(r.verdict.reason);
  if (r.basis.kind() == BasisKind::kHermite) j["normalization"] = r.normalization.to_string();
  j["certificate"] = certificate_json(r.verdict.certificate);
  Json derived = Json::object();
  if (r.p) derived["p"] = coeff_list(*r.p);
  if (r.q) derived["Q"] = coeff_list(*r.q);
  j["derived"] = derived;
  return j;
}

Json verify_report(const ClassificationReport& r, const FuzzConfig& cfg,
                   const PreservationResult& fuzz) {
  Json j = classify_report(r);
  j["verb"] = "verify";
  j["seed"] = cfg.seed;
  j["max_degree"] = cfg.max_degree;
  if (const auto* f = std::get_if<PreservationFailure>(&fuzz)) {
    j["fuzz"] = "failed";
    j["trials"] = f->trial + 1;
    j["counterexample"] = counterexample_json(f->counterexample);
  } else {
    j["fuzz"] = "all-passed";
    j["trials"] = std::get<AllPassed>(fuzz).trials;
  }
  return j;
}

Json apply_report(const SequenceSpec& s, const BasisId& basis, const UniPoly& input,
                  const UniPoly& image) {
  Json j = basis_fields({{"verb", "apply"}}, basis);
  j["sequence"] = sequence_json(s);
  j["input"] = coeff_list(input);
  j["image"] = coeff_list(image);
  j["input_real_rooted"] = is_real_rooted(input);
  j["image_real_rooted"] = is_real_rooted(image);
  return j;
}

Json symbol_report(const SequenceSpec& s, const BasisId& basis, int order) {
  Json j = basis_fields({{"verb", "symbol"}}, basis);
  j["sequence"] = sequence_json(s);
  j["order"] = order;
  switch (basis.kind()) {
    case BasisKind::kLaguerre: {
      const auto a = symbol_basis_form(s, basis.alpha(), order);
      const auto b = symbol_p_form(s, basis.alpha(), order);
      j["basis_form"] = bipoly_json(a.grid);
      j["p_form"] = bipoly_json(b.grid);
      j["forms_agree"] = a.grid == b.grid;
      break;
    }
    case BasisKind::kHermite:
      j["hermite_symbol"] = bipoly_json(hermite_symbol(s, order).grid);
      break;
    case BasisKind::kMonomial:
      throw Error(ErrorCode::kInvalidArgument, "symbol needs the laguerre or hermite basis");
  }
  return j;
}

// ---------------------------------------------------------------------------
// certify

namespace {

struct Invalid {
  std::string what;
};

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, "malformed report: " + what);
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Invalid{what};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field ") + key);
  return j.at(key);
}

std::string str(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string(key) + " is not a string");
  return v.get<std::string>();
}

long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string(key) + " is not an integer");
  return v.get<long>();
}

Rational rat(const Json& v) {
  if (!v.is_string()) malformed("rational is not a string");
  return parse_rational(v.get<std::string>());
}

std::vector<Rational> rats(const Json& v) {
  if (!v.is_array()) malformed("expected an array");
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(rat(e));
  return out;
}

UniPoly poly(const Json& v, const char* var = "x") { return UniPoly(rats(v), var); }

BasisId basis_of(const Json& j) {
  const std::string name = str(j, "basis");
  if (name == "laguerre") return BasisId::laguerre(rat(field(j, "alpha")));
  if (name == "hermite") return BasisId::hermite();
  if (name == "monomial") return BasisId::monomial();
  malformed("unknown basis " + name);
}

SequenceSpec sequence_of(const Json& j) {
  const Json& s = field(j, "sequence");
  const std::string kind = str(s, "kind");
  if (kind == "poly") return SequenceSpec::poly(UniPoly(rats(field(s, "coeffs")), "n"));
  if (kind == "list") {
    const Json& c = field(s, "complete");
    if (!c.is_boolean()) malformed("complete is not a boolean");
    return SequenceSpec::list(rats(field(s, "values")), c.get<bool>());
  }
  malformed("unknown sequence kind " + kind);
}

// lambda_n straight from the stored form.
Rational lambda(const SequenceSpec& s, long n) {
  if (s.is_list()) return s.at(n);
  Rational acc(0), pw(1);
  for (const auto& c : s.as_poly().p.coeffs()) {
    acc += c * pw;
    pw *= n;
  }
  return acc;
}

// a_k = sum_j (-1)^{k-j} C(k,j) lambda_j
std::vector<Rational> deltas(const SequenceSpec& s) {
  const long deg = s.as_poly().p.degree();
  std::vector<Rational> out;
  for (long k = 0; k <= deg; ++k) {
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
      const Rational term = binomial(Rational(k), j) * lambda(s, j);
      acc += ((k - j) % 2 == 0) ? term : Rational(-term);
    }
    out.push_back(acc);
  }
  return out;
}

UniPoly recompute_p(const SequenceSpec& s, const Rational& alpha) {
  auto a = deltas(s);
  for (size_t k = 0; k < a.size(); ++k) a[k] *= binomial(alpha + static_cast<long>(k), k);
  return UniPoly(std::move(a), "y");
}

UniPoly recompute_q(const SequenceSpec& s) {
  auto a = deltas(s);
  for (size_t k = 0; k < a.size(); ++k) a[k] /= factorial(static_cast<long>(k));
  return UniPoly(std::move(a), "y");
}

IsolatingInterval interval_of(const Json& j) {
  IsolatingInterval iv{rat(field(j, "lo")), rat(field(j, "hi")),
                       static_cast<int>(integer(j, "mult"))};
  return iv;
}

RootRangeSpec range_of(const Json& j) {
  const Json& lo = field(j, "lo");
  RootRangeSpec r;
  if (!lo.is_null()) r.lo = rat(lo);
  r.hi = rat(field(j, "hi"));
  return r;
}

// Exactly one distinct root of p in [lo, hi], of the stated multiplicity.
void check_root(const UniPoly& p, const IsolatingInterval& iv) {
  check(iv.lo <= iv.hi, "interval has lo > hi");
  check(iv.multiplicity >= 1, "multiplicity below 1");
  const UniPoly sf = square_free_part(p);
  if (iv.exact()) {
    check(p(iv.lo) == 0, "exact root does not vanish");
  } else {
    check(sgn(sf(iv.lo)) * sgn(sf(iv.hi)) < 0, "no sign change across interval");
    check(count_real_roots(sf, ClosedInterval{iv.lo, iv.hi}) == 1, "interval holds several roots");
  }
  // The root is shared with p^(j) exactly for j < multiplicity.
  UniPoly d = p;
  for (int j = 1; j <= iv.multiplicity; ++j) {
    d = d.derivative();
    const UniPoly g = gcd(p, d);
    const bool shared = !g.is_constant() && count_real_roots(g, ClosedInterval{iv.lo, iv.hi}) > 0;
    check(shared == (j < iv.multiplicity), "wrong multiplicity");
  }
}

bool in_range(const IsolatingInterval& iv, const RootRangeSpec& r) {
  return (!r.lo || iv.lo >= *r.lo) && iv.hi <= r.hi;
}

bool off_range(const IsolatingInterval& iv, const RootRangeSpec& r) {
  return (r.lo && iv.hi < *r.lo) || iv.lo > r.hi;
}

void check_root_locations(const Json& c, const UniPoly& p, const RootRangeSpec& expected) {
  const RootRangeSpec range = range_of(field(c, "range"));
  check(range.lo == expected.lo && range.hi == expected.hi, "unexpected root range");
  const Json& roots = field(c, "roots");
  if (!roots.is_array()) malformed("roots is not an array");
  std::vector<IsolatingInterval> ivs;
  for (const auto& r : roots) ivs.push_back(interval_of(r));
  int total = 0;
  for (size_t i = 0; i < ivs.size(); ++i) {
    check_root(p, ivs[i]);
    check(in_range(ivs[i], range), "root interval leaves the range");
    for (size_t k = 0; k < i; ++k) {
      check(ivs[k].hi < ivs[i].lo || ivs[i].hi < ivs[k].lo, "root intervals overlap");
    }
    total += ivs[i].multiplicity;
  }
  check(total == std::max(p.degree(), 0), "multiplicities do not account for every root");
}

void check_witness(const Json& c, const SequenceSpec& s, const BasisId& basis) {
  const Json& ce = field(c, "counterexample");
  const UniPoly input = poly(field(ce, "input"));
  check(!input.is_zero() && is_real_rooted(input), "witness input is not real-rooted");
  const std::vector<Rational> roots = rats(field(ce, "input_roots"));
  if (!roots.empty()) {
    UniPoly prod = UniPoly::constant(input.leading());
    for (const auto& r : roots) prod = prod * UniPoly::linear_factor(r);
    check(prod == input, "witness roots do not match its coefficients");
  }
  // T(sum c_n P_n) = sum lambda_n c_n P_n
  const int deg = input.degree();
  const BasisTable table(basis, deg + 1);
  const auto coeffs = table.expand(input);
  UniPoly image;
  for (int n = 0; n <= deg; ++n) {
    check(s.known(n), "witness exceeds the known prefix");
    image = image + table[n] * (coeffs.coefficients[static_cast<size_t>(n)] * lambda(s, n));
  }
  check(image == poly(field(ce, "image")), "witness image does not match");
  check(!image.is_zero() && !is_real_rooted(image), "witness image is real-rooted");
  const auto [real, degree] = real_root_deficit(image);
  check(real == integer(ce, "real_roots") && degree == integer(ce, "degree"),
        "witness root counts do not match");
}

bool list_nonzero(const SequenceSpec& s, long n) { return s.known(n) && lambda(s, n) != 0; }

// Hermite checks run on the sign-normalized sequence named by the report.
SequenceSpec normalized(const Json& j, const SequenceSpec& s) {
  if (!j.contains("normalization")) return s;
  const std::string n = str(j, "normalization");
  SequenceSpec out = s;
  if (n == "alternate" || n == "alternate,negate") out = out.alternated();
  if (n == "negate" || n == "alternate,negate") out = out.scaled(Rational(-1));
  if (n != "none" && n != "alternate" && n != "negate" && n != "alternate,negate") {
    malformed("unknown normalization " + n);
  }
  return out;
}

// P(n) >= 0 for every integer n >= 0.
bool nonnegative_on_naturals(const UniPoly& p) {
  if (p.is_zero()) return true;
  if (p.degree() < 1) return sgn(p.leading()) >= 0;
  if (sgn(p.leading()) < 0) return false;
  const Rational bound = root_bound(p);
  const long last = ceil(bound).get_si();
  check(last < 1000000, "root bound too large to scan");
  for (long n = 0; n <= last; ++n) {
    if (sgn(p(Rational(n))) < 0) return false;
  }
  return true;
}

void check_trivial(const SequenceSpec& s, long k) {
  if (s.is_poly()) {
    check(s.as_poly().p.is_zero(), "nonzero polynomial sequence is not trivial");
    return;
  }
  const auto& l = s.as_list();
  check(l.complete, "trivial claim on an incomplete list");
  for (size_t n = 0; n < l.values.size(); ++n) {
    const long m = static_cast<long>(n);
    check(l.values[n] == 0 || m == k || m == k + 1, "nonzero entry outside {k, k+1}");
  }
}

void check_classification(const Json& j) {
  const BasisId basis = basis_of(j);
  const SequenceSpec s = sequence_of(j);
  const std::string verdict = str(j, "verdict");
  const Json& c = field(j, "certificate");
  const std::string type = str(c, "type");
  const Json& derived = field(j, "derived");

  const bool hermite = basis.kind() == BasisKind::kHermite;
  const SequenceSpec norm = hermite ? normalized(j, s) : s;

  // Derived objects must be reproducible from the sequence alone.
  std::optional<UniPoly> p, q;
  if (derived.contains("p")) {
    check(s.is_poly() && basis.kind() == BasisKind::kLaguerre, "unexpected derived p");
    p = recompute_p(s, basis.alpha());
    check(*p == poly(derived["p"]), "derived p does not match the sequence");
  }
  if (derived.contains("Q")) {
    check(norm.is_poly(), "unexpected derived Q");
    q = recompute_q(norm);
    check(*q == poly(derived["Q"]), "derived Q does not match the sequence");
  }
  auto target = [&](const Json& cert) -> const UniPoly& {
    const std::string name = str(cert, "poly");
    if (name == "p" && p) return *p;
    if (name == "Q" && q) return *q;
    throw Invalid{"certificate names a polynomial the report does not derive"};
  };
  auto expected_range = [&](const std::string& name) -> RootRangeSpec {
    if (name == "p") return {Rational(-1), Rational(0)};
    return {std::nullopt, Rational(0)};
  };

  if (type == "trivial") {
    check(verdict == "yes", "trivial certificate on a non-yes verdict");
    check_trivial(s, integer(c, "k"));
  } else if (type == "root-locations") {
    check(verdict == "yes", "root locations on a non-yes verdict");
    check(!hermite, "root locations without Hermite evidence");
    check_root_locations(c, target(c), expected_range(str(c, "poly")));
  } else if (type == "offending-root") {
    check(verdict == "no", "offending root on a non-no verdict");
    const UniPoly& t = target(c);
    const RootRangeSpec range = range_of(field(c, "range"));
    const RootRangeSpec want = expected_range(str(c, "poly"));
    check(range.lo == want.lo && range.hi == want.hi, "unexpected root range");
    const IsolatingInterval iv = interval_of(field(c, "root"));
    check_root(t, iv);
    check(off_range(iv, range), "offending root is not outside the range");
  } else if (type == "nonreal-pair") {
    check(verdict == "no", "nonreal pair on a non-no verdict");
    const auto [real, degree] = real_root_deficit(target(c));
    check(real == integer(c, "real_roots") && degree == integer(c, "degree"),
          "root counts do not match");
    check(real < degree, "no nonreal roots");
  } else if (type == "sign-gap") {
    check(verdict == "no", "sign gap on a non-no verdict");
    const long k = integer(c, "k"), i = integer(c, "i"), l = integer(c, "l");
    check(0 <= k && k < i && i < l, "gap indices out of order");
    check(list_nonzero(s, k) && list_nonzero(s, l), "gap ends are not nonzero");
    check(s.known(i) && lambda(s, i) == 0, "gap middle is not zero");
  } else if (type == "mixed-signs") {
    check(verdict == "no" && hermite, "mixed signs outside a Hermite rejection");
    const long a = integer(c, "same"), b = integer(c, "flip");
    check(a >= 0 && b >= 0 && s.known(a + 1) && s.known(b + 1), "mixed-sign indices unknown");
    check(sgn(lambda(s, a)) * sgn(lambda(s, a + 1)) > 0, "no same-sign pair");
    check(sgn(lambda(s, b)) * sgn(lambda(s, b + 1)) < 0, "no sign flip");
  } else if (type == "monotonicity") {
    check(verdict == "no" && hermite, "monotonicity outside a Hermite rejection");
    const long n = integer(c, "n");
    check(n >= 0 && norm.known(n + 1), "monotonicity index unknown");
    check(lambda(norm, n) > lambda(norm, n + 1), "no decrease at index");
  } else if (type == "consistency-bound") {
    check(verdict == "undetermined" && s.is_list(), "consistency bound on a decided verdict");
    const int cap = static_cast<int>(integer(c, "cap"));
    check(std::holds_alternative<Consistent>(bounded_consistency_test(norm, basis, cap)),
          "prefix fails the bounded test");
  } else if (type == "witness") {
    check(verdict == "no", "witness on a non-no verdict");
    const BasisId wb = basis_of(c);
    if (hermite) {
      check(wb == basis || wb == BasisId::monomial(), "witness basis mismatch");
    } else {
      check(wb == basis, "witness basis mismatch");
    }
    check_witness(c, norm, wb);
  } else if (type == "hermite") {
    check(verdict == "yes" && hermite && norm.is_poly() && q, "Hermite evidence out of place");
    const UniPoly& P = norm.as_poly().p;
    check_root_locations(field(c, "classical"), *q, {std::nullopt, Rational(0)});
    check(nonnegative_on_naturals(P), "normalized sequence takes a negative value");
    const UniPoly diff = poly(field(c, "difference"));
    for (long n = 0; n <= P.degree() + 1; ++n) {
      check(diff(Rational(n)) == P(Rational(n + 1)) - P(Rational(n)), "difference does not match");
    }
    check(diff.degree() <= std::max(P.degree() - 1, 0), "difference has the wrong degree");
    check(nonnegative_on_naturals(diff), "sequence decreases somewhere");
  } else {
    malformed("unknown certificate type " + type);
  }
}

void check_verify(const Json& j) {
  check_classification(j);
  const std::string fuzz = str(j, "fuzz");
  if (fuzz == "failed") {
    Json c = basis_fields(Json::object(), basis_of(j));
    c["counterexample"] = field(j, "counterexample");
    check_witness(c, sequence_of(j), basis_of(j));
  } else if (fuzz != "all-passed") {
    malformed("unknown fuzz outcome " + fuzz);
  }
}

void check_apply(const Json& j) {
  const SequenceSpec s = sequence_of(j);
  const BasisId basis = basis_of(j);
  const UniPoly input = poly(field(j, "input"));
  UniPoly image;
  if (!input.is_zero()) {
    const BasisTable table(basis, input.degree() + 1);
    const auto coeffs = table.expand(input);
    for (int n = 0; n <= input.degree(); ++n) {
      image = image + table[n] * (coeffs.coefficients[static_cast<size_t>(n)] * lambda(s, n));
    }
  }
  check(image == poly(field(j, "image")), "image does not match");
  check(field(j, "input_real_rooted") == is_real_rooted(input), "input real-rootedness flag");
  check(field(j, "image_real_rooted") == is_real_rooted(image), "image real-rootedness flag");
}

void check_symbol(const Json& j) {
  const Json fresh = symbol_report(sequence_of(j), basis_of(j), static_cast<int>(integer(j, "order")));
  for (const char* key : {"basis_form", "p_form", "forms_agree", "hermite_symbol"}) {
    check(j.contains(key) == fresh.contains(key), std::string("field set differs at ") + key);
    if (fresh.contains(key)) check(j[key] == fresh[key], std::string(key) + " does not match");
  }
}

}  // namespace

CertifyResult certify(const Json& report) {
  try {
    const std::string verb = str(report, "verb");
    if (verb == "classify") {
      check_classification(report);
    } else if (verb == "verify") {
      check_verify(report);
    } else if (verb == "apply") {
      check_apply(report);
    } else if (verb == "symbol") {
      check_symbol(report);
    } else {
      malformed("unknown verb " + verb);
    }
  } catch (const Invalid& e) {
    return {false, e.what};
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  return {true, "ok"};
}

}  // namespace multseq
