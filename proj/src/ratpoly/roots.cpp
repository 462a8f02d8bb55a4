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

#include "multseq/roots.hpp"

#include <algorithm>
#include <stack>
#include <tuple>

#include "multseq/error.hpp"

namespace multseq {
namespace {

void require_nonzero(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "undefined for zero polynomial");
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

// Rational roots of a square-free polynomial with primitive integer leading
// coefficient D have denominators dividing D, so two of them are at least
// 1/D^2 apart. Below that width the simplest rational of an isolating
// interval is the only rational-root candidate.
Rational recovery_width(const UniPoly& square_free) {
  const UniPoly prim = square_free.primitive();
  const Integer d = abs(prim.leading().get_num());
  return Rational(Integer(1), d * d);
}

// Bisection on a sign-changing interval. Stops at an exact root, or once the
// width is below both `tolerance` and `recover_below` (after trying the
// simplest rational candidate once).
IsolatingInterval narrow(const UniPoly& sf, IsolatingInterval iv, const Rational& tolerance,
                         const Rational& recover_below) {
  if (iv.exact()) return iv;
  int sign_lo = sgn(sf(iv.lo));
  bool tried_rational = false;
  while (true) {
    const Rational width = iv.hi - iv.lo;
    if (!tried_rational && width < recover_below) {
      tried_rational = true;
      Rational s = simplest_between(iv.lo, iv.hi);
      if (sf(s) == 0) return {s, s, iv.multiplicity};
    }
    if (width <= tolerance && (tried_rational || recover_below == 0)) return iv;
    Rational m = midpoint(iv.lo, iv.hi);
    const int sm = sgn(sf(m));
    if (sm == 0) return {m, m, iv.multiplicity};
    if (sm == sign_lo) {
      iv.lo = std::move(m);
    } else {
      iv.hi = std::move(m);
    }
  }
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  require_nonzero(p);
  chain_.push_back(square_free_part(p).primitive());
  if (chain_.front().is_constant()) return;
  chain_.push_back(chain_.front().derivative().primitive());
  while (!chain_.back().is_constant()) {
    UniPoly r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(r.primitive());
  }
}

int SturmChain::count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sgn(q(x)));
  return count_sign_changes(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    const int s = sgn(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_sign_changes(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return count_sign_changes(signs);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::kInvalidArgument, "root bound needs a nonconstant polynomial");
  Rational m(0);
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / lc)));
  return m + 1;
}

int count_real_roots(const UniPoly& p, const RootRange& range) {
  require_nonzero(p);
  if (p.is_constant()) return 0;
  SturmChain chain(p);
  if (std::holds_alternative<AllReals>(range)) return chain.count_all();
  const auto& iv = std::get<ClosedInterval>(range);
  if (iv.lo > iv.hi) throw Error(ErrorCode::kInvalidArgument, "interval with lo > hi");
  const int at_lo = chain.square_free()(iv.lo) == 0 ? 1 : 0;
  return chain.count_half_open(iv.lo, iv.hi) + at_lo;
}

std::pair<int, int> real_root_deficit(const UniPoly& p) {
  require_nonzero(p);
  if (p.is_constant()) return {0, 0};
  SturmChain chain(p);
  return {chain.count_all(), chain.square_free().degree()};
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_constant()) return true;
  const auto [real, degree] = real_root_deficit(p);
  return real == degree;
}

bool zeros_within(const UniPoly& p, const Rational& a, const Rational& b) {
  require_nonzero(p);
  if (a > b) throw Error(ErrorCode::kInvalidArgument, "interval with lo > hi");
  if (p.is_constant()) return true;
  SturmChain chain(p);
  const int total = chain.count_all();
  if (total != chain.square_free().degree()) return false;
  const int at_a = chain.square_free()(a) == 0 ? 1 : 0;
  return chain.count_half_open(a, b) + at_a == total;
}

const char* to_string(Semidefinite s) {
  switch (s) {
    case Semidefinite::kNonnegative: return "nonnegative";
    case Semidefinite::kNonpositive: return "nonpositive";
    case Semidefinite::kIndefinite: return "indefinite";
    case Semidefinite::kZero: return "zero";
  }
  return "?";
}

Semidefinite sign_semidefinite_on_reals(const UniPoly& p) {
  if (p.is_zero()) return Semidefinite::kZero;
  if (!p.is_constant()) {
    // A sign change happens exactly at real roots of odd multiplicity.
    const auto factors = square_free_decomposition(p);
    for (size_t i = 0; i < factors.size(); i += 2) {
      if (!factors[i].is_constant() && SturmChain(factors[i]).count_all() > 0) {
        return Semidefinite::kIndefinite;
      }
    }
  }
  for (long k = 0;; ++k) {
    for (long x : {k, -k}) {
      const int s = sgn(p(Rational(x)));
      if (s > 0) return Semidefinite::kNonnegative;
      if (s < 0) return Semidefinite::kNonpositive;
    }
  }
}

IsolatingInterval separate_from(const UniPoly& square_free, IsolatingInterval iv,
                                const Rational& point) {
  if (iv.exact() || point <= iv.lo || point >= iv.hi) return iv;
  const int sp = sgn(square_free(point));
  if (sp == 0) return {point, point, iv.multiplicity};
  if (sp == sgn(square_free(iv.lo))) {
    iv.lo = point;
  } else {
    iv.hi = point;
  }
  return iv;
}

IsolatingInterval refine(const UniPoly& square_free, IsolatingInterval iv,
                         const Rational& tolerance) {
  return narrow(square_free, std::move(iv), tolerance, Rational(0));
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p, const Rational& tolerance) {
  require_nonzero(p);
  if (tolerance <= 0) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  std::vector<IsolatingInterval> out;
  if (p.is_constant()) return out;

  const std::vector<UniPoly> factors = square_free_decomposition(p);
  SturmChain chain(p);
  const UniPoly& sf = chain.square_free();
  const Rational recover_below = recovery_width(sf);
  const Rational bound = root_bound(sf) + 1;

  // Work items: open interval (lo, hi) with sf nonzero at both ends and
  // `count` roots inside. Processed left to right.
  std::stack<std::tuple<Rational, Rational, int>> work;
  work.emplace(-bound, bound, chain.count_all());
  while (!work.empty()) {
    auto [lo, hi, count] = work.top();
    work.pop();
    if (count == 0) continue;
    if (count == -1) {  // exact root found at a bisection point
      out.push_back({lo, lo, 1});
      continue;
    }
    if (count == 1) {
      out.push_back(narrow(sf, {lo, hi, 1}, tolerance, recover_below));
      continue;
    }
    const Rational m = midpoint(lo, hi);
    const int vlo = chain.variations_at(lo);
    const int vhi = chain.variations_at(hi);
    if (sf(m) == 0) {
      // Step off the root so no work interval has a root as an endpoint.
      Rational d = (hi - lo) / 4;
      while (sf(m - d) == 0 || sf(m + d) == 0 || chain.count_half_open(m - d, m + d) != 1) d /= 2;
      const int vl = chain.variations_at(m - d);
      const int vr = chain.variations_at(m + d);
      work.emplace(m + d, hi, vr - vhi);
      work.emplace(m, m, -1);
      work.emplace(lo, m - d, vlo - vl);
    } else {
      const int vm = chain.variations_at(m);
      work.emplace(m, hi, vm - vhi);
      work.emplace(lo, m, vlo - vm);
    }
  }

  // Attach multiplicities from the square-free decomposition.
  std::vector<SturmChain> factor_chains;
  factor_chains.reserve(factors.size());
  for (const auto& f : factors) factor_chains.emplace_back(f.is_constant() ? UniPoly{1} : f);
  for (auto& iv : out) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].is_constant()) continue;
      const bool hit = iv.exact() ? factors[i](iv.lo) == 0
                                  : factor_chains[i].count_half_open(iv.lo, iv.hi) > 0;
      if (hit) {
        iv.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return out;
}

}  // namespace multseq
