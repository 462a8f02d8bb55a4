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

#include "multseq/symbolic.hpp"

#include <algorithm>

#include "multseq/error.hpp"
#include "multseq/roots.hpp"

namespace multseq {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::kInvalidArgument, "order must be nonnegative");
}

void require_alpha(const Rational& alpha) {
  if (alpha <= -1) throw Error(ErrorCode::kDomain, "alpha out of range");
}

std::vector<Rational> delta_upto(const SequenceSpec& s, int order) {
  auto a = binomial_invert(s, order).values;
  if (a.size() > static_cast<size_t>(order) + 1) a.resize(static_cast<size_t>(order) + 1);
  return a;
}

// -xy(y+1)
BiPoly shift_term() { return BiPoly::term(1, 1, Rational(-1)) + BiPoly::term(1, 2, Rational(-1)); }

}  // namespace

SymbolTruncation symbol_basis_form(const SequenceSpec& s, const Rational& alpha, int order) {
  require_order(order);
  require_alpha(alpha);
  const auto a = delta_upto(s, order);
  // xy + x
  const BiPoly arg = BiPoly::term(1, 1) + BiPoly::term(1, 0);
  BiPoly sum;
  for (size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    const BiPoly ln = compose(laguerre_polynomial(static_cast<int>(n), alpha), arg);
    sum += mul_truncated_y(BiPoly::term(0, static_cast<int>(n), a[n]), ln, order);
  }
  return {sum.truncate_y(order), order, BasisId::laguerre(alpha)};
}

SymbolTruncation symbol_p_form(const SequenceSpec& s, const Rational& alpha, int order) {
  require_order(order);
  require_alpha(alpha);
  const auto a = delta_upto(s, order);
  std::vector<Rational> pc(a.size());
  Rational binom(1);
  for (size_t k = 0; k < a.size(); ++k) {
    if (k > 0) {
      binom *= alpha + static_cast<long>(k);
      binom /= static_cast<long>(k);
    }
    pc[k] = binom * a[k];
  }
  const UniPoly p(std::move(pc), "y");
  const BiPoly t = shift_term();
  BiPoly sum;
  BiPoly t_pow = BiPoly::constant(Rational(1));
  Rational denom(1);
  UniPoly deriv = p;
  for (int k = 0; !deriv.is_zero() && k <= order; ++k) {
    if (k > 0) {
      denom *= (alpha + k) * k;
      t_pow = mul_truncated_y(t_pow, t, order);
      deriv = deriv.derivative();
      if (deriv.is_zero()) break;
    }
    sum += mul_truncated_y(BiPoly::in_y(deriv), t_pow, order) * (Rational(1) / denom);
  }
  return {sum.truncate_y(order), order, BasisId::laguerre(alpha)};
}

BiPoly substituted_p(const UniPoly& p) {
  return compose(p, BiPoly::term(0, 1) + shift_term());
}

UniPoly pencil_q(const UniPoly& p, const Rational& alpha) {
  require_alpha(alpha);
  const UniPoly y({Rational(0), Rational(1)}, "y");
  const UniPoly yy1({Rational(0), Rational(1), Rational(1)}, "y");
  return y * p + yy1 * p.derivative() * (Rational(1) / (1 + alpha));
}

UniPoly wronskian(const UniPoly& f, const UniPoly& g) {
  return f.derivative() * g - f * g.derivative();
}

bool proper_position(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "proper position needs a nonzero polynomial");
  }
  if (!is_real_rooted(f) || !is_real_rooted(g)) {
    throw Error(ErrorCode::kDomain, "inputs must be real-rooted");
  }
  if (f.is_zero() || g.is_zero()) return true;
  if (std::abs(f.degree() - g.degree()) > 1) return false;

  const UniPoly common = gcd(f, g);
  const UniPoly rf = f / common;
  const UniPoly rg = g / common;
  // After the common part is gone, strict interlacing needs simple roots.
  if (rf.degree() > 1 && square_free_part(rf).degree() != rf.degree()) return false;
  if (rg.degree() > 1 && square_free_part(rg).degree() != rg.degree()) return false;

  if (rf.degree() >= 1 && rg.degree() >= 1) {
    const UniPoly sff = square_free_part(rf);
    const UniPoly sfg = square_free_part(rg);
    auto rs = isolate_real_roots(rf);
    auto ss = isolate_real_roots(rg);
    // Coprime, so the root sets are disjoint; shrink until the intervals are.
    Rational tol = default_isolation_tolerance();
    auto overlap = [&]() {
      for (const auto& a : rs) {
        for (const auto& b : ss) {
          if (!(a.hi < b.lo || b.hi < a.lo)) return true;
        }
      }
      return false;
    };
    while (overlap()) {
      tol /= 1024;
      for (auto& iv : rs) iv = refine(sff, iv, tol);
      for (auto& iv : ss) iv = refine(sfg, iv, tol);
    }
    std::vector<std::pair<Rational, int>> merged;
    for (const auto& iv : rs) merged.emplace_back(iv.lo, 0);
    for (const auto& iv : ss) merged.emplace_back(iv.lo, 1);
    std::sort(merged.begin(), merged.end());
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
      if (merged[i].second == merged[i + 1].second) return false;
    }
  }
  const Semidefinite w = sign_semidefinite_on_reals(wronskian(f, g));
  return w == Semidefinite::kNonpositive || w == Semidefinite::kZero;
}

bool pencil_stability(const UniPoly& p, const Rational& alpha) {
  require_alpha(alpha);
  if (p.is_zero() || !is_real_rooted(p)) return false;
  const UniPoly q = pencil_q(p, alpha);
  if (!is_real_rooted(q)) return false;
  return proper_position(p, q);
}

SymbolTruncation hermite_symbol(const SequenceSpec& s, int order) {
  require_order(order);
  if (!s.known(order)) throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix");
  BiPoly sum;
  Rational scale(1);  // (-1)^k / (2^k k!)
  for (int k = 0; k <= order; ++k) {
    if (k > 0) scale /= Rational(-2 * k);
    const Rational lk = s.at(k);
    if (lk == 0) continue;
    sum += mul_truncated_y(BiPoly::in_x(hermite_polynomial(k)), BiPoly::term(0, k, lk * scale),
                           order);
  }
  // e^{y^2/4} = sum_j y^{2j} / (4^j j!)
  BiPoly ex;
  Rational c(1);
  for (int j = 0; 2 * j <= order; ++j) {
    if (j > 0) c /= Rational(4 * j);
    ex += BiPoly::term(0, 2 * j, c);
  }
  return {mul_truncated_y(ex, sum, order), order, BasisId::hermite()};
}

}  // namespace multseq
