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

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.
#ifndef MULTSEQ_TESTS_ORACLES_HPP_
#define MULTSEQ_TESTS_ORACLES_HPP_

#include <random>
#include <vector>

#include "multseq/bipoly.hpp"
#include "multseq/rational.hpp"
#include "multseq/sequence.hpp"
#include "multseq/unipoly.hpp"

namespace multseq::oracle {

inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational choose(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// a_k = sum_j (-1)^{k-j} C(k,j) lambda_j
inline std::vector<Rational> deltas(const std::vector<Rational>& lambda) {
  std::vector<Rational> a;
  for (size_t k = 0; k < lambda.size(); ++k) {
    Rational acc(0);
    for (size_t j = 0; j <= k; ++j) {
      const Rational t = choose(static_cast<long>(k), static_cast<long>(j)) * lambda[j];
      acc += ((k - j) % 2 == 0) ? t : Rational(-t);
    }
    a.push_back(acc);
  }
  return a;
}

inline Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Power series in t whose coefficients are polynomials in x: out[n] = [t^n].
using Series = std::vector<UniPoly>;

// exp(u) for u with zero constant term, via n E_n = sum_k k u_k E_{n-k}.
inline Series series_exp(const Series& u, int order) {
  Series e(static_cast<size_t>(order) + 1);
  e[0] = UniPoly::constant(Rational(1));
  for (int n = 1; n <= order; ++n) {
    UniPoly acc;
    for (int k = 1; k <= n && k < static_cast<int>(u.size()); ++k) {
      acc = acc + u[static_cast<size_t>(k)] * e[static_cast<size_t>(n - k)] * Rational(k);
    }
    e[static_cast<size_t>(n)] = acc * (Rational(1) / n);
  }
  return e;
}

inline Series series_mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) {
      out[static_cast<size_t>(i + j)] = out[static_cast<size_t>(i + j)] + a[i] * b[j];
    }
  }
  return out;
}

// [t^n] e^{-xt/(1-t)} / (1-t)^{1+alpha}
inline Series laguerre_generating(const Rational& alpha, int order) {
  Series u(static_cast<size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) u[static_cast<size_t>(m)] = UniPoly{Rational(0), Rational(-1)};
  Series pw(static_cast<size_t>(order) + 1);
  Rational c(1);  // C(n + alpha, n)
  for (int n = 0; n <= order; ++n) {
    if (n > 0) c = c * (alpha + n) / n;
    pw[static_cast<size_t>(n)] = UniPoly::constant(c);
  }
  return series_mul(series_exp(u, order), pw, order);
}

// [t^n] exp(2xt - t^2); H_n is n! times this.
inline Series hermite_generating(int order) {
  Series u(3);
  u[1] = UniPoly{Rational(0), Rational(2)};
  u[2] = UniPoly::constant(Rational(-1));
  return series_exp(u, order);
}

// Product of (x - r) over the roots.
inline UniPoly from_roots(const std::vector<Rational>& roots, const Rational& scale = 1) {
  std::vector<Rational> c{scale};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return UniPoly(c);
}

// Small random rationals with denominators up to `den`.
inline Rational random_rational(std::mt19937_64& rng, int span, int den) {
  std::uniform_int_distribution<int> num(-span * den, span * den);
  std::uniform_int_distribution<int> d(1, den);
  Rational r(num(rng), d(rng));
  r.canonicalize();
  return r;
}

inline UniPoly random_poly(std::mt19937_64& rng, int max_degree, const char* var = "x") {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, 3, 4));
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c, var);
}

// alpha from {0, 1, 5/2, -1/2, -3/4, 1/3}
inline Rational random_alpha(std::mt19937_64& rng) {
  static const Rational kAlphas[] = {Rational(0), Rational(1), Rational(5, 2),
                                     Rational(-1, 2), Rational(-3, 4), Rational(1, 3)};
  std::uniform_int_distribution<int> pick(0, 5);
  return kAlphas[pick(rng)];
}

}  // namespace multseq::oracle

#endif  // MULTSEQ_TESTS_ORACLES_HPP_
