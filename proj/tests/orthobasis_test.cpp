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

#include <gtest/gtest.h>

#include <random>

#include "multseq/error.hpp"
#include "multseq/orthobasis.hpp"
#include "oracles.hpp"

namespace multseq {
namespace {

using oracle::frac;

const Rational kAlphas[] = {Rational(0), Rational(1), frac(5, 2), frac(-1, 2), frac(-3, 4),
                            frac(7, 3)};

// (x - alpha - 1) f' - x f''
UniPoly delta(const UniPoly& f, const Rational& alpha) {
  const UniPoly x_shift{-alpha - 1, Rational(1)};
  const UniPoly x{Rational(0), Rational(1)};
  return x_shift * f.derivative() - x * f.derivative(2);
}

TEST(Laguerre, Examples) {
  for (const auto& a : kAlphas) EXPECT_EQ(laguerre_polynomial(0, a), UniPoly{1});
  EXPECT_EQ(laguerre_polynomial(1, frac(5, 2)), (UniPoly{frac(7, 2), -1}));
  EXPECT_EQ(laguerre_polynomial(2, 0), (UniPoly{1, -2, frac(1, 2)}));
}

TEST(Laguerre, AlphaOutOfRange) {
  try {
    laguerre_polynomial(2, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
    EXPECT_STREQ(e.what(), "alpha out of range");
  }
  EXPECT_THROW(BasisId::laguerre(frac(-3, 2)), Error);
}

TEST(Hermite, Examples) {
  EXPECT_EQ(hermite_polynomial(0), UniPoly{1});
  EXPECT_EQ(hermite_polynomial(2), (UniPoly{-2, 0, 4}));
  EXPECT_EQ(hermite_polynomial(3), (UniPoly{0, -12, 0, 8}));
}

TEST(Hermite, Parity) {
  const UniPoly neg_x{Rational(0), Rational(-1)};
  for (int n = 0; n <= 10; ++n) {
    const UniPoly h = hermite_polynomial(n);
    EXPECT_EQ(h.compose(neg_x), (n % 2 == 0) ? h : -h);
  }
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand_in_basis(UniPoly{0, 0, 1}, BasisId::hermite()).coefficients,
            (std::vector<Rational>{frac(1, 2), 0, frac(1, 4)}));
  for (const auto& a : kAlphas) {
    EXPECT_EQ(expand_in_basis(UniPoly{0, 1}, BasisId::laguerre(a)).coefficients,
              (std::vector<Rational>{a + 1, -1}));
    EXPECT_EQ(expand_in_basis(UniPoly{1}, BasisId::laguerre(a)).coefficients,
              std::vector<Rational>{1});
  }
  EXPECT_EQ(expand_in_basis(UniPoly{1}, BasisId::hermite()).coefficients, std::vector<Rational>{1});
}

TEST(Assemble, Examples) {
  EXPECT_EQ(assemble_from_basis({BasisId::hermite(), {frac(1, 2), 0, frac(1, 4)}}),
            (UniPoly{0, 0, 1}));
  EXPECT_EQ(assemble_from_basis({BasisId::laguerre(frac(1, 3)), {frac(4, 3), -1}}),
            (UniPoly{0, 1}));
  EXPECT_TRUE(assemble_from_basis({BasisId::monomial(), {0}}).is_zero());
}

TEST(Property, RoundTripToDegree12) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly p = oracle::random_poly(rng, 12);
    for (const BasisId& b : {BasisId::monomial(), BasisId::hermite(),
                             BasisId::laguerre(oracle::random_alpha(rng))}) {
      const auto e = expand_in_basis(p, b);
      EXPECT_EQ(assemble_from_basis(e), p) << b.name();
      if (!p.is_zero()) EXPECT_NE(e.coefficients.back(), 0);
    }
  }
}

TEST(Property, DeltaEigenvalues) {
  for (const auto& a : kAlphas) {
    for (int n = 0; n <= 10; ++n) {
      const UniPoly l = laguerre_polynomial(n, a);
      EXPECT_EQ(delta(l, a), l * Rational(n)) << "n=" << n;
    }
  }
}

TEST(Property, SkEigenvalues) {
  for (const auto& a : {Rational(0), frac(5, 2), frac(-3, 4)}) {
    for (int n = 0; n <= 6; ++n) {
      const UniPoly l = laguerre_polynomial(n, a);
      UniPoly f = l;  // delta(delta-1)...(delta-k+1) L_n / k!
      for (int k = 0; k <= n; ++k) {
        if (k > 0) f = (delta(f, a) - f * Rational(k - 1)) * (Rational(1) / k);
        EXPECT_EQ(f, l * oracle::choose(n, k)) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Property, LaguerreGeneratingFunction) {
  for (const auto& a : kAlphas) {
    const auto g = oracle::laguerre_generating(a, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(laguerre_polynomial(n, a), g[n]) << "n=" << n;
  }
}

TEST(Property, HermiteGeneratingFunction) {
  const auto g = oracle::hermite_generating(10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(hermite_polynomial(n), g[n] * factorial(n));
}

TEST(BasisTable, MatchesStandalonePolynomials) {
  const BasisTable t(BasisId::hermite(), 8);
  for (int n = 0; n < 8; ++n) EXPECT_EQ(t[n], hermite_polynomial(n));
  const BasisTable l(BasisId::laguerre(frac(1, 2)), 6);
  for (int n = 0; n < 6; ++n) EXPECT_EQ(l[n], laguerre_polynomial(n, frac(1, 2)));
}

TEST(BasisId, NamesAndParsing) {
  EXPECT_EQ(BasisId::laguerre(1).name(), "laguerre");
  EXPECT_EQ(parse_basis_kind("hermite"), BasisKind::kHermite);
  EXPECT_THROW(parse_basis_kind("legendre"), Error);
  EXPECT_EQ(BasisId::laguerre(1), BasisId::laguerre(1));
  EXPECT_FALSE(BasisId::laguerre(1) == BasisId::laguerre(2));
}

}  // namespace
}  // namespace multseq
