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

#include "multseq/error.hpp"
#include "multseq/report.hpp"
#include "oracles.hpp"

namespace multseq {
namespace {

using oracle::frac;

SequenceSpec P(std::vector<Rational> c) { return SequenceSpec::poly(UniPoly(std::move(c), "n")); }

// Reports go through text, as they would between processes.
CertifyResult roundtrip(const Json& j) { return certify(Json::parse(j.dump())); }

TEST(Report, LaguerreExampleShape) {
  const Json j = classify_report(classify_laguerre(P({1, 1}), 1));
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["derived"]["p"], Json::array({"1", "2"}));
  EXPECT_EQ(j["certificate"]["roots"][0]["lo"], "-1/2");
  EXPECT_EQ(j["certificate"]["roots"][0]["hi"], "-1/2");
  EXPECT_EQ(j["certificate"]["roots"][0]["mult"], 1);
  EXPECT_EQ(j["alpha"], "1");
  EXPECT_EQ(j.begin().key(), "verb");
}

TEST(Report, HermiteReason) {
  const Json j = classify_report(classify_hermite(P({1, 1})));
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["reason"], "nonnegative, nondecreasing, classical multiplier sequence");
  EXPECT_FALSE(j.contains("alpha"));
}

TEST(Certify, AcceptsEveryCertificateKind) {
  const std::vector<ClassificationReport> reps = {
      classify_laguerre(P({1, 1}), 1),                                   // root locations
      classify_laguerre(P({frac(1, 8), frac(1, 2), frac(1, 2)}), 0),     // irrational roots
      classify_laguerre(P({1, 1}), frac(-1, 2)),                         // offending root
      classify_laguerre(P({frac(5, 8), frac(3, 2), frac(1, 2)}), 0),     // irrational offender
      classify_laguerre(P({1, -1, 1}), 0),                               // nonreal pair
      classify_laguerre(P({}), 0),                                       // trivial
      classify_laguerre(SequenceSpec::list({0, 2, 3}, true), 0),         // trivial list
      classify_laguerre(SequenceSpec::list({1, 2, 3, 4, 5}), 0),         // consistency bound
      classify_classical(SequenceSpec::list({1, 1, 3, 7, 13})),          // witness
      classify_classical(P({-2, 1})),                                    // offending Q root
      classify_classical(P({0, 0, 1})),                                  // Q = y + y^2/2
      classify_hermite(P({1, 1})),                                       // Hermite evidence
      classify_hermite(P({-1, -1})),                                     // negated
      classify_hermite(P({1, -1, 1})),                                   // not classical
      classify_hermite(SequenceSpec::list({1, 0, 3, 5})),                // sign gap
      classify_hermite(SequenceSpec::list({1, 1, -1, 2})),               // mixed signs
      classify_hermite(P({frac(11, 2), -1})),                            // mixed signs, poly
      classify_hermite(SequenceSpec::list({1, 3, 2, 4})),                // decrease
      classify_hermite(SequenceSpec::list({1, -2, 3, -4, 5})),           // alternating
      classify_hermite(P({7})),
  };
  for (const auto& r : reps) {
    const Json j = classify_report(r);
    const auto res = roundtrip(j);
    EXPECT_TRUE(res.valid) << res.detail << "\n" << j.dump(2);
  }
}

TEST(Certify, RejectsTamperedReports) {
  Json j = classify_report(classify_laguerre(P({frac(1, 8), frac(1, 2), frac(1, 2)}), 0));
  // Move an interval off its sign change.
  Json moved = j;
  moved["certificate"]["roots"][0]["lo"] = "-1/100";
  moved["certificate"]["roots"][0]["hi"] = "0";
  EXPECT_FALSE(roundtrip(moved).valid);

  Json dropped = j;
  dropped["certificate"]["roots"].erase(0);
  EXPECT_FALSE(roundtrip(dropped).valid);

  Json mult = j;
  mult["certificate"]["roots"][0]["mult"] = 2;
  EXPECT_FALSE(roundtrip(mult).valid);

  Json flipped = j;
  flipped["verdict"] = "no";
  EXPECT_FALSE(roundtrip(flipped).valid);

  Json derived = j;
  derived["derived"]["p"][0] = "1/7";
  EXPECT_FALSE(roundtrip(derived).valid);

  Json seq = classify_report(classify_laguerre(P({1, 1}), 1));
  seq["sequence"]["coeffs"][1] = "2";
  EXPECT_FALSE(roundtrip(seq).valid);

  Json gap = classify_report(classify_hermite(SequenceSpec::list({1, 0, 3, 5})));
  gap["certificate"]["i"] = 2;
  EXPECT_FALSE(roundtrip(gap).valid);

  Json wit = classify_report(classify_classical(SequenceSpec::list({1, 1, 3, 7, 13})));
  wit["certificate"]["counterexample"]["image"][0] = "12345";
  EXPECT_FALSE(roundtrip(wit).valid);
}

TEST(Certify, MalformedReportsThrow) {
  EXPECT_THROW(certify(Json::object()), Error);
  Json j = classify_report(classify_laguerre(P({1, 1}), 1));
  j["certificate"]["type"] = "mystery";
  EXPECT_THROW(certify(j), Error);
  Json k = classify_report(classify_laguerre(P({1, 1}), 1));
  k["certificate"]["roots"][0]["lo"] = 3;
  EXPECT_THROW(certify(k), Error);
}

TEST(Certify, VerifyApplyAndSymbolReports) {
  FuzzConfig cfg;
  cfg.trials = 60;
  const auto s = P({1, 1});
  const BasisId bad = BasisId::laguerre(frac(-1, 2));
  const FuzzConfig wide;
  const Json failed = verify_report(classify(s, bad), wide, verify_preservation(s, bad, wide));
  EXPECT_EQ(failed["fuzz"], "failed");
  EXPECT_TRUE(roundtrip(failed).valid) << roundtrip(failed).detail;

  const BasisId good = BasisId::laguerre(0);
  const Json passed = verify_report(classify(s, good), cfg, verify_preservation(s, good, cfg));
  EXPECT_EQ(passed["fuzz"], "all-passed");
  EXPECT_EQ(passed["trials"], 60);
  EXPECT_TRUE(roundtrip(passed).valid);

  const UniPoly in{0, 0, 1};
  Json ap = apply_report(SequenceSpec::list({1, 2, 3}), BasisId::hermite(), in,
                         apply_diagonal(SequenceSpec::list({1, 2, 3}), BasisId::hermite(), in));
  EXPECT_EQ(ap["image"], Json::array({"-1", "0", "3"}));
  EXPECT_TRUE(roundtrip(ap).valid);
  ap["image"][0] = "1";
  EXPECT_FALSE(roundtrip(ap).valid);

  const Json sym = symbol_report(P({0, 0, 1}), BasisId::laguerre(frac(1, 2)), 5);
  EXPECT_EQ(sym["forms_agree"], true);
  EXPECT_TRUE(roundtrip(sym).valid);
  const Json hs = symbol_report(P({1}), BasisId::hermite(), 3);
  EXPECT_TRUE(roundtrip(hs).valid);
  EXPECT_THROW(symbol_report(P({1}), BasisId::monomial(), 3), Error);
}

TEST(Report, Deterministic) {
  const auto a = classify_report(classify_laguerre(P({0, -1, 2}), frac(5, 2))).dump();
  const auto b = classify_report(classify_laguerre(P({0, -1, 2}), frac(5, 2))).dump();
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace multseq
