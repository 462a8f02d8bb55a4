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

#include <string>

#include "multseq/multseq.h"

namespace {

struct Handles {
  multseq_sequence* seq = nullptr;
  multseq_basis* basis = nullptr;
  multseq_report* report = nullptr;
  ~Handles() {
    multseq_report_free(report);
    multseq_basis_free(basis);
    multseq_sequence_free(seq);
  }
};

TEST(CApi, ClassifyRoundTrip) {
  Handles h;
  ASSERT_EQ(multseq_sequence_parse("poly:1,1", 0, &h.seq), MULTSEQ_OK);
  ASSERT_EQ(multseq_basis_create(MULTSEQ_BASIS_LAGUERRE, "1", &h.basis), MULTSEQ_OK);
  ASSERT_EQ(multseq_classify(h.seq, h.basis, nullptr, &h.report), MULTSEQ_OK);
  EXPECT_EQ(multseq_report_verdict(h.report), MULTSEQ_VERDICT_YES);
  const std::string json = multseq_report_json(h.report);
  EXPECT_NE(json.find("\"-1/2\""), std::string::npos);

  int valid = -1;
  multseq_report* cert = nullptr;
  ASSERT_EQ(multseq_certify(json.c_str(), &valid, &cert), MULTSEQ_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_NE(std::string(multseq_report_json(cert)).find("\"valid\": true"), std::string::npos);
  multseq_report_free(cert);
}

TEST(CApi, ErrorCodes) {
  multseq_basis* b = nullptr;
  EXPECT_EQ(multseq_basis_create(MULTSEQ_BASIS_LAGUERRE, "-2", &b), MULTSEQ_E_DOMAIN);
  EXPECT_EQ(b, nullptr);
  EXPECT_STREQ(multseq_last_error(), "alpha out of range");
  EXPECT_EQ(multseq_basis_create(MULTSEQ_BASIS_LAGUERRE, nullptr, &b), MULTSEQ_E_INVALID_ARGUMENT);
  EXPECT_EQ(multseq_basis_parse("legendre", nullptr, &b), MULTSEQ_E_PARSE);

  multseq_sequence* s = nullptr;
  EXPECT_EQ(multseq_sequence_parse("poly:1,q", 0, &s), MULTSEQ_E_PARSE);
  EXPECT_NE(std::string(multseq_last_error()).find("q"), std::string::npos);
  EXPECT_EQ(multseq_sequence_parse(nullptr, 0, &s), MULTSEQ_E_INVALID_ARGUMENT);

  int valid = 0;
  EXPECT_EQ(multseq_certify("{not json", &valid, nullptr), MULTSEQ_E_PARSE);
}

TEST(CApi, InsufficientPrefix) {
  Handles h;
  ASSERT_EQ(multseq_sequence_parse("list:1,2", 0, &h.seq), MULTSEQ_OK);
  ASSERT_EQ(multseq_basis_create(MULTSEQ_BASIS_HERMITE, nullptr, &h.basis), MULTSEQ_OK);
  EXPECT_EQ(multseq_apply(h.seq, h.basis, "0,0,1", &h.report), MULTSEQ_E_INSUFFICIENT_PREFIX);
}

TEST(CApi, VerifyApplySymbol) {
  Handles h;
  ASSERT_EQ(multseq_sequence_parse("poly:0,1", 0, &h.seq), MULTSEQ_OK);
  ASSERT_EQ(multseq_basis_parse("laguerre", "0", &h.basis), MULTSEQ_OK);
  multseq_fuzz_options f;
  multseq_fuzz_options_init(&f);
  EXPECT_EQ(f.trials, 200);
  f.trials = 100;
  f.seed = 7;
  ASSERT_EQ(multseq_verify(h.seq, h.basis, nullptr, &f, &h.report), MULTSEQ_OK);
  const std::string v = multseq_report_json(h.report);
  EXPECT_NE(v.find("\"fuzz\": \"all-passed\""), std::string::npos);
  EXPECT_NE(v.find("\"trials\": 100"), std::string::npos);
  multseq_report_free(h.report);
  h.report = nullptr;

  ASSERT_EQ(multseq_apply(h.seq, h.basis, "0,1", &h.report), MULTSEQ_OK);
  EXPECT_NE(std::string(multseq_report_json(h.report)).find("\"image\""), std::string::npos);
  EXPECT_EQ(multseq_report_verdict(h.report), MULTSEQ_VERDICT_NONE);
  multseq_report_free(h.report);
  h.report = nullptr;

  ASSERT_EQ(multseq_symbol(h.seq, h.basis, 3, &h.report), MULTSEQ_OK);
  EXPECT_NE(std::string(multseq_report_json(h.report)).find("\"forms_agree\": true"),
            std::string::npos);
}

TEST(CApi, ClassifyOptions) {
  Handles h;
  ASSERT_EQ(multseq_sequence_parse("list:1,2,3,4,5,6,7,8", 0, &h.seq), MULTSEQ_OK);
  ASSERT_EQ(multseq_basis_create(MULTSEQ_BASIS_MONOMIAL, nullptr, &h.basis), MULTSEQ_OK);
  multseq_classify_options o;
  multseq_classify_options_init(&o);
  o.degree_cap = 3;
  o.tolerance = "1/1024";
  ASSERT_EQ(multseq_classify(h.seq, h.basis, &o, &h.report), MULTSEQ_OK);
  EXPECT_EQ(multseq_report_verdict(h.report), MULTSEQ_VERDICT_UNDETERMINED);
  EXPECT_NE(std::string(multseq_report_json(h.report)).find("\"cap\": 3"), std::string::npos);
  multseq_report* r2 = nullptr;
  o.tolerance = "0";
  EXPECT_EQ(multseq_classify(h.seq, h.basis, &o, &r2), MULTSEQ_E_INVALID_ARGUMENT);
}

}  // namespace
