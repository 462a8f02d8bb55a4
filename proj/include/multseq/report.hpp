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

#ifndef MULTSEQ_REPORT_HPP_
#define MULTSEQ_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "multseq/classify.hpp"
#include "multseq/symbolic.hpp"
#include "multseq/transform.hpp"

namespace multseq {

using Json = nlohmann::ordered_json;

Json rational_list(const std::vector<Rational>& v);
Json coeff_list(const UniPoly& p);
Json sequence_json(const SequenceSpec& s);
Json interval_json(const IsolatingInterval& iv);
Json certificate_json(const Certificate& c);
Json counterexample_json(const Counterexample& ce);

Json classify_report(const ClassificationReport& r);

// classify_report plus the fuzz outcome.
Json verify_report(const ClassificationReport& r, const FuzzConfig& cfg,
                   const PreservationResult& fuzz);

Json apply_report(const SequenceSpec& s, const BasisId& basis, const UniPoly& input,
                  const UniPoly& image);

// Laguerre: both symbol forms. Hermite: the Hermite symbol.
Json symbol_report(const SequenceSpec& s, const BasisId& basis, int order);

struct CertifyResult {
  bool valid = false;
  std::string detail;  // first failed check, or "ok"
};

// Re-checks a report produced by any of the *_report functions. Recomputes
// derived polynomials from the sequence and validates the certificate by
// direct evaluation. Throws kParse on a malformed report.
CertifyResult certify(const Json& report);

}  // namespace multseq

#endif  // MULTSEQ_REPORT_HPP_
