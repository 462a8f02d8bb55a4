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

#include "multseq/multseq.h"

#include <new>
#include <string>

#include "multseq/classify.hpp"
#include "multseq/error.hpp"
#include "multseq/report.hpp"
#include "multseq/transform.hpp"

struct multseq_sequence {
  multseq::SequenceSpec spec;
};

struct multseq_basis {
  multseq::BasisId id;
};

struct multseq_report {
  std::string json;
  multseq_verdict verdict = MULTSEQ_VERDICT_NONE;
};

namespace {

thread_local std::string g_last_error;

multseq_status status_of(multseq::ErrorCode c) {
  using multseq::ErrorCode;
  switch (c) {
    case ErrorCode::kInvalidArgument:
      return MULTSEQ_E_INVALID_ARGUMENT;
    case ErrorCode::kDomain:
      return MULTSEQ_E_DOMAIN;
    case ErrorCode::kInsufficientPrefix:
      return MULTSEQ_E_INSUFFICIENT_PREFIX;
    case ErrorCode::kZeroPolynomial:
      return MULTSEQ_E_ZERO_POLYNOMIAL;
    case ErrorCode::kParse:
      return MULTSEQ_E_PARSE;
    case ErrorCode::kInternal:
      return MULTSEQ_E_INTERNAL;
  }
  return MULTSEQ_E_INTERNAL;
}

multseq_status fail(multseq_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

// Runs f, mapping exceptions to status codes.
template <class F>
multseq_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return MULTSEQ_OK;
  } catch (const multseq::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(MULTSEQ_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MULTSEQ_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MULTSEQ_E_INTERNAL, e.what());
  }
}

multseq_verdict verdict_of(multseq::Status s) {
  switch (s) {
    case multseq::Status::kYes:
      return MULTSEQ_VERDICT_YES;
    case multseq::Status::kNo:
      return MULTSEQ_VERDICT_NO;
    case multseq::Status::kUndetermined:
      return MULTSEQ_VERDICT_UNDETERMINED;
  }
  return MULTSEQ_VERDICT_NONE;
}

multseq::ClassifyOptions classify_options(const multseq_classify_options* o) {
  multseq::ClassifyOptions out;
  if (o == nullptr) return out;
  if (o->tolerance != nullptr) {
    out.tolerance = multseq::parse_rational(o->tolerance);
    if (out.tolerance <= 0) {
      throw multseq::Error(multseq::ErrorCode::kInvalidArgument, "tolerance must be positive");
    }
  }
  out.degree_cap = o->degree_cap;
  return out;
}

multseq_report* make_report(const multseq::Json& j, multseq_verdict v) {
  return new multseq_report{j.dump(2), v};
}

bool null_args(const void* a, const void* b) { return a == nullptr || b == nullptr; }

}  // namespace

extern "C" {

const char* multseq_last_error(void) { return g_last_error.c_str(); }

multseq_status multseq_sequence_parse(const char* text, int complete, multseq_sequence** out) {
  if (null_args(text, out)) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new multseq_sequence{multseq::SequenceSpec::parse(text, complete != 0)};
  });
}

void multseq_sequence_free(multseq_sequence* s) { delete s; }

multseq_status multseq_basis_create(multseq_basis_kind kind, const char* alpha,
                                    multseq_basis** out) {
  if (out == nullptr) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    switch (kind) {
      case MULTSEQ_BASIS_MONOMIAL:
        *out = new multseq_basis{multseq::BasisId::monomial()};
        return;
      case MULTSEQ_BASIS_HERMITE:
        *out = new multseq_basis{multseq::BasisId::hermite()};
        return;
      case MULTSEQ_BASIS_LAGUERRE:
        if (alpha == nullptr) {
          throw multseq::Error(multseq::ErrorCode::kInvalidArgument, "laguerre needs alpha");
        }
        *out = new multseq_basis{multseq::BasisId::laguerre(multseq::parse_rational(alpha))};
        return;
    }
    throw multseq::Error(multseq::ErrorCode::kInvalidArgument, "unknown basis kind");
  });
}

multseq_status multseq_basis_parse(const char* name, const char* alpha, multseq_basis** out) {
  if (null_args(name, out)) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  multseq_basis_kind kind;
  const multseq_status st = guarded([&] {
    switch (multseq::parse_basis_kind(name)) {
      case multseq::BasisKind::kMonomial:
        kind = MULTSEQ_BASIS_MONOMIAL;
        break;
      case multseq::BasisKind::kLaguerre:
        kind = MULTSEQ_BASIS_LAGUERRE;
        break;
      case multseq::BasisKind::kHermite:
        kind = MULTSEQ_BASIS_HERMITE;
        break;
    }
  });
  if (st != MULTSEQ_OK) return st;
  return multseq_basis_create(kind, alpha, out);
}

void multseq_basis_free(multseq_basis* b) { delete b; }

void multseq_classify_options_init(multseq_classify_options* opts) {
  if (opts == nullptr) return;
  opts->tolerance = nullptr;
  opts->degree_cap = -1;
}

void multseq_fuzz_options_init(multseq_fuzz_options* opts) {
  if (opts == nullptr) return;
  const multseq::FuzzConfig d;
  opts->seed = d.seed;
  opts->trials = d.trials;
  opts->max_degree = d.max_degree;
}

multseq_status multseq_classify(const multseq_sequence* s, const multseq_basis* b,
                                const multseq_classify_options* opts, multseq_report** out) {
  if (null_args(s, b) || out == nullptr) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto rep = multseq::classify(s->spec, b->id, classify_options(opts));
    *out = make_report(multseq::classify_report(rep), verdict_of(rep.verdict.status));
  });
}

multseq_status multseq_verify(const multseq_sequence* s, const multseq_basis* b,
                              const multseq_classify_options* classify_opts,
                              const multseq_fuzz_options* fuzz_opts, multseq_report** out) {
  if (null_args(s, b) || out == nullptr) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    multseq::FuzzConfig cfg;
    if (fuzz_opts != nullptr) {
      cfg.seed = fuzz_opts->seed;
      cfg.trials = fuzz_opts->trials;
      cfg.max_degree = fuzz_opts->max_degree;
    }
    cfg.validate();
    const auto rep = multseq::classify(s->spec, b->id, classify_options(classify_opts));
    const auto fuzz = multseq::verify_preservation(s->spec, b->id, cfg);
    *out = make_report(multseq::verify_report(rep, cfg, fuzz), verdict_of(rep.verdict.status));
  });
}

multseq_status multseq_apply(const multseq_sequence* s, const multseq_basis* b, const char* poly,
                             multseq_report** out) {
  if (null_args(s, b) || null_args(poly, out)) {
    return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    // Reuse the sequence grammar for the coefficient list.
    const auto parsed = multseq::SequenceSpec::parse(std::string("poly:") + poly);
    const multseq::UniPoly input(parsed.as_poly().p.coeffs(), "x");
    const auto image = multseq::apply_diagonal(s->spec, b->id, input);
    *out = make_report(multseq::apply_report(s->spec, b->id, input, image), MULTSEQ_VERDICT_NONE);
  });
}

multseq_status multseq_symbol(const multseq_sequence* s, const multseq_basis* b, int order,
                              multseq_report** out) {
  if (null_args(s, b) || out == nullptr) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_report(multseq::symbol_report(s->spec, b->id, order), MULTSEQ_VERDICT_NONE);
  });
}

multseq_status multseq_certify(const char* report_json, int* valid, multseq_report** out) {
  if (null_args(report_json, valid)) return fail(MULTSEQ_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto parsed = multseq::Json::parse(report_json);
    const auto res = multseq::certify(parsed);
    *valid = res.valid ? 1 : 0;
    if (out != nullptr) {
      multseq::Json j;
      j["verb"] = "certify";
      j["valid"] = res.valid;
      j["detail"] = res.detail;
      *out = make_report(j, MULTSEQ_VERDICT_NONE);
    }
  });
}

multseq_verdict multseq_report_verdict(const multseq_report* r) {
  return r == nullptr ? MULTSEQ_VERDICT_NONE : r->verdict;
}

const char* multseq_report_json(const multseq_report* r) {
  return r == nullptr ? "" : r->json.c_str();
}

void multseq_report_free(multseq_report* r) { delete r; }

}  // extern "C"
