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

#include "command.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multseq/multseq.h"

namespace multseq::cli {

namespace {

const char* const kVerbs[] = {"classify", "apply", "verify", "symbol", "certify"};

struct SequenceDeleter {
  void operator()(multseq_sequence* s) const { multseq_sequence_free(s); }
};
struct BasisDeleter {
  void operator()(multseq_basis* b) const { multseq_basis_free(b); }
};
struct ReportDeleter {
  void operator()(multseq_report* r) const { multseq_report_free(r); }
};
using SequencePtr = std::unique_ptr<multseq_sequence, SequenceDeleter>;
using BasisPtr = std::unique_ptr<multseq_basis, BasisDeleter>;
using ReportPtr = std::unique_ptr<multseq_report, ReportDeleter>;

// Status from the C API, carried up to run().
struct ApiFailure {
  multseq_status status;
  std::string message;
};

void ok_or_throw(multseq_status st) {
  if (st != MULTSEQ_OK) throw ApiFailure{st, multseq_last_error()};
}

BasisPtr make_basis(const Command& c) {
  multseq_basis* b = nullptr;
  ok_or_throw(multseq_basis_parse(c.basis.c_str(), c.alpha ? c.alpha->c_str() : nullptr, &b));
  return BasisPtr(b);
}

SequencePtr make_sequence(const Command& c) {
  multseq_sequence* s = nullptr;
  ok_or_throw(multseq_sequence_parse(c.seq.c_str(), c.complete ? 1 : 0, &s));
  return SequencePtr(s);
}

bool needs_sequence(const std::string& verb) { return verb != "certify"; }

int default_trials() {
  const char* env = std::getenv("MULTSEQ_DEFAULT_TRIALS");
  if (env == nullptr) return 200;
  try {
    size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MULTSEQ_DEFAULT_TRIALS: invalid value ") + env);
  }
}

std::string read_report(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw UsageError("--report: cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing verb (classify, apply, verify, symbol, certify)");
  if (args.front() == "-h" || args.front() == "--help") {
    throw HelpRequested(
        "usage: multseq <verb> [options]\n"
        "verbs: classify, apply, verify, symbol, certify\n"
        "run 'multseq <verb> --help' for the options of a verb\n");
  }
  Command cmd;
  cmd.verb = args.front();
  if (std::find(std::begin(kVerbs), std::end(kVerbs), cmd.verb) == std::end(kVerbs)) {
    throw UsageError("unknown verb " + cmd.verb);
  }

  CLI::App app{"", "multseq " + cmd.verb};
  std::string alpha, tolerance;
  std::optional<int> trials;
  app.add_option("--basis", cmd.basis, "basis kind (default monomial)")->check(CLI::IsMember({"monomial", "laguerre", "hermite"}));
  app.add_option("--alpha", alpha, "Laguerre parameter, a rational > -1");
  app.add_option("--seq", cmd.seq, "poly:c0,c1,... in n, or list:l0,l1,...");
  app.add_flag("--complete", cmd.complete, "unlisted list entries are zero");
  app.add_option("--seed", cmd.seed, "fuzz seed");
  app.add_option("--trials", trials, "fuzz trials (default 200 or MULTSEQ_DEFAULT_TRIALS)")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cmd.max_degree, "largest fuzzed degree")->check(CLI::PositiveNumber);
  app.add_option("--order", cmd.order, "symbol y-order")->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", tolerance, "isolating interval width");
  app.add_option("--poly", cmd.poly, "apply input, c0,c1,... in x");
  app.add_option("--cap", cmd.cap, "bounded test degree cap")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", cmd.timing, "add timing_ms to the report");
  app.add_option("--report", cmd.report, "report to certify, - for stdin");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 wants them reversed
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (app.count("--alpha") > 0) cmd.alpha = alpha;
  if (app.count("--tolerance") > 0) cmd.tolerance = tolerance;
  cmd.trials = trials ? *trials : default_trials();

  if (needs_sequence(cmd.verb)) {
    if (cmd.seq.empty()) throw UsageError("--seq is required for " + cmd.verb);
    if (cmd.basis == "laguerre" && !cmd.alpha) throw UsageError("--alpha is required for laguerre");
    // Validate basis and sequence now so errors surface as usage errors.
    try {
      make_basis(cmd);
      make_sequence(cmd);
    } catch (const ApiFailure& f) {
      throw UsageError(f.message);
    }
  }
  if (cmd.verb == "apply" && cmd.poly.empty()) throw UsageError("--poly is required for apply");
  if (cmd.verb == "certify" && cmd.report.empty()) {
    throw UsageError("--report is required for certify");
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  multseq_report* raw = nullptr;
  int exit_code = kExitOk;
  try {
    if (cmd.verb == "certify") {
      int valid = 0;
      ok_or_throw(multseq_certify(read_report(cmd.report).c_str(), &valid, &raw));
      if (!valid) exit_code = kExitInvalidCertificate;
    } else {
      const BasisPtr basis = make_basis(cmd);
      const SequencePtr seq = make_sequence(cmd);
      multseq_classify_options copts;
      multseq_classify_options_init(&copts);
      if (cmd.tolerance) copts.tolerance = cmd.tolerance->c_str();
      copts.degree_cap = cmd.cap;
      if (cmd.verb == "classify") {
        ok_or_throw(multseq_classify(seq.get(), basis.get(), &copts, &raw));
      } else if (cmd.verb == "verify") {
        multseq_fuzz_options fopts;
        multseq_fuzz_options_init(&fopts);
        fopts.seed = cmd.seed;
        fopts.trials = cmd.trials;
        fopts.max_degree = cmd.max_degree;
        ok_or_throw(multseq_verify(seq.get(), basis.get(), &copts, &fopts, &raw));
      } else if (cmd.verb == "apply") {
        ok_or_throw(multseq_apply(seq.get(), basis.get(), cmd.poly.c_str(), &raw));
      } else {
        ok_or_throw(multseq_symbol(seq.get(), basis.get(), cmd.order, &raw));
      }
    }
  } catch (const ApiFailure& f) {
    err << "multseq: " << f.message << "\n";
    return f.status == MULTSEQ_E_INTERNAL ? kExitInternal : kExitUsage;
  } catch (const UsageError& e) {
    err << "multseq: " << e.what() << "\n";
    return kExitUsage;
  }
  const ReportPtr report(raw);
  std::string text = multseq_report_json(report.get());
  if (cmd.timing) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    auto j = nlohmann::ordered_json::parse(text);
    j["timing_ms"] = ms;
    text = j.dump(2);
  }
  out << text << "\n";
  return exit_code;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "multseq: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cmd, out, err);
}

}  // namespace multseq::cli
