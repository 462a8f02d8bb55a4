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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multseq/classify.hpp"
#include "multseq/orthobasis.hpp"
#include "multseq/report.hpp"
#include "multseq/roots.hpp"
#include "multseq/symbolic.hpp"
#include "multseq/transform.hpp"
#include "oracles.hpp"

namespace multseq {
namespace {

using oracle::frac;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 5) note << " [" << what << "]";
    pass = false;
  }
};

// Every report emitted by criteria 1-8, certified in criterion 9.
std::vector<Json> g_reports;

SequenceSpec P(std::vector<Rational> c) { return SequenceSpec::poly(UniPoly(std::move(c), "n")); }

std::vector<IsolatingInterval> roots_of(const ClassificationReport& r) {
  if (const auto* c = std::get_if<RootLocations>(&r.verdict.certificate)) return c->roots;
  return {};
}

std::vector<IsolatingInterval> exact(std::vector<Rational> rs) {
  std::vector<IsolatingInterval> out;
  for (auto& r : rs) out.push_back({r, r, 1});
  return out;
}

void criterion1(Outcome& o) {
  const std::vector<Rational> main_alphas{0, 1, frac(5, 2)};
  const std::vector<Rational> all_alphas{0, 1, frac(5, 2), frac(-1, 2), frac(-3, 4)};
  int checked = 0;
  for (const auto& a : main_alphas) {
    const auto r = classify_laguerre(P({0, 1}), a);
    g_reports.push_back(classify_report(r));
    o.expect(r.verdict.status == Status::kYes && roots_of(r) == exact({0}), "n at " + to_string(a));
    ++checked;
  }
  for (const auto& a : all_alphas) {
    const auto r = classify_laguerre(P({1, 1}), a);
    g_reports.push_back(classify_report(r));
    const Rational root = Rational(-1) / (1 + a);
    if (a >= 0) {
      o.expect(r.verdict.status == Status::kYes && roots_of(r) == exact({root}),
               "n+1 at " + to_string(a));
    } else {
      const auto* off = std::get_if<OffendingRoot>(&r.verdict.certificate);
      o.expect(r.verdict.status == Status::kNo && off && off->root == IsolatingInterval{root, root, 1},
               "n+1 at " + to_string(a));
    }
    const auto sq = classify_laguerre(P({0, 0, 1}), a);
    g_reports.push_back(classify_report(sq));
    o.expect(sq.verdict.status == Status::kYes && roots_of(sq) == exact({Rational(-1) / (a + 2), 0}),
             "n^2 at " + to_string(a));
    checked += 2;
  }
  o.note << checked << " fixtures";
}

struct GridEntry {
  SequenceSpec s;
  Rational alpha;
  ClassificationReport rep;
};
std::vector<GridEntry> g_grid_yes;

void criterion2(Outcome& o) {
  const std::vector<Rational> alphas{0, 1, frac(-1, 2)};
  int yes = 0, no = 0, worst_cap = 0;
  const FuzzConfig cfg;  // 200 trials, degree <= 8
  for (int c0 = -2; c0 <= 2; ++c0) {
    for (int c1 = -2; c1 <= 2; ++c1) {
      for (int c2 = -2; c2 <= 2; ++c2) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        const SequenceSpec s = P({c0, c1, c2});
        for (const auto& a : alphas) {
          const BasisId b = BasisId::laguerre(a);
          const auto rep = classify_laguerre(s, a);
          const std::string tag = s.to_string() + " alpha " + to_string(a);
          if (rep.verdict.status == Status::kYes) {
            ++yes;
            const auto fuzz = verify_preservation(s, b, cfg);
            o.expect(std::holds_alternative<AllPassed>(fuzz) &&
                         std::get<AllPassed>(fuzz).trials == cfg.trials,
                     "fuzz failure " + tag);
            g_reports.push_back(verify_report(rep, cfg, fuzz));
            g_grid_yes.push_back({s, a, rep});
          } else {
            ++no;
            const auto ce = search_counterexample(s, b, 10);
            o.expect(rep.verdict.status == Status::kNo && ce.has_value(), "no witness " + tag);
            if (ce) worst_cap = std::max(worst_cap, ce->input.poly.degree());
            g_reports.push_back(classify_report(rep));
          }
        }
      }
    }
  }
  o.note << yes + no << " (sequence, alpha) pairs, " << yes << " yes, " << no
         << " no, largest witness degree " << worst_cap;
  o.expect(worst_cap <= 10, "cap above 10");
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> ord(0, 8);
  for (int t = 0; t < 50; ++t) {
    const SequenceSpec s = SequenceSpec::poly(oracle::random_poly(rng, 4, "n"));
    const Rational a = oracle::random_alpha(rng);
    const int n = ord(rng);
    const auto lhs = symbol_basis_form(s, a, n), rhs = symbol_p_form(s, a, n);
    o.expect(lhs.grid == rhs.grid, s.to_string() + " alpha " + to_string(a));
    o.expect(lhs.grid.is_zero() || lhs.grid.y_degree() <= n, "truncation");
    g_reports.push_back(symbol_report(s, BasisId::laguerre(a), n));
  }
  o.note << "50 triples";
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const SequenceSpec s = SequenceSpec::poly(oracle::random_poly(rng, 5, "n"));
    const Rational a = oracle::random_alpha(rng);
    const long order = std::max(s.as_poly().p.degree(), 0) + 4;
    auto expect = build_p(s, a).coeffs();
    expect.resize(static_cast<size_t>(order) + 1);
    o.expect(strs_coefficients(s, a, order) == expect, s.to_string());
  }
  o.note << "50 pairs";
}

void criterion5(Outcome& o) {
  const auto a = classify_hermite(P({1, 1}));
  o.expect(a.verdict.status == Status::kYes, "n+1");
  const auto b = classify_hermite(P({1, -1, 1}));
  o.expect(b.verdict.status == Status::kNo && b.verdict.reason == Reason::kNotClassical &&
               b.q == UniPoly({1, 0, 1}, "y"),
           "n^2-n+1");
  const auto alt = classify_hermite(SequenceSpec::list({1, -2, 3, -4, 5}));
  const auto plain = classify_hermite(SequenceSpec::list({1, 2, 3, 4, 5}));
  o.expect(alt.normalization.alternate && alt.verdict.status == plain.verdict.status &&
               alt.verdict.reason == plain.verdict.reason &&
               classify_report(alt)["certificate"] == classify_report(plain)["certificate"],
           "alternating prefix");
  o.expect(alt.verdict.status == Status::kUndetermined, "alternating prefix undetermined");
  // (-1)^n (n+1) has no polynomial form; a longer complete-free prefix takes the same path.
  std::vector<Rational> v, w;
  for (int n = 0; n < 9; ++n) {
    v.push_back(Rational(n % 2 ? -(n + 1) : n + 1));
    w.push_back(Rational(n + 1));
  }
  o.expect(classify_hermite(SequenceSpec::list(v)).verdict.status ==
               classify_hermite(SequenceSpec::list(w)).verdict.status,
           "longer alternating prefix");
  for (int c : {1, 4, -3}) {
    const auto k = classify_hermite(P({c}));
    o.expect(k.verdict.status == Status::kYes, "constant " + std::to_string(c));
    g_reports.push_back(classify_report(k));
  }
  for (const auto* r : {&a, &b, &alt, &plain}) g_reports.push_back(classify_report(*r));
  o.note << "4 fixtures";
}

void criterion6(Outcome& o) {
  const UniPoly f({0, -1, -1}, "y");
  for (const auto& theta : {Rational(0), frac(1, 4), frac(1, 2), Rational(1)}) {
    o.expect(proper_position(f, UniPoly({theta, 1}, "y")), "theta " + to_string(theta));
  }
  o.expect(proper_position(hermite_polynomial(2), hermite_polynomial(3)), "H2 << H3");
  o.expect(!proper_position(hermite_polynomial(3), hermite_polynomial(2)), "not H3 << H2");
  o.note << "6 fixtures";
}

void criterion7(Outcome& o) {
  int n = 0;
  for (const auto& e : g_grid_yes) {
    const UniPoly p = build_p(e.s, e.alpha);
    const UniPoly q = pencil_q(p, e.alpha);
    const UniPoly w = wronskian(p, q);
    const auto sd = sign_semidefinite_on_reals(w);
    const std::string tag = e.s.to_string() + " alpha " + to_string(e.alpha);
    o.expect(sd == Semidefinite::kNonpositive || sd == Semidefinite::kZero, "W sign " + tag);
    o.expect(pencil_stability(p, e.alpha), "stability " + tag);
    const UniPoly dp = p.derivative();
    const Rational inv = Rational(1) / (1 + e.alpha);
    const UniPoly expanded = -(p * p) +
                             UniPoly({0, 1, 1}, "y") * (dp * dp - p * dp.derivative()) * inv -
                             UniPoly({1, 2}, "y") * p * dp * inv;
    o.expect(expanded == w, "expanded W " + tag);
    ++n;
  }
  o.expect(n > 0, "no yes-verdicts from criterion 2");
  o.note << n << " accepted pairs";
}

void criterion8(Outcome& o) {
  const Rational a = 1;
  std::vector<Rational> v;
  Rational den(1);
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) den *= a + k;
    v.push_back(Rational(1) / den);
  }
  const auto s = SequenceSpec::list(v);
  const auto r = bounded_consistency_test(s, BasisId::monomial(), 6);
  o.expect(std::holds_alternative<Consistent>(r) && std::get<Consistent>(r).cap == 6, "bounded test");
  ClassifyOptions opts;
  opts.degree_cap = 6;
  const auto rep = classify_classical(s, opts);
  o.expect(rep.verdict.status == Status::kUndetermined, "classify");
  g_reports.push_back(classify_report(rep));
  o.note << "prefix of 9, cap 6";
}

void criterion9(Outcome& o) {
  int valid = 0;
  for (const auto& j : g_reports) {
    const auto res = certify(Json::parse(j.dump()));
    if (res.valid) {
      ++valid;
    } else {
      o.expect(false, res.detail);
    }
  }
  // Negative control: move the first root interval of a yes-report off its root.
  Json bad = classify_report(classify_laguerre(P({0, 0, 1}), 1));
  bad["certificate"]["roots"][0]["lo"] = "-1/2";
  bad["certificate"]["roots"][0]["hi"] = "-2/5";
  const bool rejected = !certify(bad).valid;
  o.expect(rejected, "corrupted report accepted");
  o.note << valid << "/" << g_reports.size() << " reports certified, corrupted report "
         << (rejected ? "rejected" : "accepted");
}

void criterion10(Outcome& o) {
  const std::vector<Rational> alphas{0, 1, frac(5, 2), frac(-1, 2), frac(-3, 4)};
  for (const auto& a : alphas) {
    const UniPoly shift{-a - 1, Rational(1)}, x{Rational(0), Rational(1)};
    auto delta = [&](const UniPoly& f) { return shift * f.derivative() - x * f.derivative(2); };
    for (int n = 0; n <= 10; ++n) {
      const UniPoly l = laguerre_polynomial(n, a);
      o.expect(delta(l) == l * Rational(n), "delta L_" + std::to_string(n));
    }
    for (int n = 0; n <= 6; ++n) {
      const UniPoly l = laguerre_polynomial(n, a);
      UniPoly f = l;
      for (int k = 0; k <= n; ++k) {
        if (k > 0) f = (delta(f) - f * Rational(k - 1)) * (Rational(1) / k);
        o.expect(f == l * oracle::choose(n, k), "S_k L_n");
      }
    }
    const auto g = oracle::laguerre_generating(a, 8);
    for (int n = 0; n <= 8; ++n) o.expect(laguerre_polynomial(n, a) == g[n], "Laguerre generating");
  }
  const auto h = oracle::hermite_generating(8);
  for (int n = 0; n <= 8; ++n) o.expect(hermite_polynomial(n) == h[n] * factorial(n), "Hermite generating");
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> c;
    for (int i = 0; i <= 12; ++i) c.push_back(oracle::random_rational(rng, 4, 5));
    if (c.back() == 0) c.back() = 1;
    const UniPoly p(c);
    for (const BasisId& b : {BasisId::monomial(), BasisId::hermite(), BasisId::laguerre(oracle::random_alpha(rng))}) {
      o.expect(assemble_from_basis(expand_in_basis(p, b)) == p, "round trip " + b.name());
    }
  }
  o.note << "eigen, S_k, generating functions, 90 round trips";
}

}  // namespace
}  // namespace multseq

int main() {
  using multseq::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"Laguerre fixture grid", multseq::criterion1},
      {"Laguerre verdicts agree with the transform", multseq::criterion2},
      {"symbol form equivalence", multseq::criterion3},
      {"series identity", multseq::criterion4},
      {"Hermite fixtures", multseq::criterion5},
      {"proper position fixtures", multseq::criterion6},
      {"necessity machinery", multseq::criterion7},
      {"Laguerre's classical sequence", multseq::criterion8},
      {"certificate integrity", multseq::criterion9},
      {"delta operator and basis identities", multseq::criterion10},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s: %s (%s; %.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.note.str().c_str(), s);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
