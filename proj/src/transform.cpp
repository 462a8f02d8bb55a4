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

#include "multseq/transform.hpp"

#include <random>
#include <sstream>

#include "multseq/error.hpp"
#include "multseq/roots.hpp"

namespace multseq {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p{1};
  for (const auto& r : roots) p *= UniPoly::linear_factor(r);
  return p;
}

std::string roots_label(const std::vector<Rational>& roots) {
  std::ostringstream os;
  os << "roots{";
  for (size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << to_string(roots[i]);
  os << "}";
  return os.str();
}

std::vector<Rational> coarse_grid() {
  return {Rational(-3), Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
          Rational(1, 2), Rational(1), Rational(2), Rational(3)};
}

std::vector<Rational> dense_grid() {
  std::vector<Rational> g;
  for (int k = -6; k <= 6; ++k) g.emplace_back(k, 2);
  for (auto& r : g) r.canonicalize();
  return g;
}

// Integer roots leaning towards the positive axis for Laguerre bases, whose
// polynomials have their zeros in (0, inf).
std::vector<Rational> wide_grid(const BasisId& basis) {
  const int lo = basis.kind() == BasisKind::kLaguerre ? -4 : -8;
  const int hi = basis.kind() == BasisKind::kLaguerre ? 16 : 8;
  std::vector<Rational> g;
  for (int k = lo; k <= hi; ++k) g.emplace_back(k);
  return g;
}

constexpr int kWideGridMaxDegree = 3;

// Calls visit(indices) for each size-d combination (or multiset, when
// `repeat`) of {0..n-1} in lexicographic order until visit returns true.
template <typename Visit>
bool for_each_choice(int n, int d, bool repeat, Visit&& visit) {
  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = repeat ? 0 : i;
  if (!repeat && d > n) return false;
  while (true) {
    if (visit(idx)) return true;
    int i = d - 1;
    while (i >= 0) {
      const int limit = repeat ? n - 1 : n - d + i;
      if (idx[static_cast<size_t>(i)] < limit) break;
      --i;
    }
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      idx[static_cast<size_t>(j)] = repeat ? idx[static_cast<size_t>(i)] : idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

DiagonalOperator::DiagonalOperator(const SequenceSpec& s, BasisId basis, int max_degree)
    : table_(std::move(basis), max_degree + 1) {
  if (max_degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative operator degree");
  if (!s.known(max_degree)) {
    throw Error(ErrorCode::kInsufficientPrefix,
                "insufficient prefix: lambda_" + std::to_string(max_degree) + " is required");
  }
  for (int n = 0; n <= max_degree; ++n) lambda_.push_back(s.at(n));
}

UniPoly DiagonalOperator::operator()(const UniPoly& p) const {
  if (p.degree() > max_degree()) {
    throw Error(ErrorCode::kInsufficientPrefix, "insufficient prefix for polynomial degree");
  }
  BasisExpansion e = table_.expand(p);
  for (size_t n = 0; n < e.coefficients.size(); ++n) e.coefficients[n] *= lambda_[n];
  return table_.assemble(e);
}

UniPoly apply_diagonal(const SequenceSpec& s, const BasisId& basis, const UniPoly& p) {
  return DiagonalOperator(s, basis, std::max(p.degree(), 0))(p);
}

std::vector<Rational> FuzzConfig::default_root_grid() {
  std::vector<Rational> g;
  for (int k = -16; k <= 16; ++k) {
    g.emplace_back(k, 4);
    g.back().canonicalize();
  }
  return g;
}

void FuzzConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (max_degree < 1) throw Error(ErrorCode::kInvalidArgument, "max_degree must be >= 1");
  if (root_grid.empty()) throw Error(ErrorCode::kInvalidArgument, "root grid must be nonempty");
}

RootedPoly random_real_rooted(const FuzzConfig& cfg, int trial) {
  cfg.validate();
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
  const int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_degree));
  RootedPoly out;
  for (int i = 0; i < degree; ++i) {
    out.roots.push_back(cfg.root_grid[rng() % cfg.root_grid.size()]);
  }
  const long num = 1 + static_cast<long>(rng() % 5);
  const long den = 1 + static_cast<long>(rng() % 3);
  Rational scale(num, den);
  scale.canonicalize();
  if (rng() % 2) scale = -scale;
  out.poly = from_roots(out.roots) * scale;
  out.label = "trial " + std::to_string(trial) + " " + roots_label(out.roots);
  return out;
}

std::optional<Counterexample> check_image(const DiagonalOperator& op, const RootedPoly& input) {
  UniPoly image = op(input.poly);
  if (image.is_constant()) return std::nullopt;
  const auto [real, degree] = real_root_deficit(image);
  if (real == degree) return std::nullopt;
  return Counterexample{input, std::move(image), real, degree};
}

PreservationResult verify_preservation(const SequenceSpec& s, const BasisId& basis,
                                       const FuzzConfig& cfg) {
  cfg.validate();
  const DiagonalOperator op(s, basis, cfg.max_degree);
  for (int t = 0; t < cfg.trials; ++t) {
    if (auto ce = check_image(op, random_real_rooted(cfg, t))) {
      return PreservationFailure{t, std::move(*ce)};
    }
  }
  return AllPassed{cfg.trials};
}

namespace {

void append_structured(const BasisTable& table, int d, std::vector<RootedPoly>& out) {
  const std::string b = table.basis().name();
  out.push_back({table[d], {}, b + " P_" + std::to_string(d)});
  {
    UniPoly one_plus_x{1, 1};
    UniPoly p{1};
    for (int i = 0; i < d; ++i) p *= one_plus_x;
    out.push_back({p, std::vector<Rational>(static_cast<size_t>(d), Rational(-1)),
                   "(1+x)^" + std::to_string(d)});
  }
  for (int sgn : {1, -1}) {
    UniPoly p = table[d - 1] + table[d] * Rational(sgn);
    if (is_real_rooted(p)) {
      out.push_back({std::move(p), {},
                     b + " P_" + std::to_string(d - 1) + (sgn > 0 ? " + " : " - ") + "P_" + std::to_string(d)});
    }
  }
  const auto grid = coarse_grid();
  for_each_choice(static_cast<int>(grid.size()), d, false, [&](const std::vector<int>& idx) {
    std::vector<Rational> roots;
    for (int i : idx) roots.push_back(grid[static_cast<size_t>(i)]);
    UniPoly p = from_roots(roots);
    out.push_back({std::move(p), roots, roots_label(roots)});
    return false;
  });
}

}  // namespace

std::vector<RootedPoly> structured_family(const BasisId& basis, int cap) {
  std::vector<RootedPoly> out;
  if (cap < 1) return out;
  const BasisTable table(basis, cap + 1);
  out.push_back({table[0], {}, basis.name() + " P_0"});
  for (int d = 1; d <= cap; ++d) append_structured(table, d, out);
  return out;
}

std::optional<Counterexample> search_counterexample(const SequenceSpec& s, const BasisId& basis,
                                                    int degree_cap) {
  if (degree_cap < 1) return std::nullopt;
  const DiagonalOperator op(s, basis, degree_cap);
  const BasisTable table(basis, degree_cap + 1);
  const auto dense = dense_grid();
  const auto wide = wide_grid(basis);
  std::optional<Counterexample> found;
  auto try_roots = [&](const std::vector<Rational>& grid, const std::vector<int>& idx) {
    std::vector<Rational> roots;
    for (int i : idx) roots.push_back(grid[static_cast<size_t>(i)]);
    RootedPoly m{from_roots(roots), roots, roots_label(roots)};
    found = check_image(op, m);
    return found.has_value();
  };
  // Cheap families first, over every degree.
  for (int d = 1; d <= degree_cap; ++d) {
    std::vector<RootedPoly> members;
    append_structured(table, d, members);
    for (const auto& m : members) {
      if (auto ce = check_image(op, m)) return ce;
    }
    // Powers (x - r)^d approximate the symbol e^{-xy} at y = d/r.
    for (int k = -80; k <= 80; ++k) {
      Rational r(k, 2);
      r.canonicalize();
      std::vector<Rational> roots(static_cast<size_t>(d), r);
      RootedPoly m{from_roots(roots), roots, roots_label(roots)};
      if (auto ce = check_image(op, m)) return ce;
    }
  }
  for (int d = 2; d <= std::min(degree_cap, kWideGridMaxDegree); ++d) {
    if (for_each_choice(static_cast<int>(wide.size()), d, true,
                        [&](const std::vector<int>& idx) { return try_roots(wide, idx); })) {
      return found;
    }
  }
  for (int d = 2; d <= degree_cap; ++d) {
    if (for_each_choice(static_cast<int>(dense.size()), d, true,
                        [&](const std::vector<int>& idx) { return try_roots(dense, idx); })) {
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace multseq
