// Copyright 2026 The Authors.
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

#ifndef KAHN_CASCADE_HPP_
#define KAHN_CASCADE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "kahn/rational.hpp"
#include "kahn/table.hpp"

namespace kahn {

struct GrowthConstant {
  double value = 0;
  std::size_t maximizer = 1;  // lowest l attaining the maximum
};

// Smallest C with C q^{l-1}/(1-eps) - l - 1 >= C q^l for every l >= 1,
// where q = 1 + eps/2. That is the maximum over l of
// (l+1) / ((1/(1-eps) - q) q^{l-1}).
GrowthConstant compute_C(double epsilon);

struct GrowthParams {
  double epsilon = 0;
  double C = 0;
  std::size_t maximizer = 1;
  std::size_t D = 0;          // ceil(2C + 4)
  std::size_t depth_cap = 0;  // min(f - 1, floor(eps n / 4))
};

GrowthParams growth_params(const Rational& epsilon, std::size_t n, std::size_t f);

// A position freed by a chain of removal steps. Replaying `delta` on the
// base table empties `position`; `columns` lists every column the chain has
// touched, all distinct.
struct CascadeEntry {
  Position position;
  std::vector<RemovalStep> delta;
  std::vector<std::size_t> columns;
};

// Level l of a cascade search: chosen rows i_0..i_l and the positions
// outside them that are cascade-removable with respect to those rows.
struct CascadeState {
  std::vector<std::size_t> rows;
  std::vector<CascadeEntry> q;
  std::vector<std::size_t> q_sizes;  // uncapped |Q| per level
  bool truncated = false;
};

// Replaying `delta` then `terminal` grows the table by one entry.
struct ImprovingCascade {
  std::vector<RemovalStep> delta;
  Move terminal;
  std::vector<std::size_t> rows;
};

struct CascadeExhausted {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> q_sizes;
  bool truncated = false;
};

struct CascadeDiagnostics {
  std::size_t expansions = 0;
  std::size_t matching_checks = 0;
  std::size_t matching_failures = 0;
};

struct CascadeOptions {
  std::size_t q_cap = 0;  // 0 selects 10 n f
  std::size_t depth_cap = 1;
  // Forces the row chosen by the first extension.
  std::optional<std::size_t> first_row;
  // Called with every intermediate table the search materializes.
  std::function<void(const Table&)> on_snapshot;
  // Also compute the injections phi_c on every expanded row.
  bool check_injections = false;
  CascadeDiagnostics* diagnostics = nullptr;
};

using CascadeStep = std::variant<CascadeState, ImprovingCascade, CascadeExhausted>;

// Level 0: every empty cell of row i_0, expanded into Q(i_0).
CascadeStep init_cascade(const Table& t, std::size_t i0, const CascadeOptions& options);

// Picks the unused row holding most of Q and expands each of its positions.
CascadeStep extend_cascade(const Table& t, const CascadeState& state,
                           const CascadeOptions& options);

using CascadeResult = std::variant<ImprovingCascade, CascadeExhausted>;

CascadeResult run_cascade(const Table& t, std::size_t i0, const CascadeOptions& options);

// Commits the delta and then the terminal fill.
void commit_cascade(Table& t, const ImprovingCascade& cascade);

struct RecurrenceLevel {
  std::size_t level = 0;
  double bound = 0;
  std::size_t observed = 0;
  bool held = true;
  bool trivial = false;  // bound <= 0
};

// Compares each |Q_l| with |Q_{l-1}| / (f - l) * (n - f - l) - (l + 1) n.
// Levels with f - l <= 0 are skipped.
std::vector<RecurrenceLevel> check_recurrence(const std::vector<std::size_t>& q_sizes,
                                              std::size_t n, std::size_t f);

}  // namespace kahn

#endif  // KAHN_CASCADE_HPP_
