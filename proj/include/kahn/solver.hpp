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

#ifndef KAHN_SOLVER_HPP_
#define KAHN_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kahn/boost.hpp"
#include "kahn/cascade.hpp"
#include "kahn/claims.hpp"
#include "kahn/instance.hpp"
#include "kahn/table.hpp"

namespace kahn {

struct SolverConfig {
  std::size_t max_iterations = 100000;
  // Cascade depth; unset means max(1, min(f - 1, floor(eps n / 4))).
  std::optional<std::size_t> depth_cap;
  std::size_t q_cap = 0;  // 0 selects 10 n f
  // E-raising rounds per boost call; unset means D.
  std::optional<std::size_t> boost_rounds;
  // Boosts in a row that move entries without growing the table.
  std::size_t max_idle_boosts = 8;
  // Soft wall-clock limit in seconds; 0 disables it (and keeps runs
  // deterministic).
  double time_limit = 0;
  std::uint64_t seed = 0;
  // Treat in-regime failures of the missing-column assignment as fatal.
  bool strict = false;
  std::optional<std::size_t> target;
  // When set, every sampled state (including cascade snapshots) is checked
  // against the local exchange bounds.
  ClaimTally* claims = nullptr;
};

struct CascadeTrace {
  std::size_t start_row = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> q_sizes;
  bool truncated = false;
};

struct BoostEvent {
  BoostKind kind = BoostKind::stalled;
  std::vector<std::size_t> levels;
  std::vector<std::size_t> stars;
};

struct SolverStats {
  std::map<std::string, std::size_t> moves;  // committed moves by variant
  std::size_t iterations = 0;
  std::size_t attempts = 1;
  std::size_t improving_cascades = 0;
  std::size_t exhausted_cascades = 0;
  std::size_t max_cascade_level = 0;
  std::size_t recurrence_levels = 0;
  std::size_t recurrence_misses = 0;
  std::size_t truncated_levels = 0;
  std::vector<CascadeTrace> traces;  // first 32 exhausted runs
  std::vector<BoostEvent> boosts;
  std::size_t q_cap = 0;
  std::size_t depth_cap = 0;
  double C = 0;
  std::size_t D = 0;
};

enum class SolveStatus { reached_t, partial };

const char* status_name(SolveStatus status);

struct Solution {
  Table table;
  std::vector<std::size_t> full;  // L
  std::size_t target = 0;
  SolveStatus status = SolveStatus::partial;
  SolverStats stats;
};

// Grows the table by direct fills, improving cascades and out-star boosts
// until `target` rows are bases or the budgets run out. The filled count
// never decreases within an attempt; one reseeded restart is made when the
// first attempt stalls, and the better attempt is returned.
Solution solve(const Instance& instance, const SolverConfig& config);

struct ClaimsReport {
  ClaimTally tally;
  std::size_t runs = 0;
  std::size_t reached = 0;
};

// Runs solve once per seed with claim checking switched on.
ClaimsReport claims_sweep(const Instance& instance, const SolverConfig& config,
                          const std::vector<std::uint64_t>& seeds);

}  // namespace kahn

#endif  // KAHN_SOLVER_HPP_
