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

#include "kahn/solver.hpp"

#include <algorithm>
#include <chrono>

#include "kahn/errors.hpp"
#include "kahn/rng.hpp"
#include "kahn/swap.hpp"

namespace kahn {

const char* status_name(SolveStatus status) {
  return status == SolveStatus::reached_t ? "reached_t" : "partial";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxTraces = 32;

class Attempt {
 public:
  Attempt(const Instance& instance, const SolverConfig& config, SolverStats& stats,
          Clock::time_point start)
      : instance_(instance), config_(config), stats_(stats), start_(start) {
    params_ = growth_params(instance.epsilon, instance.n, instance.f);
    stats_.C = params_.C;
    stats_.D = params_.D;
    options_.q_cap = config.q_cap ? config.q_cap : 10 * instance.n * instance.f;
    options_.depth_cap = config.depth_cap.value_or(std::max<std::size_t>(1, params_.depth_cap));
    stats_.q_cap = options_.q_cap;
    stats_.depth_cap = options_.depth_cap;
    if (config.claims) {
      ClaimTally* tally = config.claims;
      options_.on_snapshot = [tally](const Table& snap) { check_claims(snap, *tally); };
    }
    target_ = config.target.value_or(instance.target_rows());
  }

  std::size_t target() const { return target_; }

  bool out_of_budget() const {
    if (stats_.iterations >= config_.max_iterations) return true;
    if (config_.time_limit <= 0) return false;
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    return elapsed.count() >= config_.time_limit;
  }

  SolveStatus run(Table& t, const std::vector<std::size_t>& row_order,
                  const std::vector<Position>& cell_order) {
    std::size_t idle = 0;
    while (!out_of_budget()) {
      ++stats_.iterations;
      const std::size_t before = t.filled();
      fill_direct(t, cell_order);
      if (reached(t)) return SolveStatus::reached_t;
      if (config_.claims) check_claims(t, *config_.claims);

      if (cascade_any(t, row_order)) {
        idle = 0;
        continue;
      }

      const std::size_t rounds = config_.boost_rounds.value_or(params_.D);
      const auto outcome = boost(t, params_, rounds, config_.strict && instance_.in_regime());
      stats_.boosts.push_back({outcome.kind, outcome.levels, outcome.stars});
      if (reached(t)) return SolveStatus::reached_t;

      bool grew = false;
      switch (outcome.kind) {
        case BoostKind::increased:
          grew = true;
          break;
        case BoostKind::row_with_d:
        case BoostKind::pair_with_d: {
          CascadeOptions seeded = options_;
          if (outcome.kind == BoostKind::pair_with_d) seeded.first_row = outcome.second_row;
          grew = cascade_from(t, outcome.row, seeded);
          break;
        }
        case BoostKind::progressed:
          break;
        case BoostKind::stalled:
          return SolveStatus::partial;
      }
      if (t.filled() < before) throw OracleViolation("table shrank during a solver iteration");
      idle = grew ? 0 : idle + 1;
      if (idle > config_.max_idle_boosts) return SolveStatus::partial;
    }
    return SolveStatus::partial;
  }

 private:
  bool reached(const Table& t) const { return full_rows(t).size() >= target_; }

  void fill_direct(Table& t, const std::vector<Position>& order) {
    // Filling a cell only shrinks the options elsewhere, so one pass is
    // exhaustive.
    for (const auto& [i, j] : order) {
      if (t.at(i, j)) continue;
      if (auto move = direct_add(t, i, j)) {
        t.commit(*move);
        if (config_.claims) check_claims(t, *config_.claims);
      }
    }
  }

  bool cascade_from(Table& t, std::size_t row, const CascadeOptions& options) {
    if (t.row_full(row)) return false;
    auto result = run_cascade(t, row, options);
    if (auto* improving = std::get_if<ImprovingCascade>(&result)) {
      commit_cascade(t, *improving);
      ++stats_.improving_cascades;
      stats_.max_cascade_level =
          std::max(stats_.max_cascade_level, improving->rows.size() - 1);
      return true;
    }
    const auto& done = std::get<CascadeExhausted>(result);
    ++stats_.exhausted_cascades;
    if (done.truncated) ++stats_.truncated_levels;
    for (const auto& level : check_recurrence(done.q_sizes, t.cols(), t.rows())) {
      ++stats_.recurrence_levels;
      if (!level.held) ++stats_.recurrence_misses;
    }
    if (stats_.traces.size() < kMaxTraces) {
      stats_.traces.push_back({row, done.rows, done.q_sizes, done.truncated});
    }
    return false;
  }

  bool cascade_any(Table& t, const std::vector<std::size_t>& row_order) {
    for (auto r : row_order) {
      if (cascade_from(t, r, options_)) return true;
    }
    return false;
  }

  const Instance& instance_;
  const SolverConfig& config_;
  SolverStats& stats_;
  Clock::time_point start_;
  GrowthParams params_;
  CascadeOptions options_;
  std::size_t target_ = 0;
};

bool better(const Table& a, const Table& b) {
  const auto fa = full_rows(a).size();
  const auto fb = full_rows(b).size();
  return fa != fb ? fa > fb : a.filled() > b.filled();
}

}  // namespace

Solution solve(const Instance& instance, const SolverConfig& config) {
  const auto start = Clock::now();
  SolverStats stats;
  Attempt attempt(instance, config, stats, start);

  std::vector<std::size_t> row_order(instance.f);
  for (std::size_t i = 0; i < instance.f; ++i) row_order[i] = i;
  std::vector<Position> cell_order;
  for (std::size_t i = 0; i < instance.f; ++i) {
    for (std::size_t j = 0; j < instance.n; ++j) cell_order.push_back({i, j});
  }

  Table table(instance);
  SolveStatus status = attempt.run(table, row_order, cell_order);

  if (status == SolveStatus::partial && !attempt.out_of_budget()) {
    Rng rng(config.seed);
    rng.shuffle(row_order);
    std::vector<std::size_t> col_order(instance.n);
    for (std::size_t j = 0; j < instance.n; ++j) col_order[j] = j;
    rng.shuffle(col_order);
    cell_order.clear();
    for (auto i : row_order) {
      for (auto j : col_order) cell_order.push_back({i, j});
    }
    stats.attempts = 2;
    Table retry(instance);
    const SolveStatus second = attempt.run(retry, row_order, cell_order);
    if (second == SolveStatus::reached_t || better(retry, table)) {
      table = std::move(retry);
      status = second;
    }
  }

  for (const auto& move : table.log()) ++stats.moves[move_name(move)];
  Solution solution{std::move(table), {}, attempt.target(), status, std::move(stats)};
  solution.full = full_rows(solution.table);
  return solution;
}

ClaimsReport claims_sweep(const Instance& instance, const SolverConfig& config,
                          const std::vector<std::uint64_t>& seeds) {
  ClaimsReport report;
  for (auto seed : seeds) {
    SolverConfig run = config;
    run.seed = seed;
    ClaimTally tally;
    run.claims = &tally;
    const auto solution = solve(instance, run);
    report.tally.merge(tally);
    ++report.runs;
    if (solution.status == SolveStatus::reached_t) ++report.reached;
  }
  return report;
}

}  // namespace kahn
