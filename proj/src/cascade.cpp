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

#include "kahn/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kahn/errors.hpp"
#include "kahn/swap.hpp"

namespace kahn {

GrowthConstant compute_C(double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw InputError("epsilon must lie in (0,1)");
  const double q = 1 + epsilon / 2;
  const double gap = 1 / (1 - epsilon) - q;
  // Successive terms have ratio (l+2) / ((l+1) q), which decreases in l.
  std::size_t l = 1;
  while (static_cast<double>(l + 2) > static_cast<double>(l + 1) * q) ++l;
  GrowthConstant out;
  out.maximizer = l;
  out.value = static_cast<double>(l + 1) / (gap * std::pow(q, static_cast<double>(l - 1)));
  return out;
}

GrowthParams growth_params(const Rational& epsilon, std::size_t n, std::size_t f) {
  GrowthParams p;
  p.epsilon = epsilon.to_double();
  const auto c = compute_C(p.epsilon);
  p.C = c.value;
  p.maximizer = c.maximizer;
  p.D = static_cast<std::size_t>(std::ceil(2 * p.C + 4));
  const auto quarter = floor_div(epsilon.num() * static_cast<std::int64_t>(n), 4 * epsilon.den());
  const std::size_t rows_left = f == 0 ? 0 : f - 1;
  p.depth_cap = std::min(rows_left, static_cast<std::size_t>(std::max<std::int64_t>(quarter, 0)));
  return p;
}

namespace {

struct Expansion {
  std::optional<ImprovingCascade> improving;
  std::vector<CascadeEntry> next;
};

std::size_t effective_cap(const Table& t, const CascadeOptions& options) {
  return options.q_cap ? options.q_cap : 10 * t.rows() * t.cols();
}

Expansion expand(const Table& t, const CascadeEntry& entry,
                 const std::vector<std::size_t>& excluded_rows,
                 const CascadeOptions& options) {
  Expansion out;
  Table snap = t.scratch();
  for (const auto& step : entry.delta) {
    if (!snap.try_commit(step)) return out;
  }
  const auto [r, c] = entry.position;
  if (snap.at(r, c)) return out;
  if (options.diagnostics) ++options.diagnostics->expansions;
  if (options.on_snapshot) options.on_snapshot(snap);

  if (auto direct = direct_add(snap, r, c)) {
    out.improving = ImprovingCascade{entry.delta, *direct, {}};
    return out;
  }
  auto scan = removable_positions(snap, r, c);
  if (scan.direct_increase) {
    out.improving = ImprovingCascade{entry.delta, *scan.direct_increase, {}};
    return out;
  }

  if (options.check_injections && options.diagnostics) {
    for (std::size_t col = 0; col < snap.cols(); ++col) {
      ++options.diagnostics->matching_checks;
      try {
        matching_injection(snap, r, col);
      } catch (const OracleViolation&) {
        ++options.diagnostics->matching_failures;
      }
    }
  }

  for (const auto& rec : scan.records) {
    const auto [j, col] = rec.removed;
    if (std::find(excluded_rows.begin(), excluded_rows.end(), j) != excluded_rows.end()) continue;
    if (std::find(entry.columns.begin(), entry.columns.end(), col) != entry.columns.end()) continue;
    CascadeEntry next{rec.removed, entry.delta, entry.columns};
    next.delta.push_back(rec.as_move());
    next.columns.push_back(col);
    out.next.push_back(std::move(next));
  }
  return out;
}

// Keeps one cascade per position (first found), ordered by position and
// capped. Returns the uncapped size.
std::size_t merge_level(std::vector<CascadeEntry> found, std::size_t cap,
                        std::vector<CascadeEntry>& q, bool& truncated) {
  std::map<Position, CascadeEntry> unique;
  for (auto& e : found) unique.try_emplace(e.position, std::move(e));
  const std::size_t size = unique.size();
  q.clear();
  for (auto& [pos, e] : unique) {
    if (q.size() == cap) {
      truncated = true;
      break;
    }
    q.push_back(std::move(e));
  }
  return size;
}

}  // namespace

CascadeStep init_cascade(const Table& t, std::size_t i0, const CascadeOptions& options) {
  if (i0 >= t.rows()) throw CallerBug("row out of range");
  if (t.row_full(i0)) throw CallerBug("init_cascade needs a row with an empty cell");
  const std::vector<std::size_t> rows{i0};
  std::vector<CascadeEntry> found;
  for (std::size_t c = 0; c < t.cols(); ++c) {
    if (t.at(i0, c)) continue;
    auto ex = expand(t, CascadeEntry{{i0, c}, {}, {c}}, rows, options);
    if (ex.improving) {
      ex.improving->rows = rows;
      return std::move(*ex.improving);
    }
    std::move(ex.next.begin(), ex.next.end(), std::back_inserter(found));
  }
  CascadeState state;
  state.rows = rows;
  state.q_sizes.push_back(merge_level(std::move(found), effective_cap(t, options), state.q,
                                      state.truncated));
  return state;
}

CascadeStep extend_cascade(const Table& t, const CascadeState& state,
                           const CascadeOptions& options) {
  std::vector<std::size_t> count(t.rows(), 0);
  for (const auto& e : state.q) ++count[e.position.row];
  for (auto r : state.rows) count[r] = 0;

  std::optional<std::size_t> chosen;
  if (options.first_row && state.rows.size() == 1) {
    if (*options.first_row < t.rows() && count[*options.first_row] > 0) chosen = options.first_row;
  } else {
    std::size_t best = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (count[r] > best) {
        best = count[r];
        chosen = r;
      }
    }
  }
  if (!chosen) return CascadeExhausted{state.rows, state.q_sizes, state.truncated};

  std::vector<std::size_t> rows = state.rows;
  rows.push_back(*chosen);
  std::vector<CascadeEntry> found;
  for (const auto& e : state.q) {
    if (e.position.row != *chosen) continue;
    auto ex = expand(t, e, rows, options);
    if (ex.improving) {
      ex.improving->rows = rows;
      return std::move(*ex.improving);
    }
    std::move(ex.next.begin(), ex.next.end(), std::back_inserter(found));
  }
  CascadeState next;
  next.rows = std::move(rows);
  next.q_sizes = state.q_sizes;
  next.truncated = state.truncated;
  next.q_sizes.push_back(
      merge_level(std::move(found), effective_cap(t, options), next.q, next.truncated));
  return next;
}

CascadeResult run_cascade(const Table& t, std::size_t i0, const CascadeOptions& options) {
  auto step = init_cascade(t, i0, options);
  for (std::size_t level = 1;; ++level) {
    if (auto* improving = std::get_if<ImprovingCascade>(&step)) return std::move(*improving);
    if (auto* done = std::get_if<CascadeExhausted>(&step)) return std::move(*done);
    auto& state = std::get<CascadeState>(step);
    if (level > options.depth_cap || state.q.empty()) {
      return CascadeExhausted{state.rows, state.q_sizes, state.truncated};
    }
    step = extend_cascade(t, state, options);
  }
}

void commit_cascade(Table& t, const ImprovingCascade& cascade) {
  for (const auto& step : cascade.delta) t.commit(step);
  t.commit(cascade.terminal);
}

std::vector<RecurrenceLevel> check_recurrence(const std::vector<std::size_t>& q_sizes,
                                              std::size_t n, std::size_t f) {
  std::vector<RecurrenceLevel> out;
  for (std::size_t l = 1; l < q_sizes.size(); ++l) {
    if (f <= l) continue;
    RecurrenceLevel level;
    level.level = l;
    level.bound = static_cast<double>(q_sizes[l - 1]) / static_cast<double>(f - l) *
                      (static_cast<double>(n) - static_cast<double>(f) - static_cast<double>(l)) -
                  static_cast<double>((l + 1) * n);
    level.observed = q_sizes[l];
    level.trivial = level.bound <= 0;
    level.held = level.trivial || static_cast<double>(level.observed) >= level.bound;
    out.push_back(level);
  }
  return out;
}

}  // namespace kahn
