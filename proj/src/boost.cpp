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

#include "kahn/boost.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kahn/errors.hpp"

namespace kahn {

MissingAssignment assign_distinct_missing(Table& t) {
  const std::size_t f = t.rows();
  const std::size_t n = t.cols();
  if (f > n) throw InfeasibleError("more rows than columns: no distinct missing columns");
  MissingAssignment out;
  out.column.assign(f, 0);
  std::vector<bool> used(n, false);

  for (std::size_t i = 0; i < f; ++i) {
    std::optional<std::size_t> chosen;
    if (t.row_full(i)) {
      for (std::size_t c = 0; c < n && !chosen; ++c) {
        if (!used[c]) chosen = c;
      }
    } else {
      for (std::size_t c = 0; c < n && !chosen; ++c) {
        if (!t.at(i, c) && !used[c]) chosen = c;
      }
      for (std::size_t c = 0; c < n && !chosen; ++c) {
        if (t.at(i, c)) continue;
        if (auto direct = direct_add(t, i, c)) {
          t.commit(*direct);
          out.increased = true;
          return out;
        }
        for (const auto& sw : swappable_columns(t, i, c)) {
          if (used[sw.column]) continue;
          t.commit(SimpleSwap{i, c, sw.column, sw.witness, std::nullopt});
          chosen = sw.column;
          break;
        }
      }
    }
    if (!chosen) {
      throw InfeasibleError("row " + std::to_string(i) + " has no unused swappable column");
    }
    out.column[i] = *chosen;
    used[*chosen] = true;
  }
  return out;
}

namespace {

std::size_t missing(const Table& t, std::size_t i) { return t.cols() - t.row_size(i); }

double level_threshold(const GrowthParams& params, std::size_t E, std::size_t n) {
  const double d = static_cast<double>(params.D);
  return std::pow(params.epsilon / (4 * d * d), static_cast<double>(E)) * static_cast<double>(n);
}

}  // namespace

ELevel compute_E(const Table& t, const GrowthParams& params) {
  std::size_t most = 0;
  for (std::size_t i = 0; i < t.rows(); ++i) most = std::max(most, missing(t, i));
  if (most == 0) throw CallerBug("compute_E needs a row with a missing entry");

  std::size_t best = 1;
  for (std::size_t E = 1; E <= most; ++E) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) count += missing(t, i) >= E;
    const double needed = std::max(1.0, std::ceil(level_threshold(params, E, t.cols())));
    if (static_cast<double>(count) >= needed) best = E;
  }
  const std::size_t upper = params.D > 1 ? params.D - 1 : 1;
  ELevel out;
  out.E = std::clamp<std::size_t>(best, 1, upper);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (missing(t, i) >= out.E) out.rows.push_back(i);
  }
  return out;
}

bool BoostDigraph::has_arc(std::size_t from, std::size_t to) const {
  return std::binary_search(out[from].begin(), out[from].end(), to);
}

std::size_t BoostDigraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& v : out) total += v.size();
  return total;
}

BoostDigraph build_digraph(const Table& t, const MissingAssignment& assignment,
                           std::size_t E, const GrowthParams& params) {
  const std::size_t f = t.rows();
  BoostDigraph g;
  g.vertices = f;
  g.level = E;
  g.threshold = level_threshold(params, E, t.cols());
  g.out.assign(f, {});
  g.removable.assign(f, std::vector<std::vector<RemovableRecord>>(f));

  for (std::size_t i = 0; i < f; ++i) {
    if (t.row_full(i)) continue;
    const std::size_t b = assignment.column.at(i);
    if (t.at(i, b)) throw CallerBug("assigned missing column is filled");
    auto scan = removable_positions(t, i, b);
    if (!g.direct_increase && scan.direct_increase) g.direct_increase = scan.direct_increase;
    for (auto& rec : scan.records) g.removable[i][rec.removed.row].push_back(std::move(rec));
  }
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t i = 0; i < f; ++i) {
      if (i == j || t.row_full(i) || missing(t, i) < E) continue;
      if (g.removable[i][j].size() >= E + 1) g.out[j].push_back(i);
    }
  }
  return g;
}

std::vector<OutStar> find_out_stars(const BoostDigraph& g, std::size_t k) {
  if (k == 0) throw CallerBug("out-star size must be positive");
  std::vector<bool> alive(g.vertices, true);
  std::vector<OutStar> stars;
  for (std::size_t v = 0; v < g.vertices; ++v) {
    if (!alive[v]) continue;
    OutStar star{v, {}};
    for (auto w : g.out[v]) {
      if (w != v && alive[w]) star.leaves.push_back(w);
      if (star.leaves.size() == k) break;
    }
    if (star.leaves.size() < k) continue;
    alive[v] = false;
    for (auto w : star.leaves) alive[w] = false;
    stars.push_back(std::move(star));
  }
  return stars;
}

std::size_t apply_out_star(Table& t, const OutStar& star, const BoostDigraph& g,
                           const MissingAssignment& assignment) {
  Table work = t.scratch();
  std::set<Position> taken;
  std::vector<RemovalStep> steps;

  auto take_first = [&](const std::vector<RemovableRecord>& candidates) {
    for (const auto& rec : candidates) {
      if (rec.removed.row != star.centre || taken.count(rec.removed)) continue;
      const auto step = rec.as_move();
      if (!work.try_commit(step)) continue;
      taken.insert(rec.removed);
      steps.push_back(step);
      return true;
    }
    return false;
  };

  for (auto leaf : star.leaves) {
    if (take_first(g.removable[leaf][star.centre])) continue;
    // An earlier leaf's step changed a column this leaf relied on.
    const std::size_t b = assignment.column.at(leaf);
    if (!work.at(leaf, b)) continue;
    take_first(removable_positions(work, leaf, b).records);
  }
  if (!steps.empty()) t.commit(Transfer{steps});
  return steps.size();
}

const char* boost_name(BoostKind kind) {
  switch (kind) {
    case BoostKind::increased:
      return "increased";
    case BoostKind::row_with_d:
      return "row_with_d";
    case BoostKind::pair_with_d:
      return "pair_with_d";
    case BoostKind::progressed:
      return "progressed";
    case BoostKind::stalled:
      return "stalled";
  }
  return "?";
}

BoostOutcome boost(Table& t, const GrowthParams& params, std::size_t max_rounds,
                   bool strict) {
  BoostOutcome outcome;
  const std::size_t rounds = std::min(max_rounds, std::max<std::size_t>(params.D, 1));
  bool moved = false;

  for (std::size_t round = 0; round < rounds; ++round) {
    MissingAssignment assignment;
    try {
      assignment = assign_distinct_missing(t);
    } catch (const InfeasibleError&) {
      if (strict) throw;
      break;
    }
    if (assignment.increased) {
      outcome.kind = BoostKind::increased;
      return outcome;
    }

    std::optional<std::size_t> deep;
    bool any_missing = false;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      any_missing = any_missing || !t.row_full(i);
      if (!deep && missing(t, i) >= params.D) deep = i;
    }
    if (deep) {
      outcome.kind = BoostKind::row_with_d;
      outcome.row = *deep;
      return outcome;
    }
    if (!any_missing) break;

    const auto level = compute_E(t, params);
    const auto g = build_digraph(t, assignment, level.E, params);
    if (g.direct_increase && t.try_commit(*g.direct_increase)) {
      outcome.kind = BoostKind::increased;
      return outcome;
    }
    for (std::size_t i0 = 0; i0 < t.rows(); ++i0) {
      for (std::size_t i1 = 0; i1 < t.rows(); ++i1) {
        if (i0 != i1 && g.removable[i0][i1].size() >= params.D) {
          outcome.kind = BoostKind::pair_with_d;
          outcome.row = i0;
          outcome.second_row = i1;
          return outcome;
        }
      }
    }

    outcome.levels.push_back(level.E);
    std::size_t applied = 0;
    for (const auto& star : find_out_stars(g, level.E + 1)) {
      if (apply_out_star(t, star, g, assignment) > 0) ++applied;
    }
    outcome.stars.push_back(applied);
    if (applied == 0) break;
    moved = true;
  }
  outcome.kind = moved ? BoostKind::progressed : BoostKind::stalled;
  return outcome;
}

}  // namespace kahn
