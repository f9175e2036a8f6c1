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

#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "kahn/cascade.hpp"
#include "kahn/errors.hpp"
#include "kahn/swap.hpp"
#include "support.hpp"

using namespace kahn;

namespace {

double scan_C(double eps, std::size_t upto) {
  const double q = 1 + eps / 2;
  double best = 0;
  for (std::size_t l = 1; l <= upto; ++l) {
    best = std::max(best, static_cast<double>(l + 1) /
                              ((1 / (1 - eps) - q) * std::pow(q, static_cast<double>(l) - 1)));
  }
  return best;
}

std::set<Position> positions(const std::vector<CascadeEntry>& q) {
  std::set<Position> out;
  for (const auto& e : q) out.insert(e.position);
  return out;
}

// A row with an empty cell where nothing grows the table directly.
std::optional<std::size_t> stuck_row(const Table& t) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.row_full(i)) continue;
    bool stuck = true;
    for (std::size_t b = 0; b < t.cols() && stuck; ++b) {
      if (t.at(i, b)) continue;
      stuck = !direct_add(t, i, b) && !removable_positions(t, i, b).direct_increase;
    }
    if (stuck) return i;
  }
  return std::nullopt;
}

bool columns_distinct(const std::vector<std::size_t>& cols) {
  return std::set<std::size_t>(cols.begin(), cols.end()).size() == cols.size();
}

void check_improving(const Table& t, const ImprovingCascade& imp) {
  std::vector<std::size_t> cols;
  for (const auto& s : imp.delta) cols.push_back(s.column);
  CHECK(columns_distinct(cols));
  Table copy = t.scratch();
  const auto before = copy.filled();
  commit_cascade(copy, imp);
  CHECK(copy.filled() == before + 1);
  CHECK(copy.derived_sets_consistent());
}

}  // namespace

TEST_CASE("growth constant") {
  const auto half = compute_C(0.5);
  CHECK(half.value == doctest::Approx(scan_C(0.5, 100)).epsilon(1e-12));
  CHECK(std::abs(half.value - 3.4133) < 1e-3);
  CHECK(half.maximizer == 3);
  // l = 3 and l = 4 tie at eps = 1/2.
  CHECK(4.0 / (0.75 * std::pow(1.25, 2)) == doctest::Approx(5.0 / (0.75 * std::pow(1.25, 3))));

  // At eps = 9/10 the l = 2 term 3 / (8.55 * 1.45) beats the l = 1 term 2 / 8.55.
  const auto big = compute_C(0.9);
  CHECK(big.maximizer == 2);
  CHECK(big.value == doctest::Approx(3 / (8.55 * 1.45)).epsilon(1e-12));
  CHECK(big.value > 2 / 8.55);

  for (double eps : {0.05, 0.1, 0.2, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    const auto c = compute_C(eps);
    CHECK(c.value == doctest::Approx(scan_C(eps, 2000)).epsilon(1e-12));
    const double q = 1 + eps / 2;
    // Inequality divided through by q^(l-1) so large l stays finite.
    for (std::size_t l = 1; l <= 10000; ++l) {
      const double slack = c.value / (1 - eps) - c.value * q -
                           static_cast<double>(l + 1) / std::pow(q, static_cast<double>(l) - 1);
      if (slack < -1e-9 * c.value) {
        FAIL_CHECK("eq fails at eps=" << eps << " l=" << l);
        break;
      }
    }
  }
  CHECK_THROWS_AS(compute_C(0), InputError);
  CHECK_THROWS_AS(compute_C(1), InputError);
}

TEST_CASE("growth parameters") {
  const auto p = growth_params(Rational(1, 5), 30, 12);
  CHECK(p.depth_cap == 1);
  CHECK(p.D == static_cast<std::size_t>(std::ceil(2 * p.C + 4)));
  CHECK(p.C == doctest::Approx(compute_C(0.2).value));
  CHECK(growth_params(Rational(1, 2), 40, 3).depth_cap == 2);
  CHECK(growth_params(Rational(1, 2), 40, 20).depth_cap == 5);
  CHECK(growth_params(Rational(1, 5), 6, 2).depth_cap == 0);
  CHECK(growth_params(Rational(1, 2), 16, 1).depth_cap == 0);
}

TEST_CASE("recurrence diagnostic") {
  const auto lv = check_recurrence({60, 40}, 30, 12);
  REQUIRE(lv.size() == 1);
  CHECK(lv[0].bound == doctest::Approx(60.0 / 11 * 17 - 60));
  CHECK(lv[0].bound == doctest::Approx(32.727).epsilon(1e-4));
  CHECK(lv[0].held);
  CHECK_FALSE(lv[0].trivial);

  const auto bad = check_recurrence({60, 10}, 30, 12);
  CHECK_FALSE(bad[0].held);

  const auto trivial = check_recurrence({5, 0}, 8, 3);
  CHECK(trivial[0].trivial);
  CHECK(trivial[0].held);
  CHECK(check_recurrence({5}, 8, 3).empty());
  CHECK(check_recurrence({5, 1, 1}, 8, 2).size() == 1);
}

TEST_CASE("init_cascade preconditions") {
  const auto inst = gen_linear_random(2, 2, 1, Rational(1, 5), 0);
  Table t(inst);
  t.commit(*direct_add(t, 0, 0));
  t.commit(*direct_add(t, 0, 1));
  CHECK_THROWS_AS(init_cascade(t, 0, {}), CallerBug);
  CHECK_THROWS_AS(init_cascade(t, 3, {}), CallerBug);
}

TEST_CASE("init_cascade returns a direct fill when one exists") {
  const auto inst = gen_linear_random(2, 4, 2, Rational(1, 5), 1);
  Table t(inst);
  const auto step = init_cascade(t, 0, {});
  const auto* imp = std::get_if<ImprovingCascade>(&step);
  REQUIRE(imp);
  CHECK(imp->delta.empty());
  check_improving(t, *imp);
}

TEST_CASE("level 0 matches brute removal enumeration") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto inst = seed % 2 ? test::same_basis_instance(4 + seed % 3, 4 + seed % 3)
                               : test::repeated_bases_instance(2, 4, 4, 2, seed);
    Table t(inst);
    test::greedy_fill(t, seed);
    const auto row = stuck_row(t);
    if (!row) continue;
    const auto step = init_cascade(t, *row, {});
    const auto* state = std::get_if<CascadeState>(&step);
    REQUIRE(state);
    std::set<Position> want;
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (t.at(*row, b)) continue;
      for (const auto& r : test::brute_removable(t, *row, b)) want.insert(r.removed);
      if (t.row_size(*row) == t.cols() - 1) {
        std::set<Position> lib;
        for (const auto& r : removable_positions(t, *row, b).records) lib.insert(r.removed);
        CHECK(positions(state->q) == lib);
      }
    }
    CHECK(positions(state->q) == want);
    CHECK(state->q_sizes.front() == want.size());
    for (const auto& e : state->q) {
      CHECK(e.position.row != *row);
      CHECK(e.delta.size() == 1);
      CHECK(columns_distinct(e.columns));
    }
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("level 1 matches brute expansion over snapshots") {
  std::size_t compared = 0;
  std::size_t improving = 0;
  for (std::uint64_t seed = 0; seed < 400 && compared < 10; ++seed) {
    const auto inst = seed % 2 ? test::same_basis_instance(6 + seed % 3, 6 + seed % 3)
                               : test::repeated_bases_instance(2, 6, 6, 2, seed);
    Table t(inst);
    test::greedy_fill(t, seed);
    const auto row = stuck_row(t);
    if (!row) continue;
    const auto step = init_cascade(t, *row, {});
    const auto* state = std::get_if<CascadeState>(&step);
    if (!state || state->q.empty()) continue;

    // Row holding most of Q, lowest id on ties.
    std::map<std::size_t, std::size_t> count;
    for (const auto& e : state->q) ++count[e.position.row];
    std::size_t chosen = 0, best = 0;
    for (auto [r, k] : count) {
      if (k > best) {
        best = k;
        chosen = r;
      }
    }

    const auto next = extend_cascade(t, *state, {});
    if (const auto* imp = std::get_if<ImprovingCascade>(&next)) {
      CHECK(imp->rows == std::vector<std::size_t>{*row, chosen});
      check_improving(t, *imp);
      ++improving;
      continue;
    }
    const auto* level = std::get_if<CascadeState>(&next);
    REQUIRE(level);
    CHECK(level->rows == std::vector<std::size_t>{*row, chosen});
    std::set<Position> want;
    for (const auto& e : state->q) {
      if (e.position.row != chosen) continue;
      Table snap = t.scratch();
      for (const auto& s : e.delta) snap.commit(s);
      const auto [r, c] = e.position;
      REQUIRE_FALSE(direct_add(snap, r, c));
      for (const auto& rec : test::brute_removable(snap, r, c)) {
        if (rec.removed.row == *row || rec.removed.row == chosen) continue;
        if (std::find(e.columns.begin(), e.columns.end(), rec.removed.col) != e.columns.end()) {
          continue;
        }
        want.insert(rec.removed);
      }
    }
    CHECK(positions(level->q) == want);
    for (const auto& e : level->q) {
      CHECK(e.delta.size() == 2);
      CHECK(columns_distinct(e.columns));
      CHECK(e.position.row != *row);
      CHECK(e.position.row != chosen);
    }
    ++compared;
  }
  CHECK(compared + improving > 0);
  MESSAGE("level-1 comparisons: " << compared << ", improving at level 1: " << improving);
}

TEST_CASE("improving cascades on repeated-basis grids") {
  std::size_t found = 0;
  std::size_t stuck = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = test::same_basis_instance(6, 4 + seed % 3);
    Table t(inst);
    test::greedy_fill(t, seed);
    const auto row = stuck_row(t);
    if (!row) continue;
    ++stuck;
    CascadeOptions opts;
    opts.depth_cap = 2;
    const auto result = run_cascade(t, *row, opts);
    if (const auto* imp = std::get_if<ImprovingCascade>(&result)) {
      ++found;
      CHECK(imp->rows.front() == *row);
      check_improving(t, *imp);
    } else {
      const auto& done = std::get<CascadeExhausted>(result);
      CHECK_FALSE(done.q_sizes.empty());
    }
  }
  CHECK(stuck > 0);
  CHECK(found > 0);
  MESSAGE("stuck states: " << stuck << ", improving cascades: " << found);
}

TEST_CASE("Q cap truncates but reports the full size") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = test::same_basis_instance(6, 5);
    Table t(inst);
    test::greedy_fill(t, seed);
    const auto row = stuck_row(t);
    if (!row) continue;
    const auto full = init_cascade(t, *row, {});
    const auto* state = std::get_if<CascadeState>(&full);
    if (!state || state->q.size() < 2) continue;
    CascadeOptions opts;
    opts.q_cap = 1;
    const auto capped = std::get<CascadeState>(init_cascade(t, *row, opts));
    CHECK(capped.truncated);
    CHECK(capped.q.size() == 1);
    CHECK(capped.q_sizes == state->q_sizes);
    CHECK(capped.q.front().position == state->q.front().position);
    return;
  }
  FAIL("no state with |Q| >= 2");
}

TEST_CASE("snapshots and injections are reported") {
  const auto inst = test::same_basis_instance(6, 5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Table t(inst);
    test::greedy_fill(t, seed);
    const auto row = stuck_row(t);
    if (!row) continue;
    std::size_t seen = 0;
    CascadeDiagnostics diag;
    CascadeOptions opts;
    opts.on_snapshot = [&](const Table& snap) {
      ++seen;
      CHECK(snap.derived_sets_consistent());
    };
    opts.check_injections = true;
    opts.diagnostics = &diag;
    opts.depth_cap = 2;
    const auto a = run_cascade(t, *row, opts);
    CHECK(seen > 0);
    CHECK(diag.expansions == seen);
    CHECK(diag.matching_checks > 0);
    CHECK(diag.matching_failures == 0);
    const auto b = run_cascade(t, *row, {});
    CHECK(a.index() == b.index());
    return;
  }
  FAIL("no stuck state");
}
