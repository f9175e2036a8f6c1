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

#include "kahn/swap.hpp"

#include <functional>

#include "kahn/errors.hpp"

namespace kahn {

namespace {

void require_empty(const Table& t, std::size_t i, std::size_t b) {
  if (i >= t.rows() || b >= t.cols()) throw CallerBug("cell out of range");
  if (t.at(i, b)) throw CallerBug("target cell must be empty");
}

}  // namespace

std::optional<PlaceDirect> direct_add(const Table& t, std::size_t i, std::size_t b) {
  require_empty(t, i, b);
  const auto& m = t.instance().matroid;
  const SpanTester row = m.tester(t.row_set(i));
  const SpanTester col = m.tester(t.col_set(b));
  for (auto x : t.instance().basis(i, b)) {
    if (row.can_add(x) && col.can_add(x)) return PlaceDirect{i, b, x};
  }
  return std::nullopt;
}

std::vector<SwapColumn> swappable_columns(const Table& t, std::size_t i, std::size_t b) {
  require_empty(t, i, b);
  const auto& m = t.instance().matroid;
  const SpanTester col_b = m.tester(t.col_set(b));
  std::vector<ElementId> candidates;
  for (auto y : t.instance().basis(i, b)) {
    if (col_b.can_add(y)) candidates.push_back(y);
  }
  std::vector<SwapColumn> out;
  for (std::size_t c = 0; c < t.cols(); ++c) {
    if (!t.at(i, c)) continue;
    const SpanTester rest = m.tester(t.row_set(i).without(*t.at(i, c)));
    for (auto y : candidates) {
      if (rest.can_add(y)) {
        out.push_back({c, y});
        break;
      }
    }
  }
  return out;
}

AddableScan addable_elements(const Table& t, std::size_t i, std::size_t b, std::size_t c) {
  require_empty(t, i, b);
  const auto& m = t.instance().matroid;
  const auto& source = t.instance().basis(i, c);
  AddableScan scan;

  if (!t.at(i, c)) {
    const SpanTester row = m.tester(t.row_set(i));
    const SpanTester col = m.tester(t.col_set(c));
    for (auto x : source) {
      if (row.can_add(x) && col.can_add(x)) {
        scan.records.push_back({{i, b}, c, x, std::nullopt, std::nullopt});
      }
    }
    return scan;
  }

  const ElementId displaced = *t.at(i, c);
  const ElementSet rest = t.row_set(i).without(displaced);
  const SpanTester rest_tester = m.tester(rest);
  const SpanTester row = m.tester(t.row_set(i));
  const SpanTester col_b = m.tester(t.col_set(b));

  std::vector<std::optional<ElementId>> witness(source.size());
  for (auto y : t.instance().basis(i, b)) {
    if (!col_b.can_add(y) || !rest_tester.can_add(y)) continue;
    if (!scan.bonus && row.can_add(y)) scan.bonus = PlaceDirect{i, b, y};
    SpanTester swapped = rest_tester;
    swapped.add(y);
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (!witness[k] && swapped.can_add(source[k])) witness[k] = y;
    }
  }
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (witness[k]) scan.records.push_back({{i, b}, c, source[k], witness[k], displaced});
  }
  return scan;
}

RemovalStep RemovableRecord::as_move() const {
  return RemovalStep{add.target.row, add.target.col, add.column,
                     add.x,          add.witness,    removed.row};
}

RemovableScan removable_positions_in_column(const Table& t, std::size_t i,
                                            std::size_t b, std::size_t c) {
  const auto& m = t.instance().matroid;
  const AddableScan addable = addable_elements(t, i, b, c);
  RemovableScan scan;
  if (addable.bonus) scan.direct_increase = *addable.bonus;

  // Column c once T(i,c) has been swapped out.
  const ElementSet after_swap =
      t.at(i, c) ? t.col_set(c).without(*t.at(i, c)) : t.col_set(c);
  const SpanTester column = m.tester(after_swap);
  if (!scan.direct_increase) {
    for (const auto& rec : addable.records) {
      if (!column.can_add(rec.x)) continue;
      if (rec.witness) {
        scan.direct_increase = SimpleSwap{i, b, c, *rec.witness, rec.x};
      } else {
        scan.direct_increase = PlaceDirect{i, c, rec.x};
      }
      break;
    }
  }

  for (std::size_t j = 0; j < t.rows(); ++j) {
    if (j == i || !t.at(j, c)) continue;
    const ElementId occupant = *t.at(j, c);
    const SpanTester freed = m.tester(after_swap.without(occupant));
    for (const auto& rec : addable.records) {
      if (freed.can_add(rec.x)) {
        scan.records.push_back({rec, {j, c}, occupant});
        break;
      }
    }
  }
  return scan;
}

RemovableScan removable_positions(const Table& t, std::size_t i, std::size_t b) {
  require_empty(t, i, b);
  RemovableScan scan;
  for (std::size_t c = 0; c < t.cols(); ++c) {
    auto part = removable_positions_in_column(t, i, b, c);
    if (!scan.direct_increase && part.direct_increase) {
      scan.direct_increase = std::move(part.direct_increase);
    }
    scan.records.insert(scan.records.end(), part.records.begin(), part.records.end());
  }
  return scan;
}

Injection matching_injection(const Table& t, std::size_t i, std::size_t c) {
  const auto& m = t.instance().matroid;
  const ElementSet& row = t.row_set(i);
  const ElementSet& basis = t.instance().basis(i, c);

  std::vector<std::vector<std::size_t>> adjacent(row.size());
  for (std::size_t a = 0; a < row.size(); ++a) {
    const SpanTester rest = m.tester(row.without(row[a]));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (rest.can_add(basis[k])) adjacent[a].push_back(k);
    }
  }

  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(basis.size(), kFree);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> try_augment = [&](std::size_t a) {
    for (auto k : adjacent[a]) {
      if (seen[k]) continue;
      seen[k] = true;
      if (owner[k] == kFree || try_augment(owner[k])) {
        owner[k] = a;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < row.size(); ++a) {
    seen.assign(basis.size(), false);
    if (!try_augment(a)) {
      throw OracleViolation("no injection from row " + std::to_string(i) +
                            " into B(" + std::to_string(i) + "," + std::to_string(c) +
                            "): Hall's condition failed");
    }
  }

  Injection out(row.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (owner[k] != kFree) out[owner[k]] = {row[owner[k]], basis[k]};
  }
  return out;
}

}  // namespace kahn
