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

#include "kahn/claims.hpp"

#include <algorithm>
#include <set>

#include "kahn/errors.hpp"
#include "kahn/swap.hpp"

namespace kahn {

void ClaimTally::merge(const ClaimTally& o) {
  states += o.states;
  many_good_checks += o.many_good_checks;
  many_good_violations += o.many_good_violations;
  add_if_good_checks += o.add_if_good_checks;
  add_if_good_violations += o.add_if_good_violations;
  removability_checks += o.removability_checks;
  removability_violations += o.removability_violations;
  one_addability_checks += o.one_addability_checks;
  one_addability_violations += o.one_addability_violations;
  matching_checks += o.matching_checks;
  matching_failures += o.matching_failures;
  committable_checks += o.committable_checks;
  committable_failures += o.committable_failures;
}

namespace {

bool injection_valid(const Table& t, std::size_t i, std::size_t c, const Injection& phi) {
  const auto& m = t.instance().matroid;
  const ElementSet& row = t.row_set(i);
  if (phi.size() != row.size()) return false;
  std::set<ElementId> images;
  for (const auto& [x, y] : phi) {
    if (!row.contains(x) || !t.instance().basis(i, c).contains(y)) return false;
    if (!images.insert(y).second) return false;
    if (!m.tester(row.without(x)).can_add(y)) return false;
  }
  return true;
}

void check_cell(const Table& t, std::size_t i, std::size_t b, ClaimTally& tally) {
  const auto& m = t.instance().matroid;
  const std::size_t n = t.cols();
  const std::size_t row_size = t.row_size(i);
  const std::size_t col_size = t.col_size(b);
  const SpanTester row = m.tester(t.row_set(i));

  const auto direct = direct_add(t, i, b);
  const auto swappable = swappable_columns(t, i, b);
  if (!direct) {
    ++tally.many_good_checks;
    if (swappable.size() < n - col_size) ++tally.many_good_violations;
  }

  for (const auto& [c, y] : swappable) {
    const auto scan = addable_elements(t, i, b, c);
    const bool bonus = row.can_add(y);
    for (auto x : t.instance().basis(i, c)) {
      if (!row.can_add(x)) continue;
      ++tally.add_if_good_checks;
      const bool listed = std::any_of(scan.records.begin(), scan.records.end(),
                                      [&](const AddableRecord& r) { return r.x == x; });
      if (!bonus && !listed) ++tally.add_if_good_violations;
    }
  }

  bool any_increase = direct.has_value();
  std::size_t removable = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const auto addable = addable_elements(t, i, b, c);
    const auto part = removable_positions_in_column(t, i, b, c);
    any_increase = any_increase || addable.bonus || part.direct_increase;
    removable += part.records.size();

    const ElementSet after_swap =
        t.at(i, c) ? t.col_set(c).without(*t.at(i, c)) : t.col_set(c);
    const SpanTester column = m.tester(after_swap);
    const bool free_fill = std::any_of(addable.records.begin(), addable.records.end(),
                                       [&](const AddableRecord& r) { return column.can_add(r.x); });
    if (!free_fill && !addable.records.empty()) {
      ++tally.removability_checks;
      if (part.records.size() < addable.records.size()) ++tally.removability_violations;
    }

    for (const auto& rec : part.records) {
      ++tally.committable_checks;
      Table probe = t.scratch();
      if (!probe.try_commit(rec.as_move())) ++tally.committable_failures;
    }
  }
  if (!any_increase) {
    ++tally.one_addability_checks;
    if (removable < (n - row_size) * (n - col_size)) ++tally.one_addability_violations;
  }
}

}  // namespace

void check_claims(const Table& t, ClaimTally& tally) {
  ++tally.states;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      ++tally.matching_checks;
      try {
        if (!injection_valid(t, i, c, matching_injection(t, i, c))) ++tally.matching_failures;
      } catch (const OracleViolation&) {
        ++tally.matching_failures;
      }
    }
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (!t.at(i, b)) check_cell(t, i, b, tally);
    }
  }
}

}  // namespace kahn
