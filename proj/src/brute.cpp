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

#include "kahn/brute.hpp"

#include <string>
#include <vector>

#include "kahn/errors.hpp"
#include "kahn/swap.hpp"

namespace kahn {

namespace {

class Search {
 public:
  Search(const Instance& instance, std::size_t guard)
      : instance_(instance),
        guard_(guard),
        cells_(instance.f, std::vector<std::optional<ElementId>>(instance.n)),
        columns_(instance.n) {}

  std::size_t nodes() const { return nodes_; }
  std::size_t best() const { return best_; }
  const Cells& best_cells() const { return best_cells_; }

  // Rows i.. either become bases or are skipped; skipped rows can always be
  // completed later because every column keeps fewer than n entries.
  void max_rows(std::size_t i, std::size_t count) {
    const std::size_t f = instance_.f;
    if (done_ || (found_ && count + (f - i) <= best_)) return;
    if (i == f) {
      best_ = count;
      found_ = true;
      best_cells_ = cells_;
      done_ = count == f;
      return;
    }
    fill_row(i, 0, instance_.matroid.tester(), [&] { max_rows(i + 1, count + 1); });
    max_rows(i + 1, count);
  }

  // Every row a basis; stops at the first success.
  bool full(std::size_t i) {
    if (i == instance_.f) {
      best_cells_ = cells_;
      done_ = true;
    } else {
      fill_row(i, 0, instance_.matroid.tester(), [&] { full(i + 1); });
    }
    return done_;
  }

 private:
  template <typename Next>
  void fill_row(std::size_t i, std::size_t j, const SpanTester& row, const Next& next) {
    if (j == instance_.n) {
      next();
      return;
    }
    const SpanTester column = instance_.matroid.tester(columns_[j]);
    for (auto x : instance_.basis(i, j)) {
      if (done_) return;
      if (++nodes_ > guard_) {
        throw GuardExceeded("search exceeded " + std::to_string(guard_) + " node expansions");
      }
      if (!row.can_add(x) || !column.can_add(x)) continue;
      SpanTester extended = row;
      extended.add(x);
      cells_[i][j] = x;
      columns_[j].push_back(x);
      fill_row(i, j + 1, extended, next);
      columns_[j].pop_back();
      cells_[i][j].reset();
    }
  }

  const Instance& instance_;
  std::size_t guard_;
  std::size_t nodes_ = 0;
  bool done_ = false;
  Cells cells_;
  std::vector<std::vector<ElementId>> columns_;
  std::size_t best_ = 0;
  bool found_ = false;
  Cells best_cells_;
};

Table materialize(const Instance& instance, const Cells& cells, bool top_up) {
  Table t(instance);
  for (std::size_t i = 0; i < instance.f; ++i) {
    for (std::size_t j = 0; j < instance.n; ++j) {
      if (cells[i][j]) t.commit(PlaceDirect{i, j, *cells[i][j]});
    }
  }
  if (top_up) {
    for (std::size_t i = 0; i < instance.f; ++i) {
      for (std::size_t j = 0; j < instance.n; ++j) {
        if (t.at(i, j)) continue;
        if (auto move = direct_add(t, i, j)) t.commit(*move);
      }
    }
  }
  return t;
}

}  // namespace

BruteMaxRows brute_max_rows(const Instance& instance, std::size_t guard) {
  if (instance.f > instance.n) {
    throw InputError("brute_max_rows needs f <= n so that columns can be completed");
  }
  Search search(instance, guard);
  search.max_rows(0, 0);
  return BruteMaxRows{search.best(), materialize(instance, search.best_cells(), true),
                      search.nodes()};
}

std::optional<Table> brute_kahn_full(const Instance& instance, std::size_t guard) {
  if (instance.f != instance.n) throw InputError("brute_kahn_full needs a square instance");
  Search search(instance, guard);
  if (!search.full(0)) return std::nullopt;
  return materialize(instance, search.best_cells(), false);
}

}  // namespace kahn
