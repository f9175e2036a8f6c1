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

#ifndef KAHN_TABLE_HPP_
#define KAHN_TABLE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kahn/element_set.hpp"
#include "kahn/instance.hpp"

namespace kahn {

// Fill the empty cell (row, col) with x.
struct PlaceDirect {
  std::size_t row = 0;
  std::size_t col = 0;
  ElementId x = 0;
  friend bool operator==(const PlaceDirect&, const PlaceDirect&) = default;
};

// In `row`: put `witness` into the empty cell `target` and clear `source`,
// optionally refilling `source` with x.
struct SimpleSwap {
  std::size_t row = 0;
  std::size_t target = 0;
  std::size_t source = 0;
  ElementId witness = 0;
  std::optional<ElementId> x;
  friend bool operator==(const SimpleSwap&, const SimpleSwap&) = default;
};

// Place x at (row, column), either into an empty cell (no witness) or after
// a simple swap moving the old entry's slot to `target` via `witness`, and
// clear (removed_row, column).
struct RemovalStep {
  std::size_t row = 0;
  std::size_t target = 0;
  std::size_t column = 0;
  ElementId x = 0;
  std::optional<ElementId> witness;
  std::size_t removed_row = 0;
  friend bool operator==(const RemovalStep&, const RemovalStep&) = default;
};

// Batch of removal steps committed atomically.
struct Transfer {
  std::vector<RemovalStep> steps;
  friend bool operator==(const Transfer&, const Transfer&) = default;
};

using Move = std::variant<PlaceDirect, SimpleSwap, RemovalStep, Transfer>;

const char* move_name(const Move& move);

// Net change in the number of filled cells a move causes.
int filled_delta(const Move& move);

class RejectedMove : public std::runtime_error {
 public:
  RejectedMove(std::string invariant, Position where, const std::string& detail);
  const std::string& invariant() const { return invariant_; }
  Position where() const { return where_; }

 private:
  std::string invariant_;
  Position where_;
};

using Cells = std::vector<std::vector<std::optional<ElementId>>>;

// Partially filled f x n table of representatives. Mutated only through
// validated moves; every committed move is kept in a replayable log.
class Table {
 public:
  explicit Table(const Instance& instance);

  // Builds a table from raw cells without validation (for loading and for
  // checking verify itself).
  static Table from_cells(const Instance& instance, Cells cells,
                          std::vector<Move> log = {});

  const Instance& instance() const { return *instance_; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return instance_->n; }

  const std::optional<ElementId>& at(std::size_t i, std::size_t j) const {
    return cells_[i][j];
  }
  const Cells& cells() const { return cells_; }
  const ElementSet& row_set(std::size_t i) const { return row_sets_[i]; }
  const ElementSet& col_set(std::size_t j) const { return col_sets_[j]; }
  std::size_t filled() const { return filled_; }
  std::size_t row_size(std::size_t i) const { return row_counts_[i]; }
  std::size_t col_size(std::size_t j) const { return col_counts_[j]; }
  bool row_full(std::size_t i) const { return row_counts_[i] == cols(); }
  const std::vector<Move>& log() const { return log_; }

  // All-or-nothing: throws RejectedMove and leaves the table untouched when
  // the move's preconditions or V1-V3 fail afterwards.
  void commit(const Move& move);
  bool try_commit(const Move& move);

  // Copy without the move log, for speculative edits.
  Table scratch() const;

  // Recomputes derived sets from the cells; returns whether they matched.
  bool derived_sets_consistent() const;

 private:
  void apply(const Move& move);
  void apply_step(const RemovalStep& step);
  void set_cell(std::size_t i, std::size_t j, std::optional<ElementId> value);
  void check_lines(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;
  void rebuild_derived();

  const Instance* instance_;
  Cells cells_;
  std::vector<ElementSet> row_sets_;
  std::vector<ElementSet> col_sets_;
  std::vector<std::size_t> row_counts_;
  std::vector<std::size_t> col_counts_;
  std::size_t filled_ = 0;
  std::vector<Move> log_;
  // Rows/columns touched by the move being applied.
  std::vector<std::size_t> touched_rows_;
  std::vector<std::size_t> touched_cols_;
};

// Rows whose entries form a basis.
std::vector<std::size_t> full_rows(const Table& table);

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::optional<Position> first_failure;
  std::string detail;
};

struct VerifyReport {
  std::size_t target_rows = 0;
  std::size_t full_rows = 0;
  std::vector<InvariantResult> invariants;  // V1..V5 in order
  bool all_passed() const;
};

// Checks V1-V5: entries come from their cell's basis, rows and columns are
// independent, derived sets agree with the cells, and replaying the log
// from the empty table reproduces the cells.
VerifyReport verify(const Instance& instance, const Table& table);

}  // namespace kahn

#endif  // KAHN_TABLE_HPP_
