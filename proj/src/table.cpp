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

#include "kahn/table.hpp"

#include <algorithm>

namespace kahn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string coords(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

void add_unique(std::vector<std::size_t>& v, std::size_t x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

const char* move_name(const Move& move) {
  return std::visit(Overloaded{
                        [](const PlaceDirect&) { return "place"; },
                        [](const SimpleSwap&) { return "swap"; },
                        [](const RemovalStep&) { return "removal"; },
                        [](const Transfer&) { return "transfer"; },
                    },
                    move);
}

int filled_delta(const Move& move) {
  return std::visit(Overloaded{
                        [](const PlaceDirect&) { return 1; },
                        [](const SimpleSwap& s) { return s.x ? 1 : 0; },
                        [](const RemovalStep&) { return 0; },
                        [](const Transfer&) { return 0; },
                    },
                    move);
}

RejectedMove::RejectedMove(std::string invariant, Position where,
                           const std::string& detail)
    : std::runtime_error("move rejected (" + invariant + ") at " + coords(where) +
                         ": " + detail),
      invariant_(std::move(invariant)),
      where_(where) {}

Table::Table(const Instance& instance)
    : instance_(&instance),
      cells_(instance.f, std::vector<std::optional<ElementId>>(instance.n)),
      row_sets_(instance.f),
      col_sets_(instance.n),
      row_counts_(instance.f, 0),
      col_counts_(instance.n, 0) {}

Table Table::from_cells(const Instance& instance, Cells cells, std::vector<Move> log) {
  Table t(instance);
  t.cells_ = std::move(cells);
  t.log_ = std::move(log);
  t.rebuild_derived();
  return t;
}

void Table::rebuild_derived() {
  filled_ = 0;
  for (std::size_t i = 0; i < rows(); ++i) {
    std::vector<ElementId> entries;
    for (const auto& c : cells_[i]) {
      if (c) entries.push_back(*c);
    }
    row_counts_[i] = entries.size();
    filled_ += entries.size();
    row_sets_[i] = ElementSet(std::move(entries));
  }
  for (std::size_t j = 0; j < cols(); ++j) {
    std::vector<ElementId> entries;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (cells_[i][j]) entries.push_back(*cells_[i][j]);
    }
    col_counts_[j] = entries.size();
    col_sets_[j] = ElementSet(std::move(entries));
  }
}

bool Table::derived_sets_consistent() const {
  Table fresh = from_cells(*instance_, cells_);
  return fresh.row_sets_ == row_sets_ && fresh.col_sets_ == col_sets_ &&
         fresh.row_counts_ == row_counts_ && fresh.col_counts_ == col_counts_ &&
         fresh.filled_ == filled_;
}

Table Table::scratch() const {
  Table t(*instance_);
  t.cells_ = cells_;
  t.row_sets_ = row_sets_;
  t.col_sets_ = col_sets_;
  t.row_counts_ = row_counts_;
  t.col_counts_ = col_counts_;
  t.filled_ = filled_;
  return t;
}

void Table::set_cell(std::size_t i, std::size_t j, std::optional<ElementId> value) {
  if (value && !instance_->basis(i, j).contains(*value)) {
    throw RejectedMove("V1", {i, j},
                       "element " + std::to_string(*value) + " is not in the cell's basis");
  }
  auto& c = cells_[i][j];
  if (c && !value) --filled_;
  if (!c && value) ++filled_;
  c = value;
  add_unique(touched_rows_, i);
  add_unique(touched_cols_, j);
}

void Table::apply_step(const RemovalStep& s) {
  const Position at{s.row, s.column};
  if (s.row >= rows() || s.removed_row >= rows() || s.column >= cols() ||
      s.target >= cols()) {
    throw RejectedMove("precondition", at, "coordinates out of range");
  }
  if (s.removed_row == s.row) {
    throw RejectedMove("precondition", at, "removal must be in another row");
  }
  if (cells_[s.row][s.target]) {
    throw RejectedMove("precondition", {s.row, s.target}, "target cell is filled");
  }
  if (!cells_[s.removed_row][s.column]) {
    throw RejectedMove("precondition", {s.removed_row, s.column}, "removed cell is empty");
  }
  if (s.witness) {
    if (s.target == s.column) {
      throw RejectedMove("precondition", at, "swap needs two distinct columns");
    }
    if (!cells_[s.row][s.column]) {
      throw RejectedMove("precondition", at, "swap source cell is empty");
    }
    set_cell(s.row, s.target, *s.witness);
  } else if (cells_[s.row][s.column]) {
    throw RejectedMove("precondition", at, "cell is filled and no witness given");
  }
  set_cell(s.row, s.column, s.x);
  set_cell(s.removed_row, s.column, std::nullopt);
}

void Table::apply(const Move& move) {
  std::visit(
      Overloaded{
          [&](const PlaceDirect& m) {
            if (m.row >= rows() || m.col >= cols()) {
              throw RejectedMove("precondition", {m.row, m.col}, "coordinates out of range");
            }
            if (cells_[m.row][m.col]) {
              throw RejectedMove("precondition", {m.row, m.col}, "cell is filled");
            }
            set_cell(m.row, m.col, m.x);
          },
          [&](const SimpleSwap& m) {
            if (m.row >= rows() || m.target >= cols() || m.source >= cols() ||
                m.target == m.source) {
              throw RejectedMove("precondition", {m.row, m.target}, "bad swap coordinates");
            }
            if (cells_[m.row][m.target]) {
              throw RejectedMove("precondition", {m.row, m.target}, "target cell is filled");
            }
            if (!cells_[m.row][m.source]) {
              throw RejectedMove("precondition", {m.row, m.source}, "source cell is empty");
            }
            set_cell(m.row, m.target, m.witness);
            set_cell(m.row, m.source, m.x);
          },
          [&](const RemovalStep& m) { apply_step(m); },
          [&](const Transfer& m) {
            for (const auto& s : m.steps) apply_step(s);
          },
      },
      move);
}

void Table::check_lines(const std::vector<std::size_t>& rows_to_check,
                        const std::vector<std::size_t>& cols_to_check) const {
  const auto& m = instance_->matroid;
  std::vector<ElementId> entries;
  for (auto i : rows_to_check) {
    entries.clear();
    for (const auto& c : cells_[i]) {
      if (c) entries.push_back(*c);
    }
    if (!m.is_independent(entries)) {
      throw RejectedMove("V2", {i, touched_cols_.front()}, "row becomes dependent");
    }
  }
  for (auto j : cols_to_check) {
    entries.clear();
    for (std::size_t i = 0; i < rows(); ++i) {
      if (cells_[i][j]) entries.push_back(*cells_[i][j]);
    }
    if (!m.is_independent(entries)) {
      throw RejectedMove("V3", {touched_rows_.front(), j}, "column becomes dependent");
    }
  }
}

void Table::commit(const Move& move) {
  const Cells backup = cells_;
  const std::size_t backup_filled = filled_;
  touched_rows_.clear();
  touched_cols_.clear();
  try {
    apply(move);
    check_lines(touched_rows_, touched_cols_);
  } catch (const RejectedMove&) {
    cells_ = backup;
    filled_ = backup_filled;
    throw;
  }
  for (auto i : touched_rows_) {
    std::vector<ElementId> entries;
    for (const auto& c : cells_[i]) {
      if (c) entries.push_back(*c);
    }
    row_counts_[i] = entries.size();
    row_sets_[i] = ElementSet(std::move(entries));
  }
  for (auto j : touched_cols_) {
    std::vector<ElementId> entries;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (cells_[i][j]) entries.push_back(*cells_[i][j]);
    }
    col_counts_[j] = entries.size();
    col_sets_[j] = ElementSet(std::move(entries));
  }
  log_.push_back(move);
}

bool Table::try_commit(const Move& move) {
  try {
    commit(move);
    return true;
  } catch (const RejectedMove&) {
    return false;
  }
}

std::vector<std::size_t> full_rows(const Table& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (table.row_full(i)) out.push_back(i);
  }
  return out;
}

bool VerifyReport::all_passed() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.passed; });
}

VerifyReport verify(const Instance& instance, const Table& table) {
  VerifyReport report;
  report.target_rows = instance.target_rows();
  const auto& m = instance.matroid;
  const auto& cells = table.cells();

  InvariantResult v1{"V1", true, {}, {}}, v2{"V2", true, {}, {}}, v3{"V3", true, {}, {}};
  InvariantResult v4{"V4", true, {}, {}}, v5{"V5", true, {}, {}};
  auto fail = [](InvariantResult& r, Position p, std::string detail) {
    if (!r.passed) return;
    r.passed = false;
    r.first_failure = p;
    r.detail = std::move(detail);
  };

  const bool shape_ok = cells.size() == instance.f &&
                        std::all_of(cells.begin(), cells.end(), [&](const auto& row) {
                          return row.size() == instance.n;
                        });
  if (!shape_ok) {
    for (auto* r : {&v1, &v2, &v3, &v4, &v5}) fail(*r, {0, 0}, "table shape mismatch");
    report.invariants = {v1, v2, v3, v4, v5};
    return report;
  }

  for (std::size_t i = 0; i < instance.f; ++i) {
    for (std::size_t j = 0; j < instance.n; ++j) {
      if (!cells[i][j]) continue;
      const auto x = *cells[i][j];
      if (x >= m.ground_size() || !instance.basis(i, j).contains(x)) {
        fail(v1, {i, j}, "element " + std::to_string(x) + " is not in B(" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  std::vector<ElementId> entries;
  for (std::size_t i = 0; i < instance.f; ++i) {
    entries.clear();
    for (const auto& c : cells[i]) {
      if (c && *c < m.ground_size()) entries.push_back(*c);
    }
    if (!m.is_independent(entries)) fail(v2, {i, 0}, "row is dependent");
  }
  for (std::size_t j = 0; j < instance.n; ++j) {
    entries.clear();
    for (std::size_t i = 0; i < instance.f; ++i) {
      if (cells[i][j] && *cells[i][j] < m.ground_size()) entries.push_back(*cells[i][j]);
    }
    if (!m.is_independent(entries)) fail(v3, {0, j}, "column is dependent");
  }

  if (!table.derived_sets_consistent()) fail(v4, {0, 0}, "derived sets disagree with cells");

  Table replay(instance);
  try {
    for (const auto& move : table.log()) replay.commit(move);
    if (replay.cells() != cells) {
      for (std::size_t i = 0; i < instance.f && v5.passed; ++i) {
        for (std::size_t j = 0; j < instance.n; ++j) {
          if (replay.cells()[i][j] != cells[i][j]) {
            fail(v5, {i, j}, "replayed log disagrees with the table");
            break;
          }
        }
      }
    }
  } catch (const RejectedMove& e) {
    fail(v5, e.where(), std::string("log replay rejected: ") + e.what());
  }

  report.full_rows = full_rows(table).size();
  report.invariants = {v1, v2, v3, v4, v5};
  return report;
}

}  // namespace kahn
