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

#ifndef KAHN_SWAP_HPP_
#define KAHN_SWAP_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kahn/table.hpp"

namespace kahn {

// Local moves around one empty cell (i, b): direct placement, simple swaps,
// addable elements and removable positions. All searches are exhaustive and
// break ties by lowest id.

// Lowest x in B(i,b) with S_i + x and C_b + x independent.
std::optional<PlaceDirect> direct_add(const Table& t, std::size_t i, std::size_t b);

struct SwapColumn {
  std::size_t column = 0;
  ElementId witness = 0;
  friend bool operator==(const SwapColumn&, const SwapColumn&) = default;
};

// Filled columns c of row i admitting y in B(i,b) with C_b + y and
// S_i - T(i,c) + y independent; lowest witness per column.
std::vector<SwapColumn> swappable_columns(const Table& t, std::size_t i, std::size_t b);

struct AddableRecord {
  Position target;
  std::size_t column = 0;
  ElementId x = 0;
  std::optional<ElementId> witness;
  std::optional<ElementId> displaced;
  friend bool operator==(const AddableRecord&, const AddableRecord&) = default;
};

struct AddableScan {
  std::vector<AddableRecord> records;  // ascending x
  // Set when some witness y makes S_i + y independent, i.e. y can go
  // straight into (i,b).
  std::optional<PlaceDirect> bonus;
};

// (i,b)-addable elements of B(i,c).
AddableScan addable_elements(const Table& t, std::size_t i, std::size_t b, std::size_t c);

struct RemovableRecord {
  AddableRecord add;
  Position removed;
  ElementId removed_element = 0;
  RemovalStep as_move() const;
  friend bool operator==(const RemovableRecord&, const RemovableRecord&) = default;
};

struct RemovableScan {
  std::vector<RemovableRecord> records;  // ordered by (column, removed row)
  // First move, in scan order, that grows the table outright: a bonus fill
  // or an addable element independent of its (post-swap) column.
  std::optional<Move> direct_increase;
};

// Filled positions (j,c), j != i, freed by placing some (i,b)-addable x at
// (i,c). The column is judged after the swap has taken T(i,c) out.
RemovableScan removable_positions(const Table& t, std::size_t i, std::size_t b);

// Same scan restricted to column c.
RemovableScan removable_positions_in_column(const Table& t, std::size_t i,
                                            std::size_t b, std::size_t c);

using Injection = std::vector<std::pair<ElementId, ElementId>>;

// Injection phi: S_i -> B(i,c) with phi(x) independent of S_i - x, found by
// augmenting-path bipartite matching. Raises OracleViolation if no matching
// saturates S_i.
Injection matching_injection(const Table& t, std::size_t i, std::size_t c);

}  // namespace kahn

#endif  // KAHN_SWAP_HPP_
