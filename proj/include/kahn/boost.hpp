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

#ifndef KAHN_BOOST_HPP_
#define KAHN_BOOST_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "kahn/cascade.hpp"
#include "kahn/swap.hpp"
#include "kahn/table.hpp"

namespace kahn {

// Pairwise-distinct columns b_i, one per row, with T(i, b_i) empty for
// every row that is not full.
struct MissingAssignment {
  std::vector<std::size_t> column;
  // A swap exposed a direct fill, which was committed instead; the table
  // grew and `column` is incomplete.
  bool increased = false;
};

// Processes rows in order, committing simple swaps where a row's empty
// cells are all taken. Throws InfeasibleError if no unused swappable column
// exists.
MissingAssignment assign_distinct_missing(Table& t);

struct ELevel {
  std::size_t E = 1;
  std::vector<std::size_t> rows;  // rows missing at least E entries
};

// Largest E >= 1 such that at least max(1, ceil(M_E)) rows miss E or more
// entries, M_E = (eps / (4 D^2))^E n, clamped to [1, D - 1].
ELevel compute_E(const Table& t, const GrowthParams& params);

struct BoostDigraph {
  std::size_t vertices = 0;
  std::size_t level = 1;
  double threshold = 0;  // M_E
  // out[j]: rows i with an arc j -> i, ascending.
  std::vector<std::vector<std::size_t>> out;
  // removable[i][j]: (i, b_i)-removable records located in row j.
  std::vector<std::vector<std::vector<RemovableRecord>>> removable;
  std::optional<Move> direct_increase;
  bool has_arc(std::size_t from, std::size_t to) const;
  std::size_t arc_count() const;
};

// Arc j -> i whenever row i misses at least E entries and row j holds at
// least E + 1 (i, b_i)-removable positions. Removable records are collected
// for every row that is not full.
BoostDigraph build_digraph(const Table& t, const MissingAssignment& assignment,
                           std::size_t E, const GrowthParams& params);

struct OutStar {
  std::size_t centre = 0;
  std::vector<std::size_t> leaves;
  friend bool operator==(const OutStar&, const OutStar&) = default;
};

// Greedy vertex-disjoint k-out-stars: lowest-id centre with residual
// out-degree >= k, its k lowest out-neighbours, then delete all k + 1.
std::vector<OutStar> find_out_stars(const BoostDigraph& g, std::size_t k);

// Moves one entry of the centre row into each leaf row through distinct
// removable positions, committed as one Transfer. Returns the number of
// leaves served.
std::size_t apply_out_star(Table& t, const OutStar& star, const BoostDigraph& g,
                           const MissingAssignment& assignment);

enum class BoostKind { increased, row_with_d, pair_with_d, progressed, stalled };

const char* boost_name(BoostKind kind);

struct BoostOutcome {
  BoostKind kind = BoostKind::stalled;
  std::size_t row = 0;         // i_0 for row_with_d / pair_with_d
  std::size_t second_row = 0;  // i_1 for pair_with_d
  std::vector<std::size_t> levels;  // E per round
  std::vector<std::size_t> stars;   // stars applied per round
};

// Raises E by out-star transfers until the table grows, some row misses D
// entries, some row holds D removable positions for another, or no star is
// left. At most `max_rounds` rounds. An InfeasibleError from the
// missing-column assignment ends the call as stalled unless `strict`.
BoostOutcome boost(Table& t, const GrowthParams& params, std::size_t max_rounds,
                   bool strict = false);

}  // namespace kahn

#endif  // KAHN_BOOST_HPP_
