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

#ifndef KAHN_BRUTE_HPP_
#define KAHN_BRUTE_HPP_

#include <cstddef>
#include <optional>

#include "kahn/instance.hpp"
#include "kahn/table.hpp"

namespace kahn {

inline constexpr std::size_t kDefaultGuard = 10'000'000;

struct BruteMaxRows {
  std::size_t optimum = 0;
  // Optimal rows filled as bases; the remaining rows are filled greedily
  // as far as independence allows.
  Table witness;
  std::size_t nodes = 0;
};

// Maximum number of rows that can simultaneously be bases with every
// column independent. Backtracks over cells in row-major order with column
// pruning. Throws GuardExceeded after `guard` candidate expansions.
BruteMaxRows brute_max_rows(const Instance& instance, std::size_t guard = kDefaultGuard);

// For square instances (f == n): an assignment where every row and every
// column is a basis, or nullopt when none exists.
std::optional<Table> brute_kahn_full(const Instance& instance,
                                     std::size_t guard = kDefaultGuard);

}  // namespace kahn

#endif  // KAHN_BRUTE_HPP_
