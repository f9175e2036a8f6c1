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

#ifndef KAHN_INSTANCE_HPP_
#define KAHN_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kahn/element_set.hpp"
#include "kahn/matroid.hpp"
#include "kahn/rational.hpp"

namespace kahn {

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// An f x n grid of bases over one shared ground set. Rows are indexed by
// i in [f], columns by j in [n].
struct Instance {
  MatroidOracle matroid;
  std::size_t n = 0;
  std::size_t f = 0;
  Rational epsilon;
  std::vector<std::vector<ElementSet>> bases;

  const ElementSet& basis(std::size_t i, std::size_t j) const { return bases[i][j]; }

  // f <= floor((1 - eps) n / 2).
  bool in_regime() const;
  // f - ceil(eps n / 2), clamped at 0.
  std::size_t target_rows() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws SchemaError naming the first offending cell.
void validate(const Instance& instance);

Instance gen_linear_random(std::uint32_t p, std::size_t n, std::size_t f,
                           Rational epsilon, std::uint64_t seed);

// Column-constant grid: B_{i,j} = B_j, with f = max(1, floor((1 - eps) n / 2)).
Instance gen_rota(std::uint32_t p, std::size_t n, Rational epsilon,
                  std::uint64_t seed);

// Graphic matroid of K_m; every basis is a random spanning tree.
Instance gen_graphic(std::size_t m, std::size_t f, Rational epsilon,
                     std::uint64_t seed);

// U_{n,ground} with uniformly random n-subsets as bases.
Instance gen_uniform(std::size_t n, std::size_t ground, std::size_t f,
                     Rational epsilon, std::uint64_t seed);

}  // namespace kahn

#endif  // KAHN_INSTANCE_HPP_
