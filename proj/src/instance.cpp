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

#include "kahn/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "kahn/errors.hpp"
#include "kahn/rng.hpp"

namespace kahn {

bool Instance::in_regime() const {
  const auto bound = floor_div((epsilon.den() - epsilon.num()) * static_cast<std::int64_t>(n),
                               2 * epsilon.den());
  return static_cast<std::int64_t>(f) <= bound;
}

std::size_t Instance::target_rows() const {
  const auto missing = ceil_div(epsilon.num() * static_cast<std::int64_t>(n),
                                2 * epsilon.den());
  const auto t = static_cast<std::int64_t>(f) - missing;
  return t < 0 ? 0 : static_cast<std::size_t>(t);
}

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_parameters(std::size_t n, std::size_t f, const Rational& epsilon) {
  if (n == 0) throw InputError("n must be >= 1");
  if (f == 0) throw InputError("f must be >= 1");
  if (epsilon.num() <= 0 || epsilon.num() >= epsilon.den()) {
    throw InputError("epsilon must lie in (0,1), got " + epsilon.str());
  }
}

}  // namespace

void validate(const Instance& instance) {
  if (instance.n == 0 || instance.f == 0) throw SchemaError("n and f must be positive");
  if (instance.epsilon.num() <= 0 || instance.epsilon.num() >= instance.epsilon.den()) {
    throw SchemaError("epsilon must lie in (0,1)");
  }
  if (instance.matroid.rank_n() != instance.n) {
    throw SchemaError("rank mismatch: matroid rank " +
                      std::to_string(instance.matroid.rank_n()) + " but n = " +
                      std::to_string(instance.n));
  }
  if (instance.bases.size() != instance.f) {
    throw SchemaError("expected " + std::to_string(instance.f) + " rows of bases");
  }
  for (std::size_t i = 0; i < instance.f; ++i) {
    if (instance.bases[i].size() != instance.n) {
      throw SchemaError("row " + std::to_string(i) + " has " +
                        std::to_string(instance.bases[i].size()) + " cells, expected " +
                        std::to_string(instance.n));
    }
    for (std::size_t j = 0; j < instance.n; ++j) {
      const auto& b = instance.bases[i][j];
      if (b.size() != instance.n) {
        throw SchemaError("cell " + cell(i, j) + " has " + std::to_string(b.size()) +
                          " elements, expected " + std::to_string(instance.n));
      }
      for (auto e : b) {
        if (e >= instance.matroid.ground_size()) {
          throw SchemaError("cell " + cell(i, j) + " names element " +
                            std::to_string(e) + " outside the ground set");
        }
      }
      if (!instance.matroid.is_independent(b)) {
        throw SchemaError("cell " + cell(i, j) + " is not independent");
      }
    }
  }
}

namespace {

using Vector = std::vector<std::uint32_t>;

// Uniformly random invertible n x n matrix over GF(p) by rejection; returns
// its columns.
std::vector<Vector> random_invertible(std::uint32_t p, std::size_t n, Rng& rng) {
  while (true) {
    std::vector<Vector> cols(n, Vector(n));
    for (auto& c : cols) {
      for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(p));
    }
    if (rank_mod_p(cols, p) == n) return cols;
  }
}

// Interns vectors into a shared ground set in first-seen order.
class VectorPool {
 public:
  ElementId intern(const Vector& v) {
    auto [it, inserted] = ids_.try_emplace(v, static_cast<ElementId>(vectors_.size()));
    if (inserted) vectors_.push_back(v);
    return it->second;
  }
  std::vector<Vector> take() { return std::move(vectors_); }

 private:
  std::map<Vector, ElementId> ids_;
  std::vector<Vector> vectors_;
};

Instance assemble_linear(std::uint32_t p, std::size_t n, std::size_t f,
                         Rational epsilon,
                         const std::vector<std::vector<std::vector<Vector>>>& grid) {
  VectorPool pool;
  std::vector<std::vector<ElementSet>> bases(f, std::vector<ElementSet>(n));
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ElementId> ids;
      for (const auto& v : grid[i][j]) ids.push_back(pool.intern(v));
      bases[i][j] = ElementSet(std::move(ids));
    }
  }
  auto oracle = MatroidOracle::linear({p, n, pool.take()});
  return Instance{std::move(oracle), n, f, epsilon, std::move(bases)};
}

void check_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 16)) {
    throw InputError("p must be a prime below 65536, got " + std::to_string(p));
  }
}

}  // namespace

Instance gen_linear_random(std::uint32_t p, std::size_t n, std::size_t f,
                           Rational epsilon, std::uint64_t seed) {
  check_parameters(n, f, epsilon);
  check_field(p);
  Rng rng(seed);
  std::vector<std::vector<std::vector<Vector>>> grid(f, std::vector<std::vector<Vector>>(n));
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = random_invertible(p, n, rng);
  }
  return assemble_linear(p, n, f, epsilon, grid);
}

Instance gen_rota(std::uint32_t p, std::size_t n, Rational epsilon, std::uint64_t seed) {
  check_parameters(n, 1, epsilon);
  check_field(p);
  const auto regime_f = floor_div((epsilon.den() - epsilon.num()) * static_cast<std::int64_t>(n),
                                  2 * epsilon.den());
  const std::size_t f = regime_f < 1 ? 1 : static_cast<std::size_t>(regime_f);
  Rng rng(seed);
  std::vector<std::vector<Vector>> columns(n);
  for (auto& c : columns) c = random_invertible(p, n, rng);
  std::vector<std::vector<std::vector<Vector>>> grid(f, columns);
  return assemble_linear(p, n, f, epsilon, grid);
}

Instance gen_graphic(std::size_t m, std::size_t f, Rational epsilon, std::uint64_t seed) {
  if (m < 2) throw InputError("graphic generator needs m >= 2");
  const std::size_t n = m - 1;
  check_parameters(n, f, epsilon);
  Rng rng(seed);

  // Edges of K_m in lexicographic order; only those used by a tree are kept.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  for (std::uint32_t u = 0; u < m; ++u) {
    for (std::uint32_t v = u + 1; v < m; ++v) all.emplace_back(u, v);
  }
  std::vector<std::vector<std::vector<std::size_t>>> trees(f, std::vector<std::vector<std::size_t>>(n));
  std::vector<bool> used(all.size(), false);
  for (auto& row : trees) {
    for (auto& tree : row) {
      // Kruskal on random weights.
      std::vector<std::uint64_t> weight(all.size());
      for (auto& w : weight) w = rng.next();
      std::vector<std::size_t> order(all.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
      });
      std::vector<std::uint32_t> parent(m);
      std::iota(parent.begin(), parent.end(), 0u);
      auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (auto e : order) {
        const auto a = find(all[e].first);
        const auto b = find(all[e].second);
        if (a == b) continue;
        parent[a] = b;
        tree.push_back(e);
        used[e] = true;
        if (tree.size() == n) break;
      }
    }
  }
  std::vector<ElementId> remap(all.size(), 0);
  GraphicPayload payload{m, {}};
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (!used[e]) continue;
    remap[e] = static_cast<ElementId>(payload.edges.size());
    payload.edges.push_back(all[e]);
  }
  std::vector<std::vector<ElementSet>> bases(f, std::vector<ElementSet>(n));
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ElementId> ids;
      for (auto e : trees[i][j]) ids.push_back(remap[e]);
      bases[i][j] = ElementSet(std::move(ids));
    }
  }
  return Instance{MatroidOracle::graphic(std::move(payload)), n, f, epsilon, std::move(bases)};
}

Instance gen_uniform(std::size_t n, std::size_t ground, std::size_t f,
                     Rational epsilon, std::uint64_t seed) {
  check_parameters(n, f, epsilon);
  if (ground < n) throw InputError("uniform generator needs ground >= n");
  Rng rng(seed);
  std::vector<std::vector<ElementSet>> bases(f, std::vector<ElementSet>(n));
  std::vector<ElementId> ids(ground);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  for (auto& row : bases) {
    for (auto& b : row) {
      rng.shuffle(ids);
      b = ElementSet(std::vector<ElementId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n)));
    }
  }
  return Instance{MatroidOracle::uniform({n, ground}), n, f, epsilon, std::move(bases)};
}

}  // namespace kahn
