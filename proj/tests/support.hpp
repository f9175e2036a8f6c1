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

#ifndef KAHN_TESTS_SUPPORT_HPP_
#define KAHN_TESTS_SUPPORT_HPP_

// Reference oracles for the tests. None of them calls back into the
// library's independence machinery: linear independence is decided by
// enumerating coefficient vectors, graphic independence by counting
// components, and removability by attempting commits.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

#include "kahn/instance.hpp"
#include "kahn/rng.hpp"
#include "kahn/swap.hpp"
#include "kahn/table.hpp"

namespace kahn::test {

// Some non-trivial combination of `vs` vanishes over GF(p).
inline bool has_vanishing_combination(const std::vector<std::vector<std::uint32_t>>& vs,
                                      std::uint32_t p) {
  if (vs.empty()) return false;
  const std::size_t k = vs.size();
  const std::size_t dim = vs.front().size();
  std::vector<std::uint32_t> coef(k, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && ++coef[pos] == p) coef[pos++] = 0;
    if (pos == k) return false;
    bool zero = true;
    for (std::size_t r = 0; r < dim && zero; ++r) {
      std::uint64_t s = 0;
      for (std::size_t a = 0; a < k; ++a) s += std::uint64_t{coef[a]} * vs[a][r];
      zero = s % p == 0;
    }
    if (zero) return true;
  }
}

inline bool naive_graphic_independent(std::size_t vertices,
                                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& es) {
  // A forest has exactly |touched vertices| - |components| edges.
  std::vector<std::vector<std::uint32_t>> adj(vertices);
  std::set<std::uint32_t> touched;
  for (auto [u, v] : es) {
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
    touched.insert(u);
    touched.insert(v);
  }
  std::vector<bool> seen(vertices, false);
  std::size_t components = 0;
  for (auto s : touched) {
    if (seen[s]) continue;
    ++components;
    std::vector<std::uint32_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return es.size() == touched.size() - components;
}

// Independence straight from the payload. Repeated ids are dependent.
inline bool naive_independent(const MatroidOracle& m, std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  if (const auto* lin = std::get_if<LinearPayload>(&m.payload())) {
    if (ids.size() > lin->dim) return false;
    std::vector<std::vector<std::uint32_t>> vs;
    for (auto e : ids) vs.push_back(lin->vectors[e]);
    return !has_vanishing_combination(vs, lin->p);
  }
  if (const auto* g = std::get_if<GraphicPayload>(&m.payload())) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (auto e : ids) es.push_back(g->edges[e]);
    return naive_graphic_independent(g->vertices, es);
  }
  return ids.size() <= std::get<UniformPayload>(m.payload()).k;
}

// Largest independent subset, by exhaustive subset enumeration (|ids| <= 12).
inline std::size_t naive_rank(const MatroidOracle& m, const std::vector<ElementId>& ids) {
  std::size_t best = 0;
  const std::size_t k = ids.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<ElementId> sub;
    for (std::size_t a = 0; a < k; ++a) {
      if (mask >> a & 1u) sub.push_back(ids[a]);
    }
    if (naive_independent(m, sub)) best = size;
  }
  return best;
}

inline std::vector<ElementId> plus(const ElementSet& s, ElementId e) {
  std::vector<ElementId> out(s.begin(), s.end());
  out.push_back(e);
  return out;
}

inline std::vector<ElementId> minus_plus(const ElementSet& s, ElementId out_e,
                                         std::vector<ElementId> in) {
  std::vector<ElementId> out;
  for (auto e : s) {
    if (e != out_e) out.push_back(e);
  }
  out.insert(out.end(), in.begin(), in.end());
  return out;
}

// (row, removed position, x, witness) for every position the library should
// report, found by committing every candidate removal step on a copy.
struct BruteRemoval {
  Position removed;
  ElementId x = 0;
  std::optional<ElementId> witness;
  friend auto operator<=>(const BruteRemoval&, const BruteRemoval&) = default;
};

inline std::vector<BruteRemoval> brute_removable(const Table& t, std::size_t i, std::size_t b) {
  std::vector<BruteRemoval> out;
  const auto& inst = t.instance();
  for (std::size_t c = 0; c < t.cols(); ++c) {
    for (std::size_t j = 0; j < t.rows(); ++j) {
      if (j == i || !t.at(j, c)) continue;
      std::optional<BruteRemoval> first;
      for (auto x : inst.basis(i, c)) {
        std::vector<std::optional<ElementId>> witnesses;
        if (t.at(i, c)) {
          for (auto y : inst.basis(i, b)) witnesses.emplace_back(y);
        } else if (naive_independent(inst.matroid, plus(t.col_set(c), x))) {
          // Without a swap, addability asks for C_c + x independent before
          // anything is removed.
          witnesses.emplace_back(std::nullopt);
        }
        for (const auto& y : witnesses) {
          Table copy = t.scratch();
          if (copy.try_commit(RemovalStep{i, b, c, x, y, j})) {
            first = BruteRemoval{{j, c}, x, y};
            break;
          }
        }
        if (first) break;
      }
      if (first) out.push_back(*first);
    }
  }
  return out;
}

// K_m.
inline MatroidOracle complete_graph(std::uint32_t m) {
  GraphicPayload g{m, {}};
  for (std::uint32_t u = 0; u < m; ++u) {
    for (std::uint32_t v = u + 1; v < m; ++v) g.edges.emplace_back(u, v);
  }
  return MatroidOracle::graphic(std::move(g));
}

// Identity columns plus `extra` random vectors over GF(p)^dim.
inline MatroidOracle random_linear(std::uint32_t p, std::size_t dim, std::size_t extra,
                            std::uint64_t seed) {
  Rng rng(seed);
  LinearPayload lp{p, dim, {}};
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<std::uint32_t> v(dim, 0);
    v[a] = 1;
    lp.vectors.push_back(v);
  }
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<std::uint32_t> v(dim);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(p));
    lp.vectors.push_back(v);
  }
  return MatroidOracle::linear(std::move(lp));
}

// Commits direct fills in a seeded random cell order until none applies or
// `limit` placements were made.
inline void greedy_fill(Table& t, std::uint64_t seed, std::size_t limit = SIZE_MAX) {
  Rng rng(seed);
  std::vector<Position> cells;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) cells.push_back({i, j});
  }
  for (bool changed = true; changed;) {
    changed = false;
    rng.shuffle(cells);
    for (auto [i, j] : cells) {
      if (t.at(i, j)) continue;
      const auto& basis = t.instance().basis(i, j);
      std::vector<ElementId> order(basis.begin(), basis.end());
      rng.shuffle(order);
      for (auto x : order) {
        if (limit == 0) return;
        if (t.try_commit(PlaceDirect{i, j, x})) {
          --limit;
          changed = true;
          break;
        }
      }
    }
  }
}

// Every cell holds the standard basis of GF(2)^n.
inline Instance same_basis_instance(std::size_t n, std::size_t f) {
  LinearPayload p{2, n, {}};
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::uint32_t> v(n, 0);
    v[a] = 1;
    p.vectors.push_back(v);
  }
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::vector<ElementSet>> bases(f, std::vector<ElementSet>(n, ElementSet(ids)));
  return Instance{MatroidOracle::linear(std::move(p)), n, f, Rational(1, 5), std::move(bases)};
}

// Grid whose cells are drawn from only `kinds` distinct random bases.
inline Instance repeated_bases_instance(std::uint32_t p, std::size_t n, std::size_t f,
                                        std::size_t kinds, std::uint64_t seed) {
  const auto pool = gen_linear_random(p, n, 1, Rational(1, 5), seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<ElementSet>> bases(f);
  for (auto& row : bases) {
    for (std::size_t j = 0; j < n; ++j) row.push_back(pool.bases[0][rng.below(std::min(kinds, n))]);
  }
  return Instance{pool.matroid, n, f, Rational(1, 5), std::move(bases)};
}

inline bool table_valid(const Instance& inst, const Table& t) {
  return verify(inst, t).all_passed();
}

// Tables at assorted fill levels over small adversarial and random grids.
// Instances live on the heap so the tables' references stay valid.
struct StateBank {
  std::vector<std::unique_ptr<Instance>> instances;
  std::vector<Table> tables;

  void add(Instance inst, std::uint64_t seed) {
    instances.push_back(std::make_unique<Instance>(std::move(inst)));
    const Instance& ref = *instances.back();
    const std::size_t cells = ref.f * ref.n;
    for (std::size_t limit : {cells / 3, (2 * cells) / 3, cells}) {
      Table t(ref);
      greedy_fill(t, seed * 7 + limit, limit);
      tables.push_back(std::move(t));
    }
  }
};

inline StateBank small_states(std::size_t seeds) {
  StateBank bank;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    bank.add(repeated_bases_instance(2, 4, 3, 2, s), s);
    bank.add(repeated_bases_instance(3, 4, 4, 2, s), s);
    bank.add(same_basis_instance(4, 3 + s % 2), s);
    bank.add(gen_linear_random(2, 4, 3, Rational(1, 5), s), s);
    bank.add(gen_graphic(5, 3, Rational(1, 5), s), s);
    bank.add(gen_uniform(4, 6, 3, Rational(1, 5), s), s);
  }
  return bank;
}

}  // namespace kahn::test

#endif  // KAHN_TESTS_SUPPORT_HPP_
