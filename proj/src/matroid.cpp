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

#include "kahn/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "kahn/errors.hpp"

namespace kahn {

const char* kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::linear:
      return "linear";
    case MatroidKind::graphic:
      return "graphic";
    case MatroidKind::uniform:
      return "uniform";
  }
  return "?";
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint32_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> vectors,
                       std::uint32_t p) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][col] % p == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    const std::uint32_t inv = pow_mod(vectors[rank][col], p - 2, p);
    for (auto& v : vectors[rank]) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r == rank) continue;
      const std::uint64_t factor = vectors[r][col] % p;
      if (factor == 0) continue;
      for (std::size_t k = col; k < dim; ++k) {
        vectors[r][k] = static_cast<std::uint32_t>(
            (vectors[r][k] + (p - factor) * vectors[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

MatroidOracle::MatroidOracle(Payload payload) : payload_(std::move(payload)) {}

MatroidOracle MatroidOracle::linear(LinearPayload payload) {
  if (!is_prime(payload.p) || payload.p >= (1u << 16)) {
    throw InputError("linear matroid needs a prime p < 65536, got " +
                     std::to_string(payload.p));
  }
  if (payload.dim == 0) throw InputError("linear matroid of dimension 0");
  for (std::size_t e = 0; e < payload.vectors.size(); ++e) {
    const auto& v = payload.vectors[e];
    if (v.size() != payload.dim) {
      throw InputError("vector " + std::to_string(e) + " has length " +
                       std::to_string(v.size()) + ", expected " +
                       std::to_string(payload.dim));
    }
    for (auto x : v) {
      if (x >= payload.p) {
        throw InputError("vector " + std::to_string(e) +
                         " has an entry outside GF(p)");
      }
    }
  }
  const std::size_t r = rank_mod_p(payload.vectors, payload.p);
  if (r != payload.dim) {
    throw InputError("linear ground set has rank " + std::to_string(r) +
                     ", expected " + std::to_string(payload.dim));
  }

  MatroidOracle m{payload};
  m.ground_size_ = payload.vectors.size();
  m.rank_n_ = payload.dim;
  if (payload.p == 2 && payload.dim <= 64) {
    m.packed_ = true;
    m.masks_.reserve(payload.vectors.size());
    for (const auto& v : payload.vectors) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k]) mask |= std::uint64_t{1} << k;
      }
      m.masks_.push_back(mask);
    }
  } else {
    m.inverse_.assign(payload.p, 0);
    for (std::uint32_t a = 1; a < payload.p; ++a) {
      m.inverse_[a] = pow_mod(a, payload.p - 2, payload.p);
    }
  }
  return m;
}

MatroidOracle MatroidOracle::graphic(GraphicPayload payload) {
  if (payload.vertices < 2) throw InputError("graphic matroid needs >= 2 vertices");
  for (std::size_t e = 0; e < payload.edges.size(); ++e) {
    const auto [u, v] = payload.edges[e];
    if (u >= payload.vertices || v >= payload.vertices) {
      throw InputError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
  }
  MatroidOracle m{payload};
  m.ground_size_ = payload.edges.size();
  m.rank_n_ = payload.vertices - 1;
  std::vector<ElementId> all(m.ground_size_);
  std::iota(all.begin(), all.end(), ElementId{0});
  if (m.rank(all) != m.rank_n_) throw InputError("graphic matroid graph is not connected");
  return m;
}

MatroidOracle MatroidOracle::uniform(UniformPayload payload) {
  if (payload.k == 0 || payload.k > payload.ground) {
    throw InputError("uniform matroid needs 1 <= k <= ground");
  }
  MatroidOracle m{payload};
  m.ground_size_ = payload.ground;
  m.rank_n_ = payload.k;
  return m;
}

void MatroidOracle::check_ids(std::span<const ElementId> ids) const {
  for (auto e : ids) {
    if (e >= ground_size_) {
      throw InputError("element id " + std::to_string(e) +
                       " outside ground set of size " +
                       std::to_string(ground_size_));
    }
  }
}

bool MatroidOracle::is_independent(std::span<const ElementId> ids) const {
  check_ids(ids);
  if (ids.size() > rank_n_) return false;
  SpanTester t(*this);
  for (auto e : ids) {
    if (!t.add(e)) return false;
  }
  return true;
}

std::size_t MatroidOracle::rank(std::span<const ElementId> ids) const {
  check_ids(ids);
  SpanTester t(*this);
  for (auto e : ids) t.add(e);
  return t.size();
}

SpanTester MatroidOracle::tester() const { return SpanTester(*this); }

SpanTester MatroidOracle::tester(std::span<const ElementId> ids) const {
  SpanTester t(*this);
  for (auto e : ids) {
    if (!t.add(e)) throw CallerBug("tester seeded with a dependent set");
  }
  return t;
}

SpanTester::SpanTester(const MatroidOracle& oracle) : oracle_(&oracle) {
  if (const auto* g = std::get_if<GraphicPayload>(&oracle.payload_)) {
    parent_.resize(g->vertices);
    std::iota(parent_.begin(), parent_.end(), 0u);
    weight_.assign(g->vertices, 1);
  }
}

std::uint32_t SpanTester::find(std::uint32_t v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

std::vector<std::uint32_t> SpanTester::reduce(ElementId e) const {
  const auto& lin = std::get<LinearPayload>(oracle_->payload_);
  const std::uint64_t p = lin.p;
  std::vector<std::uint32_t> v = lin.vectors[e];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivots_[r];
    const std::uint64_t factor = v[piv];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t k = piv; k < v.size(); ++k) {
      v[k] = static_cast<std::uint32_t>((v[k] + (p - factor) * row[k]) % p);
    }
  }
  return v;
}

bool SpanTester::can_add(ElementId e) const {
  switch (oracle_->kind()) {
    case MatroidKind::linear: {
      if (oracle_->packed_) {
        std::uint64_t v = oracle_->masks_[e];
        for (auto row : packed_rows_) {
          if (v >> std::countr_zero(row) & 1) v ^= row;
        }
        return v != 0;
      }
      const auto v = reduce(e);
      return std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; });
    }
    case MatroidKind::graphic: {
      const auto& g = std::get<GraphicPayload>(oracle_->payload_);
      const auto [u, v] = g.edges[e];
      return find(u) != find(v);
    }
    case MatroidKind::uniform: {
      const auto& u = std::get<UniformPayload>(oracle_->payload_);
      return size_ < u.k &&
             !std::binary_search(members_.begin(), members_.end(), e);
    }
  }
  return false;
}

bool SpanTester::add(ElementId e) {
  switch (oracle_->kind()) {
    case MatroidKind::linear: {
      if (oracle_->packed_) {
        std::uint64_t v = oracle_->masks_[e];
        for (auto row : packed_rows_) {
          if (v >> std::countr_zero(row) & 1) v ^= row;
        }
        if (v == 0) return false;
        packed_rows_.push_back(v);
        break;
      }
      auto v = reduce(e);
      const auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
      if (it == v.end()) return false;
      const std::size_t piv = static_cast<std::size_t>(it - v.begin());
      const std::uint64_t p = std::get<LinearPayload>(oracle_->payload_).p;
      const std::uint64_t inv = oracle_->inverse_[v[piv]];
      for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p);
      rows_.push_back(std::move(v));
      pivots_.push_back(piv);
      break;
    }
    case MatroidKind::graphic: {
      const auto& g = std::get<GraphicPayload>(oracle_->payload_);
      auto a = find(g.edges[e].first);
      auto b = find(g.edges[e].second);
      if (a == b) return false;
      if (weight_[a] < weight_[b]) std::swap(a, b);
      parent_[b] = a;
      weight_[a] += weight_[b];
      break;
    }
    case MatroidKind::uniform: {
      if (!can_add(e)) return false;
      members_.insert(std::lower_bound(members_.begin(), members_.end(), e), e);
      break;
    }
  }
  ++size_;
  return true;
}

ElementId augment(const MatroidOracle& m, const ElementSet& a,
                  const ElementSet& b) {
  if (a.size() <= b.size()) throw CallerBug("augment needs |A| > |B|");
  if (!m.is_independent(a) || !m.is_independent(b)) {
    throw CallerBug("augment needs independent A and B");
  }
  const SpanTester t = m.tester(b);
  for (auto e : a) {
    if (!b.contains(e) && t.can_add(e)) return e;
  }
  throw OracleViolation("augmentation failed: no element of A extends B");
}

ElementSet extend_independent(const MatroidOracle& m, const ElementSet& base,
                              const ElementSet& pool, std::size_t target_size) {
  if (!m.is_independent(base)) throw CallerBug("extend_independent: dependent base");
  m.check_ids(pool);
  ElementSet out = base;
  SpanTester t = m.tester(base);
  for (auto e : pool) {
    if (out.size() >= target_size) break;
    if (t.add(e)) out.insert(e);
  }
  if (out.size() < target_size) {
    throw InfeasibleError("cannot extend to size " + std::to_string(target_size) +
                          "; rank of base + pool is " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace kahn
