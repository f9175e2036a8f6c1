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

#ifndef KAHN_MATROID_HPP_
#define KAHN_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "kahn/element_set.hpp"

namespace kahn {

enum class MatroidKind { linear, graphic, uniform };

const char* kind_name(MatroidKind kind);

// Column vectors over GF(p); element e is vectors[e], each of length dim.
struct LinearPayload {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<std::vector<std::uint32_t>> vectors;
  friend bool operator==(const LinearPayload&, const LinearPayload&) = default;
};

// Element e is edges[e].
struct GraphicPayload {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  friend bool operator==(const GraphicPayload&, const GraphicPayload&) = default;
};

struct UniformPayload {
  std::size_t k = 0;
  std::size_t ground = 0;
  friend bool operator==(const UniformPayload&, const UniformPayload&) = default;
};

class SpanTester;

// Independence oracle over a finite ground set. Immutable after
// construction, so concurrent read-only queries are safe.
class MatroidOracle {
 public:
  using Payload = std::variant<LinearPayload, GraphicPayload, UniformPayload>;

  // p must be prime and below 2^16; the vectors must span GF(p)^dim.
  static MatroidOracle linear(LinearPayload payload);
  // The graph must be connected; rank is vertices - 1.
  static MatroidOracle graphic(GraphicPayload payload);
  static MatroidOracle uniform(UniformPayload payload);

  MatroidKind kind() const { return static_cast<MatroidKind>(payload_.index()); }
  std::size_t ground_size() const { return ground_size_; }
  std::size_t rank_n() const { return rank_n_; }
  const Payload& payload() const { return payload_; }

  // Throws InputError if any id is out of range.
  void check_ids(std::span<const ElementId> ids) const;

  // Repeated ids make a list dependent.
  bool is_independent(std::span<const ElementId> ids) const;
  std::size_t rank(std::span<const ElementId> ids) const;

  SpanTester tester() const;
  // Tester preloaded with `ids`; throws CallerBug if they are dependent.
  SpanTester tester(std::span<const ElementId> ids) const;

  friend bool operator==(const MatroidOracle& a, const MatroidOracle& b) {
    return a.payload_ == b.payload_;
  }

 private:
  friend class SpanTester;

  explicit MatroidOracle(Payload payload);

  Payload payload_;
  std::size_t ground_size_ = 0;
  std::size_t rank_n_ = 0;
  // GF(2) with dim <= 64 packs every vector into one word.
  bool packed_ = false;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint32_t> inverse_;
};

// Incremental independence test against a growing independent set S:
// can_add(e) answers "is S + e independent".
class SpanTester {
 public:
  explicit SpanTester(const MatroidOracle& oracle);

  bool can_add(ElementId e) const;
  // Adds e when S + e is independent; returns whether it was added.
  bool add(ElementId e);
  std::size_t size() const { return size_; }

 private:
  std::vector<std::uint32_t> reduce(ElementId e) const;
  std::uint32_t find(std::uint32_t v) const;

  const MatroidOracle* oracle_;
  std::size_t size_ = 0;
  // linear, packed: echelon rows with pivot at the lowest set bit.
  std::vector<std::uint64_t> packed_rows_;
  // linear, general: echelon rows normalized to pivot 1.
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  // graphic: union-find forest (union by size, no path compression).
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> weight_;
  // uniform: members in sorted order.
  std::vector<ElementId> members_;
};

// Lowest-id a in A \ B with B + a independent. A and B must be independent
// with |A| > |B| (CallerBug otherwise); a miss raises OracleViolation.
ElementId augment(const MatroidOracle& m, const ElementSet& a,
                  const ElementSet& b);

// Grows `base` to `target_size` with the lowest-id elements of `pool` that
// keep it independent. Throws InfeasibleError when the target is out of
// reach.
ElementSet extend_independent(const MatroidOracle& m, const ElementSet& base,
                              const ElementSet& pool, std::size_t target_size);

bool is_prime(std::uint32_t p);

// Rank of a list of equal-length vectors over GF(p).
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> vectors,
                       std::uint32_t p);

}  // namespace kahn

#endif  // KAHN_MATROID_HPP_
