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

#ifndef KAHN_CLAIMS_HPP_
#define KAHN_CLAIMS_HPP_

#include <cstddef>

#include "kahn/table.hpp"

namespace kahn {

// Counters for the local-exchange bounds checked on sampled table states.
// Every *_violations / *_failures counter must stay at zero on a correct
// oracle.
struct ClaimTally {
  std::size_t states = 0;
  // No direct fill at (i,b) => at least n - |C_b| swappable columns.
  std::size_t many_good_checks = 0;
  std::size_t many_good_violations = 0;
  // Swappable (c,y) => S_i + y independent, or every x in B(i,c)
  // independent of S_i is addable.
  std::size_t add_if_good_checks = 0;
  std::size_t add_if_good_violations = 0;
  // r addable elements in column c, none independent of the column =>
  // at least r removable positions in column c.
  std::size_t removability_checks = 0;
  std::size_t removability_violations = 0;
  // No direct increase of any kind at (i,b) => at least
  // (n - |S_i|)(n - |C_b|) removable positions.
  std::size_t one_addability_checks = 0;
  std::size_t one_addability_violations = 0;
  // Injection S_i -> B(i,c) found and valid.
  std::size_t matching_checks = 0;
  std::size_t matching_failures = 0;
  // Removable records commit as moves.
  std::size_t committable_checks = 0;
  std::size_t committable_failures = 0;

  std::size_t violations() const {
    return many_good_violations + add_if_good_violations + removability_violations +
           one_addability_violations + matching_failures + committable_failures;
  }
  void merge(const ClaimTally& other);
};

// Checks every bound above at every empty cell of `t`.
void check_claims(const Table& t, ClaimTally& tally);

}  // namespace kahn

#endif  // KAHN_CLAIMS_HPP_
