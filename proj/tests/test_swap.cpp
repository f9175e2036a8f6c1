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

#include "doctest.h"

#include <set>

#include "kahn/claims.hpp"
#include "kahn/errors.hpp"
#include "kahn/swap.hpp"
#include "support.hpp"

using namespace kahn;
using test::naive_independent;

namespace {

std::vector<ElementId> members(const ElementSet& s) { return {s.begin(), s.end()}; }

std::optional<ElementId> brute_direct(const Table& t, std::size_t i, std::size_t b) {
  const auto& m = t.instance().matroid;
  for (auto x : t.instance().basis(i, b)) {
    if (naive_independent(m, test::plus(t.row_set(i), x)) &&
        naive_independent(m, test::plus(t.col_set(b), x))) {
      return x;
    }
  }
  return std::nullopt;
}

std::vector<SwapColumn> brute_swappable(const Table& t, std::size_t i, std::size_t b) {
  const auto& m = t.instance().matroid;
  std::vector<SwapColumn> out;
  for (std::size_t c = 0; c < t.cols(); ++c) {
    if (!t.at(i, c)) continue;
    for (auto y : t.instance().basis(i, b)) {
      if (naive_independent(m, test::plus(t.col_set(b), y)) &&
          naive_independent(m, test::minus_plus(t.row_set(i), *t.at(i, c), {y}))) {
        out.push_back({c, y});
        break;
      }
    }
  }
  return out;
}

std::vector<AddableRecord> brute_addable(const Table& t, std::size_t i, std::size_t b,
                                         std::size_t c) {
  const auto& m = t.instance().matroid;
  std::vector<AddableRecord> out;
  for (auto x : t.instance().basis(i, c)) {
    if (!t.at(i, c)) {
      if (naive_independent(m, test::plus(t.row_set(i), x)) &&
          naive_independent(m, test::plus(t.col_set(c), x))) {
        out.push_back({{i, b}, c, x, std::nullopt, std::nullopt});
      }
      continue;
    }
    const ElementId displaced = *t.at(i, c);
    for (auto y : t.instance().basis(i, b)) {
      if (naive_independent(m, test::plus(t.col_set(b), y)) &&
          naive_independent(m, test::minus_plus(t.row_set(i), displaced, {y})) &&
          naive_independent(m, test::minus_plus(t.row_set(i), displaced, {y, x}))) {
        out.push_back({{i, b}, c, x, y, displaced});
        break;
      }
    }
  }
  return out;
}

template <class F>
void for_each_empty(const test::StateBank& bank, F&& f) {
  for (const auto& t : bank.tables) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
      for (std::size_t b = 0; b < t.cols(); ++b) {
        if (!t.at(i, b)) f(t, i, b);
      }
    }
  }
}

// GF(2)^3: e1, e2, e3, e1+e2, e2+e3, e1+e2+e3.
Instance cube_instance() {
  Instance inst{MatroidOracle::linear({2,
                                       3,
                                       {{1, 0, 0},
                                        {0, 1, 0},
                                        {0, 0, 1},
                                        {1, 1, 0},
                                        {0, 1, 1},
                                        {1, 1, 1}}}),
                3,
                1,
                Rational(1, 5),
                {{ElementSet{0, 1, 2}, ElementSet{0, 1, 2}, ElementSet{3, 4, 5}}}};
  validate(inst);
  return inst;
}

}  // namespace

TEST_CASE("direct_add") {
  SUBCASE("empty table admits every cell") {
    const auto inst = gen_linear_random(3, 4, 3, Rational(1, 5), 2);
    Table t(inst);
    for (std::size_t i = 0; i < inst.f; ++i) {
      for (std::size_t b = 0; b < inst.n; ++b) {
        const auto m = direct_add(t, i, b);
        REQUIRE(m);
        CHECK(m->x == inst.basis(i, b)[0]);
      }
    }
  }
  SUBCASE("saturated column") {
    Instance inst{MatroidOracle::uniform({1, 2}), 1, 2, Rational(1, 5),
                  {{ElementSet{0}}, {ElementSet{1}}}};
    Table t(inst);
    t.commit(PlaceDirect{0, 0, 0});
    CHECK_FALSE(direct_add(t, 1, 0));
  }
  SUBCASE("filled cell is a caller bug") {
    const auto inst = gen_linear_random(2, 2, 1, Rational(1, 5), 0);
    Table t(inst);
    t.commit(*direct_add(t, 0, 0));
    CHECK_THROWS_AS(direct_add(t, 0, 0), CallerBug);
    CHECK_THROWS_AS(swappable_columns(t, 0, 0), CallerBug);
  }
  SUBCASE("matches an exhaustive scan on GF(2) n = 3") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = test::repeated_bases_instance(2, 3, 3, 2, seed);
      Table t(inst);
      test::greedy_fill(t, seed, 4 + seed % 4);
      for (std::size_t i = 0; i < inst.f; ++i) {
        for (std::size_t b = 0; b < inst.n; ++b) {
          if (t.at(i, b)) continue;
          const auto got = direct_add(t, i, b);
          const auto want = brute_direct(t, i, b);
          CHECK(got.has_value() == want.has_value());
          if (got && want) CHECK(got->x == *want);
        }
      }
    }
  }
}

TEST_CASE("swappable columns") {
  SUBCASE("empty row") {
    const auto inst = gen_linear_random(3, 3, 2, Rational(1, 5), 1);
    Table t(inst);
    CHECK(swappable_columns(t, 0, 0).empty());
  }
  SUBCASE("single entry in a GF(3) row") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = gen_linear_random(3, 3, 2, Rational(1, 5), seed);
      Table t(inst);
      t.commit(PlaceDirect{0, 1, inst.basis(0, 1)[0]});
      const auto got = swappable_columns(t, 0, 0);
      CHECK(got == brute_swappable(t, 0, 0));
    }
  }
  SUBCASE("matches brute enumeration on sampled states") {
    const auto bank = test::small_states(4);
    for_each_empty(bank, [](const Table& t, std::size_t i, std::size_t b) {
      CHECK(swappable_columns(t, i, b) == brute_swappable(t, i, b));
    });
  }
}

TEST_CASE("addable elements match a brute pair scan") {
  const auto bank = test::small_states(4);
  std::size_t witnessed = 0;
  for_each_empty(bank, [&](const Table& t, std::size_t i, std::size_t b) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const auto scan = addable_elements(t, i, b, c);
      const auto want = brute_addable(t, i, b, c);
      CHECK(scan.records == want);
      for (const auto& r : want) witnessed += r.witness.has_value();
      // The bonus is exactly a direct fill of (i,b).
      const auto direct = brute_direct(t, i, b);
      if (t.at(i, c)) {
        CHECK(scan.bonus.has_value() == (direct.has_value() &&
                                         naive_independent(t.instance().matroid,
                                                           test::minus_plus(t.row_set(i), *t.at(i, c),
                                                                            {*direct}))));
      } else {
        CHECK_FALSE(scan.bonus);
      }
    }
  });
  CHECK(witnessed > 0);
}

TEST_CASE("removable positions match commit attempts") {
  const auto bank = test::small_states(5);
  std::size_t compared = 0;
  for_each_empty(bank, [&](const Table& t, std::size_t i, std::size_t b) {
    const auto scan = removable_positions(t, i, b);
    const auto want = test::brute_removable(t, i, b);
    REQUIRE(scan.records.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(scan.records[k].removed == want[k].removed);
      CHECK(scan.records[k].add.x == want[k].x);
      CHECK(scan.records[k].add.witness == want[k].witness);
      CHECK(scan.records[k].removed_element == *t.at(want[k].removed.row, want[k].removed.col));
    }
    compared += want.size();
    if (scan.direct_increase) {
      Table probe = t.scratch();
      const auto before = probe.filled();
      probe.commit(*scan.direct_increase);
      CHECK(probe.filled() == before + 1);
    }
  });
  CHECK(compared > 100);
}

TEST_CASE("removable records commit") {
  const auto bank = test::small_states(3);
  for_each_empty(bank, [](const Table& t, std::size_t i, std::size_t b) {
    for (const auto& rec : removable_positions(t, i, b).records) {
      Table probe = t.scratch();
      const auto before = probe.filled();
      CHECK(probe.try_commit(rec.as_move()));
      CHECK(probe.filled() == before);
      CHECK_FALSE(probe.at(rec.removed.row, rec.removed.col));
    }
  });
}

TEST_CASE("claim bounds hold on every sampled state") {
  const auto bank = test::small_states(6);
  ClaimTally tally;
  for (const auto& t : bank.tables) check_claims(t, tally);
  CHECK(tally.violations() == 0);
  CHECK(tally.many_good_checks > 0);
  CHECK(tally.add_if_good_checks > 0);
  CHECK(tally.removability_checks > 0);
  CHECK(tally.one_addability_checks > 0);
  CHECK(tally.matching_checks > 0);
  CHECK(tally.committable_checks > 0);
}

TEST_CASE("many-good bound against brute swappability") {
  const auto bank = test::small_states(6);
  std::size_t stuck = 0;
  for_each_empty(bank, [&](const Table& t, std::size_t i, std::size_t b) {
    if (brute_direct(t, i, b)) return;
    ++stuck;
    CHECK(brute_swappable(t, i, b).size() >= t.cols() - t.col_size(b));
  });
  CHECK(stuck > 0);
}

TEST_CASE("matching injection") {
  SUBCASE("empty row") {
    const auto inst = gen_linear_random(2, 3, 1, Rational(1, 5), 0);
    Table t(inst);
    CHECK(matching_injection(t, 0, 1).empty());
  }
  SUBCASE("same basis") {
    const auto inst = test::same_basis_instance(4, 1);
    Table t(inst);
    t.commit(PlaceDirect{0, 0, 2});
    t.commit(PlaceDirect{0, 1, 0});
    const auto phi = matching_injection(t, 0, 3);
    REQUIRE(phi.size() == 2);
    for (auto [x, y] : phi) {
      CHECK(naive_independent(inst.matroid, test::minus_plus(t.row_set(0), x, {y})));
    }
  }
  SUBCASE("GF(2)^3 example") {
    const auto inst = cube_instance();
    Table t(inst);
    t.commit(PlaceDirect{0, 0, 0});
    t.commit(PlaceDirect{0, 1, 1});
    const auto phi = matching_injection(t, 0, 2);
    REQUIRE(phi.size() == 2);
    std::set<ElementId> images;
    for (auto [x, y] : phi) {
      CHECK(t.row_set(0).contains(x));
      CHECK(inst.basis(0, 2).contains(y));
      CHECK(naive_independent(inst.matroid, test::minus_plus(t.row_set(0), x, {y})));
      images.insert(y);
    }
    CHECK(images.size() == 2);
  }
  SUBCASE("valid on sampled states") {
    const auto bank = test::small_states(3);
    for (const auto& t : bank.tables) {
      for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
          const auto phi = matching_injection(t, i, c);
          CHECK(phi.size() == t.row_size(i));
          std::set<ElementId> images;
          for (auto [x, y] : phi) {
            CHECK(t.instance().basis(i, c).contains(y));
            CHECK(naive_independent(t.instance().matroid,
                                    test::minus_plus(t.row_set(i), x, {y})));
            images.insert(y);
          }
          CHECK(images.size() == phi.size());
        }
      }
    }
  }
}
