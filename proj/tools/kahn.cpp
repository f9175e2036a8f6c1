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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kahn/brute.hpp"
#include "kahn/errors.hpp"
#include "kahn/io.hpp"
#include "kahn/solver.hpp"

namespace {

constexpr int kExitPartial = 2;
constexpr int kExitGuard = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitFile = 66;

using kahn::Json;

struct GenArgs {
  std::string kind = "linear";
  std::uint32_t p = 2;
  std::size_t n = 8;
  std::optional<std::size_t> f;
  std::optional<std::size_t> ground;
  std::string epsilon = "1/5";
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string in;
  std::string out;
  kahn::SolverConfig config;
  std::optional<std::size_t> depth_cap;
  std::optional<std::size_t> boost_rounds;
  std::optional<std::size_t> target;
};

struct VerifyArgs {
  std::string in;
  std::string solution;
};

struct BruteArgs {
  std::string in;
  std::string mode = "max-rows";
  std::size_t guard = kahn::kDefaultGuard;
};

struct ClaimsArgs {
  std::string in;
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
};

struct BenchArgs {
  std::vector<std::string> kinds{"linear"};
  std::vector<std::size_t> sizes{8, 12};
  std::size_t seeds = 3;
  std::string epsilon = "1/5";
  std::uint32_t p = 2;
  std::size_t jobs = 1;
  std::string out;
};

// Default f: the largest value inside the regime f <= (1 - eps) n / 2.
std::size_t regime_f(std::size_t n, const kahn::Rational& eps) {
  const auto num = static_cast<std::size_t>(eps.num());
  const auto den = static_cast<std::size_t>(eps.den());
  return std::max<std::size_t>(1, (den - num) * n / (2 * den));
}

kahn::Instance generate(const std::string& kind, std::uint32_t p, std::size_t n,
                        std::optional<std::size_t> f, std::optional<std::size_t> ground,
                        const kahn::Rational& eps, std::uint64_t seed) {
  const std::size_t rows = f.value_or(regime_f(n, eps));
  if (kind == "linear") return kahn::gen_linear_random(p, n, rows, eps, seed);
  if (kind == "rota") return kahn::gen_rota(p, n, eps, seed);
  if (kind == "graphic") return kahn::gen_graphic(n + 1, rows, eps, seed);
  if (kind == "uniform") return kahn::gen_uniform(n, ground.value_or(2 * n), rows, eps, seed);
  throw kahn::InputError("unknown kind '" + kind + "'");
}

void print_table(const kahn::Table& table) {
  for (const auto& row : table.cells()) {
    std::string line;
    for (const auto& c : row) {
      if (!line.empty()) line += ' ';
      line += c ? std::to_string(*c) : std::string(".");
    }
    std::cout << line << '\n';
  }
}

int run_gen(const GenArgs& a) {
  const auto eps = kahn::Rational::parse(a.epsilon);
  const auto instance = generate(a.kind, a.p, a.n, a.f, a.ground, eps, a.seed);
  const auto text = kahn::dump_canonical(kahn::instance_to_json(instance));
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    kahn::write_file(a.out, text);
  }
  std::cerr << "n=" << instance.n << " f=" << instance.f << " t=" << instance.target_rows()
            << (instance.in_regime() ? "" : " (outside regime)") << '\n';
  return 0;
}

int run_solve(SolveArgs a) {
  const auto instance = kahn::load_instance(a.in);
  a.config.depth_cap = a.depth_cap;
  a.config.boost_rounds = a.boost_rounds;
  a.config.target = a.target;
  const auto solution = kahn::solve(instance, a.config);
  if (!a.out.empty()) kahn::save_solution(solution, a.out);
  std::cout << "status=" << kahn::status_name(solution.status) << " L=" << solution.full.size()
            << " t=" << solution.target << " filled=" << solution.table.filled()
            << " moves=" << solution.table.log().size()
            << " attempts=" << solution.stats.attempts << '\n';
  return solution.status == kahn::SolveStatus::reached_t ? 0 : kExitPartial;
}

int run_verify(const VerifyArgs& a) {
  const auto instance = kahn::load_instance(a.in);
  const auto file = kahn::load_solution(a.solution);
  const auto table = file.to_table(instance);
  const auto report = kahn::verify(instance, table);
  for (const auto& inv : report.invariants) {
    std::cout << inv.name << ' ' << (inv.passed ? "ok" : "FAIL");
    if (!inv.passed && inv.first_failure) {
      std::cout << " at (" << inv.first_failure->row << ',' << inv.first_failure->col << "): "
                << inv.detail;
    }
    std::cout << '\n';
  }
  std::cout << "L=" << report.full_rows << " t=" << report.target_rows << '\n';
  return report.all_passed() ? 0 : 1;
}

int run_brute(const BruteArgs& a) {
  const auto instance = kahn::load_instance(a.in);
  if (a.mode == "max-rows") {
    const auto result = kahn::brute_max_rows(instance, a.guard);
    std::cout << "optimum=" << result.optimum << " nodes=" << result.nodes << '\n';
    print_table(result.witness);
    return 0;
  }
  if (a.mode == "kahn-full") {
    const auto result = kahn::brute_kahn_full(instance, a.guard);
    if (!result) {
      std::cout << "none found\n";
      return 1;
    }
    std::cout << "found\n";
    print_table(*result);
    return 0;
  }
  throw kahn::InputError("unknown mode '" + a.mode + "'");
}

int run_claims(const ClaimsArgs& a) {
  const auto instance = kahn::load_instance(a.in);
  std::vector<std::uint64_t> seeds;
  for (std::size_t k = 0; k < a.seeds; ++k) seeds.push_back(a.first_seed + k);
  const auto report = kahn::claims_sweep(instance, kahn::SolverConfig{}, seeds);
  const auto& t = report.tally;
  std::cout << "runs=" << report.runs << " reached=" << report.reached << " states=" << t.states
            << '\n'
            << "many_good " << t.many_good_checks << " checks, " << t.many_good_violations
            << " violations\n"
            << "add_if_good " << t.add_if_good_checks << " checks, "
            << t.add_if_good_violations << " violations\n"
            << "removability " << t.removability_checks << " checks, "
            << t.removability_violations << " violations\n"
            << "one_addability " << t.one_addability_checks << " checks, "
            << t.one_addability_violations << " violations\n"
            << "matching " << t.matching_checks << " checks, " << t.matching_failures
            << " failures\n"
            << "committable " << t.committable_checks << " checks, " << t.committable_failures
            << " failures\n";
  return t.violations() == 0 ? 0 : 1;
}

struct BenchRow {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Json result;
};

Json bench_one(const BenchArgs& a, const std::string& kind, std::size_t n, std::uint64_t seed) {
  const auto eps = kahn::Rational::parse(a.epsilon);
  try {
    const auto instance = generate(kind, a.p, n, std::nullopt, std::nullopt, eps, seed);
    kahn::SolverConfig config;
    config.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const auto solution = kahn::solve(instance, config);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    const double ratio = solution.target == 0
                             ? 1.0
                             : static_cast<double>(solution.full.size()) /
                                   static_cast<double>(solution.target);
    return Json{{"kind", kind},
                {"n", n},
                {"f", instance.f},
                {"seed", seed},
                {"t", solution.target},
                {"L", solution.full.size()},
                {"ratio", ratio},
                {"status", kahn::status_name(solution.status)},
                {"moves", solution.stats.moves},
                {"runtime_ms", elapsed.count()}};
  } catch (const std::exception& e) {
    return Json{{"kind", kind}, {"n", n}, {"seed", seed}, {"error", e.what()}};
  }
}

int run_bench(const BenchArgs& a) {
  kahn::Rational::parse(a.epsilon);
  std::vector<BenchRow> rows;
  for (const auto& kind : a.kinds) {
    for (auto n : a.sizes) {
      for (std::uint64_t s = 0; s < a.seeds; ++s) rows.push_back({kind, n, s, {}});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      rows[k].result = bench_one(a, rows[k].kind, rows[k].n, rows[k].seed);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(1, a.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r.result);
  const auto text = kahn::dump_canonical(Json{{"epsilon", a.epsilon}, {"runs", out}});
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    kahn::write_file(a.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Table filling for grids of matroid bases"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a seeded instance");
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"linear", "graphic", "uniform", "rota"}));
  g->add_option("--p", gen.p, "Field size for linear and rota");
  g->add_option("--n", gen.n, "Rank");
  g->add_option("--f", gen.f, "Rows (default: largest in regime)");
  g->add_option("--ground", gen.ground, "Ground size for uniform (default 2n)");
  g->add_option("--epsilon", gen.epsilon, "Rational num/den");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Fill a table for an instance");
  s->add_option("--in", solve.in)->required();
  s->add_option("--out", solve.out, "Solution file");
  s->add_option("--seed", solve.config.seed);
  s->add_option("--max-iterations", solve.config.max_iterations);
  s->add_option("--depth-cap", solve.depth_cap);
  s->add_option("--q-cap", solve.config.q_cap, "0 selects 10nf");
  s->add_option("--boost-rounds", solve.boost_rounds);
  s->add_option("--max-idle-boosts", solve.config.max_idle_boosts);
  s->add_option("--time-limit", solve.config.time_limit, "Seconds, 0 for none");
  s->add_option("--target", solve.target, "Override t");
  s->add_flag("--strict", solve.config.strict);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a solution against its instance");
  v->add_option("--in", verify.in)->required();
  v->add_option("--solution", verify.solution)->required();

  BruteArgs brute;
  auto* b = app.add_subcommand("brute", "Exhaustive search on small instances");
  b->add_option("--in", brute.in)->required();
  b->add_option("--mode", brute.mode)->check(CLI::IsMember({"max-rows", "kahn-full"}));
  b->add_option("--guard", brute.guard);

  ClaimsArgs claims;
  auto* c = app.add_subcommand("claims", "Run the solver with local bound checks");
  c->add_option("--in", claims.in)->required();
  c->add_option("--seeds", claims.seeds);
  c->add_option("--first-seed", claims.first_seed);

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Summary table over generated instances");
  be->add_option("--kinds", bench.kinds)
      ->delimiter(',')
      ->check(CLI::IsMember({"linear", "graphic", "uniform", "rota"}));
  be->add_option("--sizes", bench.sizes)->delimiter(',');
  be->add_option("--seeds", bench.seeds);
  be->add_option("--epsilon", bench.epsilon);
  be->add_option("--p", bench.p);
  be->add_option("--jobs", bench.jobs);
  be->add_option("--out", bench.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*s) return run_solve(solve);
    if (*v) return run_verify(verify);
    if (*b) return run_brute(brute);
    if (*c) return run_claims(claims);
    if (*be) return run_bench(bench);
  } catch (const kahn::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const kahn::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const kahn::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const kahn::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
