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

#include "kahn/io.hpp"

#include <fstream>
#include <sstream>

#include "kahn/errors.hpp"

namespace kahn {

std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

ElementId as_id(const Json& j) {
  return static_cast<ElementId>(as_size(j, "element id"));
}

Json matroid_to_json(const MatroidOracle& m) {
  return std::visit(Overloaded{
                        [](const LinearPayload& p) {
                          return Json{{"kind", "linear"}, {"p", p.p}, {"vectors", p.vectors}};
                        },
                        [](const GraphicPayload& p) {
                          Json edges = Json::array();
                          for (const auto& [u, v] : p.edges) edges.push_back({u, v});
                          return Json{{"kind", "graphic"}, {"vertices", p.vertices}, {"edges", edges}};
                        },
                        [](const UniformPayload& p) {
                          return Json{{"kind", "uniform"}, {"k", p.k}, {"ground", p.ground}};
                        },
                    },
                    m.payload());
}

MatroidOracle matroid_from_json(const Json& j, std::size_t n) {
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "linear") {
      LinearPayload p;
      p.p = static_cast<std::uint32_t>(as_size(j.at("p"), "p"));
      p.dim = n;
      for (const auto& v : j.at("vectors")) {
        std::vector<std::uint32_t> vec;
        for (const auto& x : v) vec.push_back(static_cast<std::uint32_t>(as_size(x, "vector entry")));
        p.vectors.push_back(std::move(vec));
      }
      return MatroidOracle::linear(std::move(p));
    }
    if (kind == "graphic") {
      GraphicPayload p;
      p.vertices = as_size(j.at("vertices"), "vertices");
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("edge must be a pair");
        p.edges.emplace_back(static_cast<std::uint32_t>(as_size(e[0], "vertex")),
                             static_cast<std::uint32_t>(as_size(e[1], "vertex")));
      }
      return MatroidOracle::graphic(std::move(p));
    }
    if (kind == "uniform") {
      return MatroidOracle::uniform({as_size(j.at("k"), "k"), as_size(j.at("ground"), "ground")});
    }
  } catch (const InputError& e) {
    throw SchemaError(std::string("matroid: ") + e.what());
  }
  throw SchemaError("unknown matroid kind '" + kind + "'");
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json bases = Json::array();
  for (const auto& row : instance.bases) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(std::vector<ElementId>(cell.begin(), cell.end()));
    bases.push_back(std::move(r));
  }
  return Json{{"matroid", matroid_to_json(instance.matroid)},
              {"n", instance.n},
              {"f", instance.f},
              {"epsilon", instance.epsilon.str()},
              {"bases", std::move(bases)}};
}

Instance instance_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw SchemaError("instance must be a JSON object");
    const std::size_t n = as_size(j.at("n"), "n");
    const std::size_t f = as_size(j.at("f"), "f");
    Rational epsilon;
    try {
      epsilon = Rational::parse(j.at("epsilon").get<std::string>());
    } catch (const InputError& e) {
      throw SchemaError(e.what());
    }
    auto matroid = matroid_from_json(j.at("matroid"), n);
    const Json& grid = j.at("bases");
    if (!grid.is_array() || grid.size() != f) {
      throw SchemaError("bases must have " + std::to_string(f) + " rows");
    }
    std::vector<std::vector<ElementSet>> bases(f);
    for (std::size_t i = 0; i < f; ++i) {
      if (!grid[i].is_array() || grid[i].size() != n) {
        throw SchemaError("row " + std::to_string(i) + " of bases must have " +
                          std::to_string(n) + " cells");
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<ElementId> ids;
        for (const auto& e : grid[i][c]) ids.push_back(as_id(e));
        const std::size_t listed = ids.size();
        ElementSet cell(std::move(ids));
        if (cell.size() != listed) {
          throw SchemaError("cell (" + std::to_string(i) + "," + std::to_string(c) +
                            ") repeats an element");
        }
        bases[i].push_back(std::move(cell));
      }
    }
    Instance instance{std::move(matroid), n, f, epsilon, std::move(bases)};
    validate(instance);
    return instance;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("instance: ") + e.what());
  }
}

Json move_to_json(const Move& move) {
  auto opt = [](const std::optional<ElementId>& v) { return v ? Json(*v) : Json(nullptr); };
  auto removal = [&](const RemovalStep& s) {
    return Json{{"type", "removal"}, {"row", s.row},         {"target", s.target},
                {"column", s.column}, {"x", s.x},            {"witness", opt(s.witness)},
                {"removed_row", s.removed_row}};
  };
  return std::visit(Overloaded{
                        [](const PlaceDirect& m) {
                          return Json{{"type", "place"}, {"row", m.row}, {"col", m.col}, {"x", m.x}};
                        },
                        [&](const SimpleSwap& m) {
                          return Json{{"type", "swap"},     {"row", m.row},
                                      {"target", m.target}, {"source", m.source},
                                      {"witness", m.witness}, {"x", opt(m.x)}};
                        },
                        [&](const RemovalStep& m) { return removal(m); },
                        [&](const Transfer& m) {
                          Json steps = Json::array();
                          for (const auto& s : m.steps) steps.push_back(removal(s));
                          return Json{{"type", "transfer"}, {"steps", steps}};
                        },
                    },
                    move);
}

namespace {

std::optional<ElementId> opt_id(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return as_id(j);
}

RemovalStep removal_from_json(const Json& j) {
  return RemovalStep{as_size(j.at("row"), "row"),       as_size(j.at("target"), "target"),
                     as_size(j.at("column"), "column"), as_id(j.at("x")),
                     opt_id(j.at("witness")),           as_size(j.at("removed_row"), "removed_row")};
}

}  // namespace

Move move_from_json(const Json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "place") {
      return PlaceDirect{as_size(j.at("row"), "row"), as_size(j.at("col"), "col"), as_id(j.at("x"))};
    }
    if (type == "swap") {
      return SimpleSwap{as_size(j.at("row"), "row"), as_size(j.at("target"), "target"),
                        as_size(j.at("source"), "source"), as_id(j.at("witness")),
                        opt_id(j.at("x"))};
    }
    if (type == "removal") return removal_from_json(j);
    if (type == "transfer") {
      Transfer t;
      for (const auto& s : j.at("steps")) t.steps.push_back(removal_from_json(s));
      return t;
    }
    throw SchemaError("unknown move type '" + type + "'");
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("move: ") + e.what());
  }
}

namespace {

Json stats_to_json(const SolverStats& s, std::size_t target) {
  Json traces = Json::array();
  for (const auto& t : s.traces) {
    traces.push_back({{"start_row", t.start_row},
                      {"rows", t.rows},
                      {"q_sizes", t.q_sizes},
                      {"truncated", t.truncated}});
  }
  Json boosts = Json::array();
  for (const auto& b : s.boosts) {
    boosts.push_back({{"outcome", boost_name(b.kind)}, {"levels", b.levels}, {"stars", b.stars}});
  }
  return Json{{"t", target},
              {"moves", s.moves},
              {"iterations", s.iterations},
              {"attempts", s.attempts},
              {"improving_cascades", s.improving_cascades},
              {"exhausted_cascades", s.exhausted_cascades},
              {"max_cascade_level", s.max_cascade_level},
              {"recurrence_levels", s.recurrence_levels},
              {"recurrence_misses", s.recurrence_misses},
              {"truncated_levels", s.truncated_levels},
              {"q_cap", s.q_cap},
              {"depth_cap", s.depth_cap},
              {"C", s.C},
              {"D", s.D},
              {"traces", traces},
              {"boosts", boosts}};
}

Json cells_to_json(const Cells& cells) {
  Json out = Json::array();
  for (const auto& row : cells) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c ? Json(*c) : Json(nullptr));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json solution_to_json(const Solution& solution) {
  Json moves = Json::array();
  for (const auto& m : solution.table.log()) moves.push_back(move_to_json(m));
  return Json{{"table", cells_to_json(solution.table.cells())},
              {"L", solution.full},
              {"moves", std::move(moves)},
              {"status", status_name(solution.status)},
              {"stats", stats_to_json(solution.stats, solution.target)}};
}

SolutionFile solution_from_json(const Json& j) {
  try {
    SolutionFile out;
    for (const auto& row : j.at("table")) {
      std::vector<std::optional<ElementId>> r;
      for (const auto& c : row) r.push_back(opt_id(c));
      out.table.push_back(std::move(r));
    }
    for (const auto& i : j.at("L")) out.full.push_back(as_size(i, "row id"));
    for (const auto& m : j.at("moves")) out.moves.push_back(move_from_json(m));
    out.status = j.at("status").get<std::string>();
    out.stats = j.at("stats");
    return out;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("solution: ") + e.what());
  }
}

Json solution_file_to_json(const SolutionFile& file) {
  Json moves = Json::array();
  for (const auto& m : file.moves) moves.push_back(move_to_json(m));
  return Json{{"table", cells_to_json(file.table)},
              {"L", file.full},
              {"moves", std::move(moves)},
              {"status", file.status},
              {"stats", file.stats}};
}

Table SolutionFile::to_table(const Instance& instance) const {
  if (table.size() != instance.f) {
    throw SchemaError("solution table has " + std::to_string(table.size()) + " rows, expected " +
                      std::to_string(instance.f));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != instance.n) {
      throw SchemaError("solution row " + std::to_string(i) + " has " +
                        std::to_string(table[i].size()) + " cells, expected " +
                        std::to_string(instance.n));
    }
  }
  return Table::from_cells(instance, table, moves);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

namespace {

Json parse(const std::string& text, const std::filesystem::path& path) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw SchemaError(path.string() + ": empty file");
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(parse(read_file(path), path));
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_file(path, dump_canonical(instance_to_json(instance)));
}

SolutionFile load_solution(const std::filesystem::path& path) {
  return solution_from_json(parse(read_file(path), path));
}

void save_solution(const Solution& solution, const std::filesystem::path& path) {
  write_file(path, dump_canonical(solution_to_json(solution)));
}

}  // namespace kahn
