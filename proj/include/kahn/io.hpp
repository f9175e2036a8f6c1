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

#ifndef KAHN_IO_HPP_
#define KAHN_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "kahn/instance.hpp"
#include "kahn/solver.hpp"
#include "kahn/table.hpp"

namespace kahn {

using Json = nlohmann::json;

// Canonical form: sorted keys, no insignificant whitespace, trailing LF.
std::string dump_canonical(const Json& j);

Json instance_to_json(const Instance& instance);
// Throws SchemaError (with cell coordinates where applicable).
Instance instance_from_json(const Json& j);

Json move_to_json(const Move& move);
Move move_from_json(const Json& j);

Json solution_to_json(const Solution& solution);

// Solution file contents as stored; the table is rebuilt against an
// instance with `to_table`.
struct SolutionFile {
  Cells table;
  std::vector<std::size_t> full;
  std::vector<Move> moves;
  std::string status;
  Json stats;

  Table to_table(const Instance& instance) const;
};

SolutionFile solution_from_json(const Json& j);
Json solution_file_to_json(const SolutionFile& file);

// Missing or unreadable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);
SolutionFile load_solution(const std::filesystem::path& path);
void save_solution(const Solution& solution, const std::filesystem::path& path);

}  // namespace kahn

#endif  // KAHN_IO_HPP_
