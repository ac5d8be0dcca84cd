// Copyright 2026 The ionzne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace ionzne::xcli {

using Cell = std::variant<std::string, double, long>;

/// Tab-separated table with a header row. Doubles print with 12 significant digits so
/// reruns compare byte for byte.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);
  void add(std::vector<Cell> row);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_cell(const Cell& c);

/// Collects the files of one run and writes manifest.json next to them.
class RunOutput {
 public:
  explicit RunOutput(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  void write_table(const std::string& name, const Table& t);
  void write_text(const std::string& name, const std::string& text);
  /// Wall-clock and other run metadata belong here, never in the tables.
  void write_manifest(nlohmann::json manifest) const;

 private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
};

}  // namespace ionzne::xcli
