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

#include "ionzne/xcli/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::xcli {

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* l = std::get_if<long>(&c)) return std::to_string(*l);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(c));
  return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw ValidationError("table row has the wrong number of cells");
  rows_.push_back(std::move(row));
}

std::string Table::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < columns_.size(); ++k) os << (k ? "\t" : "") << columns_[k];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "\t" : "") << format_cell(row[k]);
    os << '\n';
  }
  return os.str();
}

void Table::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << str();
}

RunOutput::RunOutput(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void RunOutput::write_table(const std::string& name, const Table& t) {
  t.write(dir_ / name);
  files_.push_back(name);
}

void RunOutput::write_text(const std::string& name, const std::string& text) {
  std::ofstream out(dir_ / name);
  if (!out) throw ValidationError("cannot write " + (dir_ / name).string());
  out << text;
  files_.push_back(name);
}

void RunOutput::write_manifest(nlohmann::json manifest) const {
  manifest["outputs"] = files_;
  std::ofstream out(dir_ / "manifest.json");
  if (!out) throw ValidationError("cannot write manifest in " + dir_.string());
  out << manifest.dump(2) << '\n';
}

}  // namespace ionzne::xcli
