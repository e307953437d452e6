// Copyright 2026 The polconv Authors
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

#include "cli/format.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace polconv::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return csv_escape(std::get<std::string>(c));
  return "";
}

Json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) return json_number(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

void flatten_into(const Json& j, const std::string& prefix, Table& t) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten_into(v, prefix.empty() ? k : prefix + "." + k, t);
    }
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_into(j[i], prefix + "." + std::to_string(i), t);
    }
    return;
  }
  t.columns.push_back(prefix);
  Cell c;
  if (j.is_number()) c = j.get<double>();
  else if (j.is_string()) c = j.get<std::string>();
  else if (j.is_boolean()) c = std::string(j.get<bool>() ? "true" : "false");
  t.rows.front().push_back(std::move(c));
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  return fmt::format("{:.12g}", value);
}

Json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  const std::string s = format_number(value);
  double rounded = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), rounded);
  return rounded;
}

Json json_delta(double value) { return format_number(value); }

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(columns[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

Json Table::to_json() const {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
      obj[columns[i]] = cell_json(row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

Table flatten(const Json& object) {
  Table t;
  t.rows.emplace_back();
  flatten_into(object, "", t);
  return t;
}

}  // namespace polconv::cli
