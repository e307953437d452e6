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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace polconv::cli {

using Json = nlohmann::ordered_json;

/// Fixed 12-significant-digit rendering used by every output file.
std::string format_number(double value);

/// JSON number carrying exactly the digits format_number prints.
Json json_number(double value);
/// Deltas travel as decimal strings so their digits survive any JSON reader.
Json json_delta(double value);

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string to_csv() const;
  /// Array of row objects with keys in column order.
  Json to_json() const;
};

/// Flattens nested objects into a single row using dotted keys.
Table flatten(const Json& object);

}  // namespace polconv::cli
