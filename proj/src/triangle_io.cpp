// Copyright 2026 The triangle-forge Authors
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

#include "tforge/triangle_io.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace tforge {

std::string to_json(const Triangle& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rat& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  nlohmann::json j = {{"construction", t.construction()},
                      {"params", t.params()},
                      {"N", t.depth()},
                      {"rows", std::move(rows)}};
  return j.dump();
}

Triangle triangle_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j.at("rows")) {
      std::vector<Rat> row;
      for (const auto& v : r) row.push_back(parse_rat(v.get<std::string>()));
      rows.push_back(std::move(row));
    }
    if (static_cast<Index>(rows.size()) != j.at("N").get<Index>() + 1) {
      throw std::invalid_argument("row count does not match N");
    }
    return Triangle(j.at("construction").get<std::string>(),
                    j.at("params").get<std::map<std::string, std::string>>(),
                    std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad triangle JSON: ") + e.what());
  }
}

std::string to_csv(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out += ',';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_pretty(const Triangle& t) {
  std::size_t width = 1;
  for (const auto& row : t.rows()) {
    for (const Rat& v : row) width = std::max(width, to_string(v).size());
  }
  const std::size_t cell = (width + 2) / 2 * 2;  // even, so half-cell indents are exact
  std::string out;
  const auto depth = static_cast<std::size_t>(t.depth());
  for (std::size_t n = 0; n <= depth; ++n) {
    std::string line((depth - n) * cell / 2, ' ');
    for (const Rat& v : t.rows()[n]) {
      const std::string s = to_string(v);
      line += std::string(cell - s.size(), ' ') + s;
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace tforge
