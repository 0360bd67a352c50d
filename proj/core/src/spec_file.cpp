// Copyright 2026 The qsynapse developers
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

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsynapse/errors.hpp"
#include "qsynapse/spec_file.hpp"

namespace qsynapse {

namespace {

using nlohmann::json;

std::uint64_t require_unsigned(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    throw SchemaError("expected a non-negative integer", path);
  }
  return value.get<std::uint64_t>();
}

std::uint32_t require_width(const json& value, const std::string& path) {
  const std::uint64_t width = require_unsigned(value, path);
  if (width == 0 || width > 63) {
    throw SchemaError("width must be between 1 and 63", path);
  }
  return static_cast<std::uint32_t>(width);
}

std::vector<Connection> parse_connections(const json& value,
                                          const std::string& path) {
  if (!value.is_array()) {
    throw SchemaError("expected an array of {\"from\", \"to\"} records",
                      path);
  }
  std::vector<Connection> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string record_path = path + "[" + std::to_string(i) + "]";
    const json& record = value[i];
    if (!record.is_object()) {
      throw SchemaError("expected a {\"from\", \"to\"} record", record_path);
    }
    for (const auto& [key, unused] : record.items()) {
      if (key != "from" && key != "to") {
        throw SchemaError("unknown key", record_path + "." + key);
      }
    }
    if (!record.contains("from")) {
      throw SchemaError("missing required key", record_path + ".from");
    }
    if (!record.contains("to")) {
      throw SchemaError("missing required key", record_path + ".to");
    }
    Connection connection;
    connection.from = static_cast<std::uint32_t>(
        require_unsigned(record["from"], record_path + ".from"));
    connection.to = static_cast<std::uint32_t>(
        require_unsigned(record["to"], record_path + ".to"));
    out.push_back(connection);
  }
  return out;
}

}  // namespace

PerceptronSpec parse_spec_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& error) {
    throw SchemaError(std::string("invalid JSON: ") + error.what(), "$");
  }
  if (!doc.is_object()) {
    throw SchemaError("spec must be a JSON object", "$");
  }

  static const std::set<std::string> known = {
      "input_to_hidden", "hidden_to_output", "inputs",
      "input_width",     "weight_width",     "threshold",
      "threshold_width", "condition"};
  for (const auto& [key, unused] : doc.items()) {
    if (!known.count(key)) {
      throw SchemaError("unknown key", key);
    }
  }
  for (const std::string& key :
       {"input_to_hidden", "hidden_to_output", "inputs", "input_width",
        "weight_width", "threshold", "condition"}) {
    if (!doc.contains(key)) {
      throw SchemaError("missing required key", key);
    }
  }

  PerceptronSpec spec;
  spec.topology.input_to_hidden =
      parse_connections(doc["input_to_hidden"], "input_to_hidden");
  spec.topology.hidden_to_output =
      parse_connections(doc["hidden_to_output"], "hidden_to_output");

  const json& inputs = doc["inputs"];
  if (!inputs.is_array()) {
    throw SchemaError("expected an array of integers", "inputs");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    spec.input_values.push_back(require_unsigned(
        inputs[i], "inputs[" + std::to_string(i) + "]"));
  }

  spec.input_width = require_width(doc["input_width"], "input_width");
  spec.weight_width = require_width(doc["weight_width"], "weight_width");
  spec.threshold = require_unsigned(doc["threshold"], "threshold");
  if (doc.contains("threshold_width")) {
    spec.threshold_width =
        require_width(doc["threshold_width"], "threshold_width");
  }

  const json& condition = doc["condition"];
  if (!condition.is_string()) {
    throw SchemaError("expected \"eq\" or \"geq\"", "condition");
  }
  const std::string name = condition.get<std::string>();
  if (name == "eq") {
    spec.condition = Condition::Equal;
  } else if (name == "geq") {
    spec.condition = Condition::GreaterOrEqual;
  } else {
    throw SchemaError("\"" + name + "\" is not a condition; use \"eq\" or "
                      "\"geq\"",
                      "condition");
  }
  return spec;
}

PerceptronSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw Error("cannot open spec file " + path.string());
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_spec_json(buffer.str());
}

}  // namespace qsynapse
