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

/**
 * @file spec_file.hpp
 * @brief JSON spec files describing a perceptron to train.
 *
 * Schema:
 * {
 *   "input_to_hidden":  [{"from": 1, "to": 1}, ...],
 *   "hidden_to_output": [{"from": 1, "to": 1}, ...],
 *   "inputs":           [3, 2],
 *   "input_width":      2,
 *   "weight_width":     2,
 *   "threshold":        6,
 *   "threshold_width":  6,            // optional
 *   "condition":        "eq" | "geq"
 * }
 *
 * Unknown keys are rejected; every diagnostic names the offending key
 * path.
 */

#pragma once

#include <filesystem>
#include <string>

#include "qsynapse/perceptron.hpp"

namespace qsynapse {

/// @throws SchemaError naming the key path of the first violation.
PerceptronSpec parse_spec_json(const std::string& text);

/// @throws Error when the file cannot be read; SchemaError as above.
PerceptronSpec load_spec_file(const std::filesystem::path& path);

}  // namespace qsynapse
