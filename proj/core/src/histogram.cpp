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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsynapse/errors.hpp"
#include "qsynapse/sim.hpp"

namespace qsynapse {

Histogram sample_shots(const ProbabilityTable& probabilities,
                       std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw ValidationError("shot count must be positive");
  }
  double total = 0.0;
  for (const auto& [bits, p] : probabilities) {
    if (p < 0.0) {
      throw ValidationError("negative probability for " + bits);
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("probabilities sum to " + std::to_string(total) +
                          ", expected 1");
  }

  std::vector<std::string> keys;
  std::vector<double> cumulative;
  keys.reserve(probabilities.size());
  cumulative.reserve(probabilities.size());
  double running = 0.0;
  for (const auto& [bits, p] : probabilities) {
    running += p;
    keys.push_back(bits);
    cumulative.push_back(running);
  }
  cumulative.back() = 1.0;

  // Raw engine output mapped through the 53-bit mantissa shift; both the
  // engine sequence and this mapping are pinned by the standard, so the
  // histogram for a fixed (table, shots, seed) is platform-independent.
  std::mt19937_64 engine(seed);
  Histogram histogram;
  histogram.shots = shots;
  histogram.seed = seed;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t index =
        it == cumulative.end()
            ? cumulative.size() - 1
            : static_cast<std::size_t>(it - cumulative.begin());
    ++histogram.counts[keys[index]];
  }
  return histogram;
}

std::string histogram_to_csv(const Histogram& histogram) {
  std::string out = "bitstring,count\n";
  for (const auto& [bits, count] : histogram.counts) {
    out += bits;
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::string histogram_to_json(const Histogram& histogram) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [bits, count] : histogram.counts) {
    counts[bits] = count;
  }
  nlohmann::json doc = {
      {"counts", counts},
      {"rng", Histogram::kRng},
      {"seed", histogram.seed},
      {"shots", histogram.shots},
  };
  return doc.dump(2) + "\n";
}

}  // namespace qsynapse
