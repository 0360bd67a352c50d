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
 * @file verify.hpp
 * @brief Classical ground truth for the quantum search.
 *
 * brute_force enumerates every weight assignment with plain integer
 * arithmetic, no circuits and no register widths involved, so its answer
 * is independent of everything the synthesizer does. cross_check compares
 * a simulated probability table against that ground truth and against the
 * analytic amplification formula.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsynapse/perceptron.hpp"
#include "qsynapse/sim.hpp"

namespace qsynapse {

struct SolutionSet {
  std::vector<WeightAssignment> solutions;  // ascending packed order
  std::uint64_t space_size = 0;

  std::uint64_t solution_count() const { return solutions.size(); }
};

/**
 * @brief Enumerates all weight assignments and keeps those whose classical
 *        forward pass satisfies the condition on every output neuron.
 *
 * @throws ResourceError when the assignment space exceeds 2^24.
 */
SolutionSet brute_force(const PerceptronSpec& spec);

/// Display string of an assignment: last weight's bits leftmost, first
/// weight's rightmost, each field most-significant bit first.
std::string assignment_to_string(const WeightAssignment& assignment,
                                 std::uint32_t weight_width);

struct VerificationReport {
  bool pass = false;
  std::vector<std::string> failures;
  std::uint64_t solution_count = 0;
  std::uint64_t space_size = 0;
  double observed_mass = 0.0;
  double expected_mass = 0.0;
  double solution_level = 0.0;     // shared per-solution probability
  double nonsolution_level = 0.0;  // shared per-non-solution probability
  std::vector<std::string> solution_strings;
};

/**
 * @brief Checks a probability table against brute force and theory.
 *
 * Verifies that the top-M strings by probability are exactly the M
 * brute-force solutions, that all solutions share one probability level
 * and all non-solutions another, and that the total solution mass equals
 * sin^2((2k+1) asin(sqrt(M/N))), all within `tolerance`.
 */
VerificationReport cross_check(const PerceptronSpec& spec,
                               const ProbabilityTable& probabilities,
                               std::uint32_t iterations, double tolerance);

/**
 * @brief Confirms no intermediate value of any assignment overflows its
 *        planned register.
 *
 * Values are computed with unbounded integers and compared against the
 * plan's widths, so an undersized register is reported rather than
 * silently wrapped. Returns one message per overflowing register, empty
 * when the plan is sound.
 */
std::vector<std::string> check_plan_widths(const PerceptronSpec& spec,
                                           const RegisterPlan& plan);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace qsynapse
