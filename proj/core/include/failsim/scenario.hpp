/*
 * This file is part of failsim.
 *
 * Copyright 2026 the failsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "failsim/network.hpp"
#include "failsim/scheduler.hpp"
#include "failsim/types.hpp"

namespace failsim {

class Simulation;

enum class ScenarioKind {
  /// Kill a target-group task at the first switch where its accumulated
  /// time strictly exceeds the timeout.
  DeterministicTimeout,
  /// Kill a target-group task with probability numerator/denominator at
  /// every switch, decided by one randint(denominator) draw.
  ProbabilisticKill,
  /// Drop messages sent from the target group with the given probability.
  Omission,
  /// Deliver a second copy of messages sent from the target group with
  /// the given probability.
  Duplication,
};

/// One failure-injection policy aimed at one control group.
struct Scenario {
  ScenarioKind kind = ScenarioKind::DeterministicTimeout;
  std::string target_group;

  Tick timeout = 0;                 // DeterministicTimeout
  std::uint64_t numerator = 0;      // ProbabilisticKill
  std::uint64_t denominator = 1;    // ProbabilisticKill
  double probability = 0.0;         // Omission / Duplication

  bool is_scheduler_scenario() const {
    return kind == ScenarioKind::DeterministicTimeout ||
           kind == ScenarioKind::ProbabilisticKill;
  }
};

/// Builds the context-switch hook for a kill scenario. Gate first, draw
/// second: the random stream is only consumed when the task's group
/// matches the target. Throws SimError for network scenario kinds.
ProbeFn make_scheduler_probe(const Scenario& s);

/// Builds the send-time hook for an omission/duplication scenario. The
/// probability p is applied as `randint(1000000) < llround(p * 1e6)`.
/// Throws SimError for scheduler scenario kinds.
MessageHookFn make_network_probe(const Scenario& s);

/// Parses a scenario file: UTF-8 text, one scenario per line, `#` comments
/// and blank lines ignored. Grammar:
///
///   kill-after <group-path> <ticks>
///   kill-prob  <group-path> <num>/<den>
///   drop       <group-path> <prob>
///   dup        <group-path> <prob>
///
/// File order is probe registration order. Throws SimError with the
/// offending 1-based line number on any syntax or range error.
std::vector<Scenario> load_scenarios(std::string_view text);

/// load_scenarios over a file's contents.
std::vector<Scenario> load_scenario_file(const std::string& path);

/// Registers every scenario's probe on the simulation, in order.
void install_scenarios(Simulation& sim, const std::vector<Scenario>& scenarios);

}  // namespace failsim
