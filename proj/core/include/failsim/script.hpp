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

#include <string>
#include <string_view>
#include <vector>

#include "failsim/simulation.hpp"
#include "failsim/types.hpp"

namespace failsim {

/// Declarative workload: named tasks, connections, periodic senders and
/// scripted kills. Line grammar (# comments, blank lines ignored):
///
///   task <name> <group-path>
///   conn <a> <b>
///   send-every <name> <peer> <period-ticks>
///   kill-at <tick> <name> [clean]
///
/// send-every makes <name> send one message to <peer> over their
/// connection whenever at least <period-ticks> passed since its previous
/// send (the first scheduled step sends immediately). kill-at arms a
/// fail-stop kill, or a clean-close one with the `clean` suffix.
struct ScriptWorkload {
  struct TaskDecl {
    std::string name;
    std::string group;
  };
  struct ConnDecl {
    std::string a;
    std::string b;
  };
  struct SenderDecl {
    std::string name;
    std::string peer;
    Tick period = 1;
  };
  struct KillDecl {
    Tick at = 0;
    std::string name;
    bool clean = false;
  };

  std::vector<TaskDecl> tasks;
  std::vector<ConnDecl> conns;
  std::vector<SenderDecl> senders;
  std::vector<KillDecl> kills;
};

/// Throws SimError with the 1-based line number on syntax errors, unknown
/// verbs, duplicate task names, or references to undeclared tasks.
ScriptWorkload parse_script(std::string_view text);

ScriptWorkload load_script_file(const std::string& path);

/// Spawns the tasks (in declaration order), opens the connections, installs
/// the sender behaviors and arms the kills. Returns the pid of each
/// declared task, in declaration order.
std::vector<Pid> apply_script(Simulation& sim, const ScriptWorkload& script);

}  // namespace failsim
