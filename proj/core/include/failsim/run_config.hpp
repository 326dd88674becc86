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
#include <iosfwd>
#include <optional>
#include <string>

#include "failsim/simulation.hpp"
#include "failsim/types.hpp"

namespace failsim {

enum class WorkloadKind { Harness, Script };

/// Everything a `run` invocation needs. The command layer is a library so
/// tests can drive it without spawning the binary.
struct RunConfig {
  std::uint64_t seed = 0;
  Tick quantum = 1;
  Tick until = 0;
  Tick net_latency = 1;
  std::string scenario_path;  // empty: no failure scenarios

  WorkloadKind workload = WorkloadKind::Harness;
  int harness_n = 0;
  std::string harness_group = "/xp";
  Tick heartbeat_period = 10;
  Tick suspicion_timeout = 35;
  // Optional scripted kill of one harness daemon, for baseline comparisons.
  std::optional<Tick> kill_at;
  int kill_daemon = 0;
  KillMode kill_mode = KillMode::FailStop;

  std::string script_path;  // Script workload

  std::string trace_path;
};

/// Parses "harness:<n>" or "script:<path>" into the workload fields.
/// Throws SimError on anything else.
void parse_workload(std::string_view text, RunConfig& config);

/// Builds the simulation for a config: scenarios installed first (file
/// order = probe order), then the workload. Returns the configured
/// simulation, ready for run(config.until).
/// Exposed separately so tests can inspect simulation state after a run.
struct ConfiguredRun {
  Simulation sim;
  std::vector<Pid> workload_pids;
};
ConfiguredRun build_run(const RunConfig& config);

/// Runs the config to completion, writes the NDJSON trace to
/// config.trace_path and a summary to `out`. Returns a process exit code:
/// 0 on success, 1 on bad config or I/O failure (diagnostic on `err`).
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exit 0 iff the two trace files are byte-identical. Prints the first
/// differing line otherwise. Missing files exit nonzero.
int cmd_verify(const std::string& path_a, const std::string& path_b,
               std::ostream& out, std::ostream& err);

/// Prints counts per event kind, empirical kill/drop/duplicate rates and
/// detection-latency min/mean/max; JSON when `json` is set. Malformed
/// trace lines exit nonzero with the line number.
int cmd_stats(const std::string& trace_path, bool json, std::ostream& out,
              std::ostream& err);

}  // namespace failsim
