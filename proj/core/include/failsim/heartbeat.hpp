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

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "failsim/simulation.hpp"
#include "failsim/trace.hpp"
#include "failsim/types.hpp"

namespace failsim {

struct HeartbeatParams {
  int n = 2;
  std::string group = "/xp";
  Tick heartbeat_period = 10;
  Tick suspicion_timeout = 35;  // must exceed heartbeat_period
};

/// Crash suspicion of one observer about one killed subject. suspect_time
/// is -1 (and detected false) when no SUSPECT followed the KILL.
struct DetectionRecord {
  Pid observer = 0;
  Pid subject = 0;
  Tick kill_time = 0;
  Tick suspect_time = -1;
  Tick latency = -1;
  bool detected = false;
};

/// A miniature distributed run-time: n daemons in one control group, fully
/// connected, each exchanging periodic heartbeats and suspecting peers it
/// has not heard from within the suspicion timeout. A peer whose
/// connection turns out cleanly closed is suspected on the spot - that
/// asymmetry against fail-stop kills is what the harness measures.
class HeartbeatRuntime {
 public:
  /// Spawns the daemons into the group, opens one connection per unordered
  /// pair and installs the step behaviors. Throws SimError for n < 2 or
  /// suspicion_timeout <= heartbeat_period.
  HeartbeatRuntime(Simulation& sim, HeartbeatParams params);

  const std::vector<Pid>& daemons() const { return pids_; }

  /// Timeout scan for one daemon: peers silent for more than the suspicion
  /// timeout become suspected. Returns the newly suspected pids.
  std::vector<Pid> detector_step(Pid daemon, Tick now);

  const std::set<Pid>& suspected_by(Pid daemon) const;
  Tick last_heard(Pid daemon, Pid peer) const;

 private:
  struct DaemonState {
    std::vector<Pid> peers;
    std::map<Pid, ConnId> conns;
    std::map<Pid, Tick> last_heard;
    std::set<Pid> suspected;
    Tick last_sent = 0;
    bool sent_once = false;
  };

  void step(Simulation& sim, Pid self, Tick now);
  void suspect(Simulation& sim, Pid self, Pid peer, Tick now, const char* via);

  HeartbeatParams params_;
  std::vector<Pid> pids_;
  std::map<Pid, DaemonState> daemons_;
};

/// Pairs KILL events with the SUSPECT events that followed them: one
/// record per (observer, killed subject), observers taken from the given
/// daemon list. Subjects nobody suspected come back with detected false.
std::vector<DetectionRecord> measure_latencies(const TraceLog& trace,
                                               std::span<const Pid> observers);

/// Same, reading a parsed NDJSON trace: observers are inferred as the
/// spawned tasks that were neither killed before the subject nor the
/// subject itself.
std::vector<DetectionRecord> measure_latencies(const std::vector<TraceEvent>& events,
                                               std::span<const Pid> observers);

}  // namespace failsim
