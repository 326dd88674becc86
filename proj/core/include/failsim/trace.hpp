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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "failsim/types.hpp"

namespace failsim {

enum class EventKind {
  Spawn,
  Schedule,
  Idle,
  Kill,
  Open,
  Send,
  Deliver,
  Drop,
  Duplicate,
  Blackhole,
  Close,
  Suspect,
  Warn,
};

std::string_view kind_name(EventKind kind);

/// Parses an event kind name. Throws SimError for unknown names.
EventKind kind_from_name(std::string_view name);

/// One timestamped trace record. The struct is flat; which fields are
/// meaningful depends on `kind` (see the NDJSON key table in to_ndjson_line).
struct TraceEvent {
  Tick t = 0;
  EventKind kind = EventKind::Idle;

  Pid pid = 0;       // SPAWN, SCHEDULE, KILL, WARN
  Pid ppid = 0;      // SPAWN
  Pid a = 0;         // OPEN
  Pid b = 0;         // OPEN
  Pid from = 0;      // SEND, DELIVER, DROP, DUPLICATE, BLACKHOLE
  Pid to = 0;        // SEND, DELIVER, DROP, DUPLICATE, BLACKHOLE
  Pid observer = 0;  // SUSPECT
  Pid suspect = 0;   // SUSPECT
  Pid peer = 0;      // CLOSE
  ConnId conn = 0;   // OPEN, SEND, DELIVER, DROP, DUPLICATE, BLACKHOLE, CLOSE
  MsgId msg = 0;     // SEND, DELIVER, DROP, DUPLICATE, BLACKHOLE
  MsgId orig = 0;    // DUPLICATE: id of the copied message
  Tick time = 0;     // SCHEDULE, KILL: accumulated stime + utime
  std::int64_t size = 0;  // SEND: payload bytes

  std::string group;  // SPAWN, KILL
  std::string name;   // SPAWN
  std::string via;    // SUSPECT: "timeout" or "closed"
  std::string text;   // WARN
};

/// Serializes one event as a single-line JSON object. Key order is fixed
/// per kind ("t" and "kind" always first), so byte equality of two traces
/// is the determinism contract.
std::string to_ndjson_line(const TraceEvent& ev);

/// Parses one NDJSON line back into an event. Throws SimError on malformed
/// JSON, a missing "t"/"kind", or an unknown kind.
TraceEvent from_ndjson_line(std::string_view line);

/// Append-only event log of a simulation run.
class TraceLog {
 public:
  void append(TraceEvent ev) { events_.push_back(std::move(ev)); }

  const std::vector<TraceEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  std::size_t count(EventKind kind) const;

  /// Writes the whole log as NDJSON (LF line endings, one event per line).
  void write_ndjson(std::ostream& out) const;

 private:
  std::vector<TraceEvent> events_;
};

/// Reads a whole NDJSON trace. Throws SimError carrying the 1-based line
/// number of the first malformed line.
std::vector<TraceEvent> read_ndjson(std::istream& in);

}  // namespace failsim
