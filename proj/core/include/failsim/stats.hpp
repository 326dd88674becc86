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
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "failsim/trace.hpp"

namespace failsim {

/// Aggregates of one trace. Rates use SEND as the denominator: drop_rate =
/// drops / sends, dup_rate = duplicates / sends (duplicated copies are not
/// counted as sends). kill_rate is kills over switch attempts
/// (schedules + kills). Detection latencies pair each SUSPECT with the
/// KILL of its suspect.
struct TraceStats {
  std::map<std::string, std::size_t> counts;  // per event kind, kinds seen
  std::size_t sends = 0;
  std::size_t drops = 0;
  std::size_t duplicates = 0;
  std::size_t kills = 0;
  std::size_t schedules = 0;
  double drop_rate = 0.0;
  double dup_rate = 0.0;
  double kill_rate = 0.0;
  std::vector<Tick> detection_latencies;
  Tick detection_min = 0;
  Tick detection_max = 0;
  double detection_mean = 0.0;
};

TraceStats compute_stats(const std::vector<TraceEvent>& events);

/// Human-readable report, one figure per line.
void print_stats(const TraceStats& stats, std::ostream& out);

/// Machine-readable single JSON object.
void print_stats_json(const TraceStats& stats, std::ostream& out);

}  // namespace failsim
