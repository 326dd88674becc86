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

#include <deque>
#include <functional>
#include <vector>

#include "failsim/process.hpp"
#include "failsim/random.hpp"
#include "failsim/types.hpp"

namespace failsim {

/// Verdict of a context-switch probe for the task about to run. A single
/// SKIP is final for that switch: remaining probes are not consulted and
/// the task is freed instead of dispatched.
enum class ProbeDecision { Run, Skip };

/// What a probe gets to look at: the registry (group lookup, accumulated
/// times), the current clock, and the shared random stream.
struct ProbeContext {
  const ProcessRegistry& procs;
  Tick clock;
  RandomStream& rng;
};

/// Hook fired at the entry of every context switch with the pid about to
/// be scheduled. Probes run in registration order.
using ProbeFn = std::function<ProbeDecision(ProbeContext&, Pid next)>;

/// Round-robin scheduler state: FIFO run queue, virtual clock, quantum,
/// and the probe registry. The switch cycle itself lives in Simulation,
/// which owns the surrounding services.
class SchedulerState {
 public:
  explicit SchedulerState(Tick quantum);

  /// Probes are fixed before the first switch; registering after the
  /// simulation started throws SimError.
  void register_probe(ProbeFn probe);

  void mark_started() { started_ = true; }
  bool started() const { return started_; }

  void enqueue(Pid pid) { run_queue_.push_back(pid); }
  void remove(Pid pid);
  bool queued(Pid pid) const;
  bool empty() const { return run_queue_.empty(); }
  Pid head() const { return run_queue_.front(); }
  Pid pop_head();

  void advance(Tick ticks) { clock_ += ticks; }
  Tick clock() const { return clock_; }
  Tick quantum() const { return quantum_; }

  const std::vector<ProbeFn>& probes() const { return probes_; }
  const std::deque<Pid>& run_queue() const { return run_queue_; }

 private:
  std::deque<Pid> run_queue_;
  Tick clock_ = 0;
  Tick quantum_;
  std::vector<ProbeFn> probes_;
  bool started_ = false;
};

}  // namespace failsim
