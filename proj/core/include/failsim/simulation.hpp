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
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "failsim/network.hpp"
#include "failsim/process.hpp"
#include "failsim/random.hpp"
#include "failsim/scheduler.hpp"
#include "failsim/trace.hpp"
#include "failsim/types.hpp"

namespace failsim {

struct SimConfig {
  std::uint64_t seed = 0;
  Tick quantum = 1;
  Tick net_latency = 1;
};

/// FailStop frees the task and nothing else: connections stay open and
/// peers learn nothing. CleanClose first closes the task's connections the
/// way an operating system would, then frees it.
enum class KillMode { FailStop, CleanClose };

class Simulation;

/// Per-task step function, invoked inside the task's quantum each time it
/// is scheduled. It may use the network but must not reenter the scheduler.
using BehaviorFn = std::function<void(Simulation&, Pid self, Tick now)>;

/// Single-threaded discrete-event simulation tying together the process
/// registry, the round-robin scheduler with its context-switch probes, and
/// the simulated transport. Everything observable lands in the trace; two
/// runs with the same configuration and seed produce byte-identical traces.
class Simulation {
 public:
  explicit Simulation(SimConfig cfg = {});

  // --- process operations ---------------------------------------------

  /// Forks a child inheriting the parent's group and enqueues it.
  Pid spawn(Pid parent, std::string name);

  /// Like spawn, but the child starts in the given group (created on
  /// first use). The group-targeting analog of `cgexec -g *:xp cmd`.
  Pid exec_in_group(std::string_view group, Pid parent, std::string name);

  /// Group path of a task; the string sentinel "NULL" for unknown pids.
  std::string find_group(Pid pid) const { return procs_.find_group(pid); }

  /// The kernel-level kill: marks the task dead, removes it from the run
  /// queue, traces KILL - and deliberately leaves every connection of the
  /// task in its current state. Killing a dead task is a no-op that
  /// traces a WARN instead of failing.
  void free_task(Pid pid);

  // --- scheduler operations -------------------------------------------

  /// Probes fire at every context-switch entry, in registration order,
  /// with the pid about to run. Must be called before the first switch.
  void register_probe(ProbeFn probe);

  /// One switch attempt on the queue head. If any probe says Skip, the
  /// task is freed and no time passes. Otherwise the task runs for one
  /// quantum: its behavior (if any) executes, time is charged, SCHEDULE
  /// is traced, the clock advances and the task is re-enqueued. An empty
  /// queue yields a one-tick IDLE.
  void context_switch();

  /// stime + utime of a task. Throws for unknown pids.
  Tick task_time(Pid pid) const { return procs_.task_time(pid); }

  /// Runs switch cycles (scripted kills and due deliveries happen between
  /// switches) until the clock reaches `until`, or the queue is empty with
  /// nothing in flight and no kill pending.
  void run(Tick until);

  Tick clock() const { return sched_.clock(); }
  Tick quantum() const { return sched_.quantum(); }

  // --- network operations ---------------------------------------------

  ConnId open_connection(Pid a, Pid b);
  SendStatus send(ConnId conn, Pid sender, std::string payload);
  std::vector<Message> deliver_due();
  void close_clean(Pid pid);
  std::vector<Message> take_inbox(Pid pid) { return net_.take_inbox(pid); }

  /// Send-time hook (omission / duplication live here). Fixed before the
  /// first switch, like scheduler probes.
  void register_message_hook(MessageHookFn hook);

  // --- plumbing ---------------------------------------------------------

  void set_behavior(Pid pid, BehaviorFn behavior);

  /// Arms a kill at the given tick, fired between switches. Kills armed
  /// for the same tick fire in arming order.
  void schedule_kill(Pid pid, Tick at, KillMode mode);

  const TraceLog& trace() const { return trace_; }
  const ProcessRegistry& procs() const { return procs_; }
  const Network& network() const { return net_; }
  const SchedulerState& scheduler() const { return sched_; }
  RandomStream& rng() { return rng_; }

 private:
  struct PendingKill {
    Pid pid;
    Tick at;
    KillMode mode;
    std::size_t order;
  };

  void fire_due_kills();
  bool kills_pending() const { return !pending_kills_.empty(); }

  TraceLog trace_;
  RandomStream rng_;
  ProcessRegistry procs_;
  SchedulerState sched_;
  Network net_;
  std::map<Pid, BehaviorFn> behaviors_;
  std::vector<PendingKill> pending_kills_;
  std::size_t kill_count_ = 0;
  Pid running_ = 0;       // pid whose quantum is executing, 0 outside one
  int net_ops_ = 0;       // network calls issued by the running task
};

}  // namespace failsim
