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

#include "failsim/simulation.hpp"

#include <algorithm>

namespace failsim {

Simulation::Simulation(SimConfig cfg)
    : rng_(cfg.seed),
      sched_(cfg.quantum),
      net_(procs_, rng_, trace_, cfg.net_latency) {}

Pid Simulation::spawn(Pid parent, std::string name) {
  const Pid pid = procs_.create_task(parent, name);
  sched_.enqueue(pid);

  TraceEvent ev;
  ev.t = sched_.clock();
  ev.kind = EventKind::Spawn;
  ev.pid = pid;
  ev.ppid = parent;
  ev.group = procs_.find_group(pid);
  ev.name = std::move(name);
  trace_.append(std::move(ev));
  return pid;
}

Pid Simulation::exec_in_group(std::string_view group, Pid parent, std::string name) {
  const Pid pid = procs_.create_task_in_group(group, parent, name);
  sched_.enqueue(pid);

  TraceEvent ev;
  ev.t = sched_.clock();
  ev.kind = EventKind::Spawn;
  ev.pid = pid;
  ev.ppid = parent;
  ev.group = procs_.find_group(pid);
  ev.name = std::move(name);
  trace_.append(std::move(ev));
  return pid;
}

void Simulation::free_task(Pid pid) {
  if (!procs_.mark_dead(pid)) {
    TraceEvent warn;
    warn.t = sched_.clock();
    warn.kind = EventKind::Warn;
    warn.pid = pid;
    warn.text = "duplicate kill";
    trace_.append(std::move(warn));
    return;
  }
  sched_.remove(pid);

  // No connection teardown here: the whole point of the kernel-level kill
  // is that the task's sockets stay exactly as they were.
  TraceEvent ev;
  ev.t = sched_.clock();
  ev.kind = EventKind::Kill;
  ev.pid = pid;
  ev.group = procs_.find_group(pid);
  ev.time = procs_.task_time(pid);
  trace_.append(std::move(ev));
}

void Simulation::register_probe(ProbeFn probe) {
  sched_.register_probe(std::move(probe));
}

void Simulation::register_message_hook(MessageHookFn hook) {
  net_.add_hook(std::move(hook));
}

namespace {
// Marks simulation start: probe and hook registries freeze.
void mark_started(SchedulerState& sched, Network& net) {
  sched.mark_started();
  net.freeze_hooks();
}
}  // namespace

void Simulation::context_switch() {
  mark_started(sched_, net_);
  if (sched_.empty()) {
    TraceEvent idle;
    idle.t = sched_.clock();
    idle.kind = EventKind::Idle;
    trace_.append(std::move(idle));
    sched_.advance(1);
    return;
  }

  const Pid next = sched_.pop_head();

  ProbeContext ctx{procs_, sched_.clock(), rng_};
  for (const auto& probe : sched_.probes()) {
    if (probe(ctx, next) == ProbeDecision::Skip) {
      // Freed at the moment it was about to be scheduled: no time is
      // charged and the clock does not move for this switch.
      free_task(next);
      return;
    }
  }

  running_ = next;
  net_ops_ = 0;
  if (const auto it = behaviors_.find(next); it != behaviors_.end()) {
    it->second(*this, next, sched_.clock());
  }
  running_ = 0;

  const Tick quantum = sched_.quantum();
  if (procs_.is_runnable(next)) {
    const Tick stime = net_ops_ > 0 ? 1 : 0;
    procs_.charge(next, quantum - stime, stime);

    TraceEvent ev;
    ev.t = sched_.clock();
    ev.kind = EventKind::Schedule;
    ev.pid = next;
    ev.time = procs_.task_time(next);
    trace_.append(std::move(ev));

    sched_.enqueue(next);
  }
  sched_.advance(quantum);
}

void Simulation::run(Tick until) {
  if (until < sched_.clock()) {
    throw SimError("run: until precedes the current clock");
  }
  mark_started(sched_, net_);
  while (sched_.clock() < until) {
    fire_due_kills();
    net_.deliver_due(sched_.clock());
    if (sched_.empty()) {
      if (net_.in_flight() == 0 && !kills_pending()) break;
      TraceEvent idle;
      idle.t = sched_.clock();
      idle.kind = EventKind::Idle;
      trace_.append(std::move(idle));
      sched_.advance(1);
      continue;
    }
    context_switch();
  }
}

ConnId Simulation::open_connection(Pid a, Pid b) {
  return net_.open(a, b, sched_.clock());
}

SendStatus Simulation::send(ConnId conn, Pid sender, std::string payload) {
  if (sender == running_) ++net_ops_;
  return net_.send(conn, sender, std::move(payload), sched_.clock());
}

std::vector<Message> Simulation::deliver_due() {
  return net_.deliver_due(sched_.clock());
}

void Simulation::close_clean(Pid pid) {
  net_.close_clean(pid, sched_.clock());
}

void Simulation::set_behavior(Pid pid, BehaviorFn behavior) {
  if (!procs_.exists(pid)) {
    throw SimError("set_behavior: no such task: " + std::to_string(pid));
  }
  behaviors_[pid] = std::move(behavior);
}

void Simulation::schedule_kill(Pid pid, Tick at, KillMode mode) {
  if (!procs_.exists(pid)) {
    throw SimError("schedule_kill: no such task: " + std::to_string(pid));
  }
  if (at < sched_.clock()) {
    throw SimError("schedule_kill: tick precedes the current clock");
  }
  PendingKill kill{pid, at, mode, kill_count_++};
  const auto pos = std::upper_bound(
      pending_kills_.begin(), pending_kills_.end(), kill,
      [](const PendingKill& l, const PendingKill& r) { return l.at < r.at; });
  pending_kills_.insert(pos, kill);
}

void Simulation::fire_due_kills() {
  while (!pending_kills_.empty() && pending_kills_.front().at <= sched_.clock()) {
    const PendingKill kill = pending_kills_.front();
    pending_kills_.erase(pending_kills_.begin());
    if (kill.mode == KillMode::CleanClose) {
      net_.close_clean(kill.pid, sched_.clock());
    }
    free_task(kill.pid);
  }
}

}  // namespace failsim
