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
#include <set>
#include <string>
#include <string_view>

#include "failsim/types.hpp"

namespace failsim {

enum class TaskState { Runnable, Dead };

/// Simulated process. pids are unique for the lifetime of a simulation and
/// never reused; every task except pid 1 points at a parent that existed
/// when it was spawned.
struct Task {
  Pid pid = 0;
  Pid ppid = 0;
  std::string name;
  std::string group;  // exactly one group per task
  Tick utime = 0;
  Tick stime = 0;
  TaskState state = TaskState::Runnable;
};

/// Named control group. Membership is independent of the parent/child
/// tree: a child lands in its parent's group unless created through
/// create_task_in_group with a different path.
struct Group {
  std::string path;
  std::set<Pid> members;
};

/// Registry of tasks and control groups. Owned by the simulation loop;
/// all mutation happens between events, single-threaded.
class ProcessRegistry {
 public:
  /// Creates the root task: pid 1, name "initd", group "/". The root is
  /// runnable (so it can act as a spawn parent) but is never enqueued in
  /// the run queue.
  ProcessRegistry();

  /// New task inheriting the parent's group. Throws SimError("no such
  /// parent: ...") if the parent is unknown or dead.
  Pid create_task(Pid parent, std::string name);

  /// New task placed in the given group, which is created on first use.
  /// Throws SimError for a malformed path or a bad parent.
  Pid create_task_in_group(std::string_view group, Pid parent, std::string name);

  /// Group path of a task; "NULL" for unknown pids, never an error.
  std::string find_group(Pid pid) const;

  /// Marks the task dead and freezes its time accounting. Unknown pid
  /// throws; killing an already dead task returns false (callers trace a
  /// duplicate-kill warning instead of failing).
  bool mark_dead(Pid pid);

  /// Charges one quantum of runtime. The task must be runnable.
  void charge(Pid pid, Tick utime, Tick stime);

  /// stime + utime. Throws SimError for unknown pids.
  Tick task_time(Pid pid) const;

  bool exists(Pid pid) const { return tasks_.contains(pid); }
  bool is_runnable(Pid pid) const;

  /// Throws SimError for unknown pids.
  const Task& task(Pid pid) const;

  const Group* group(std::string_view path) const;
  const std::map<Pid, Task>& tasks() const { return tasks_; }
  const std::map<std::string, Group, std::less<>>& groups() const { return groups_; }

 private:
  Pid insert_task(Pid parent, std::string name, std::string group);

  std::map<Pid, Task> tasks_;
  std::map<std::string, Group, std::less<>> groups_;
  Pid next_pid_ = kInitPid + 1;
};

}  // namespace failsim
