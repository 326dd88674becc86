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

#include "failsim/process.hpp"

namespace failsim {

ProcessRegistry::ProcessRegistry() {
  Task root;
  root.pid = kInitPid;
  root.ppid = 0;
  root.name = "initd";
  root.group = kRootGroup;
  tasks_.emplace(kInitPid, std::move(root));
  auto& g = groups_[std::string(kRootGroup)];
  g.path = kRootGroup;
  g.members.insert(kInitPid);
}

Pid ProcessRegistry::insert_task(Pid parent, std::string name, std::string group) {
  const Pid pid = next_pid_++;
  Task task;
  task.pid = pid;
  task.ppid = parent;
  task.name = std::move(name);
  task.group = group;
  tasks_.emplace(pid, std::move(task));
  auto& g = groups_[group];
  if (g.path.empty()) g.path = group;
  g.members.insert(pid);
  return pid;
}

Pid ProcessRegistry::create_task(Pid parent, std::string name) {
  const auto it = tasks_.find(parent);
  if (it == tasks_.end() || it->second.state == TaskState::Dead) {
    throw SimError("no such parent: " + std::to_string(parent));
  }
  return insert_task(parent, std::move(name), it->second.group);
}

Pid ProcessRegistry::create_task_in_group(std::string_view group, Pid parent,
                                          std::string name) {
  if (!is_valid_group_path(group)) {
    throw SimError("malformed group path: " + std::string(group));
  }
  const auto it = tasks_.find(parent);
  if (it == tasks_.end() || it->second.state == TaskState::Dead) {
    throw SimError("no such parent: " + std::to_string(parent));
  }
  return insert_task(parent, std::move(name), std::string(group));
}

std::string ProcessRegistry::find_group(Pid pid) const {
  const auto it = tasks_.find(pid);
  if (it == tasks_.end()) return std::string(kNullGroup);
  return it->second.group;
}

bool ProcessRegistry::mark_dead(Pid pid) {
  const auto it = tasks_.find(pid);
  if (it == tasks_.end()) {
    throw SimError("no such task: " + std::to_string(pid));
  }
  if (it->second.state == TaskState::Dead) return false;
  it->second.state = TaskState::Dead;
  return true;
}

void ProcessRegistry::charge(Pid pid, Tick utime, Tick stime) {
  auto it = tasks_.find(pid);
  if (it == tasks_.end()) throw SimError("no such task: " + std::to_string(pid));
  if (it->second.state == TaskState::Dead) {
    throw SimError("cannot charge time to dead task " + std::to_string(pid));
  }
  it->second.utime += utime;
  it->second.stime += stime;
}

Tick ProcessRegistry::task_time(Pid pid) const {
  const auto it = tasks_.find(pid);
  if (it == tasks_.end()) throw SimError("no such task: " + std::to_string(pid));
  return it->second.stime + it->second.utime;
}

bool ProcessRegistry::is_runnable(Pid pid) const {
  const auto it = tasks_.find(pid);
  return it != tasks_.end() && it->second.state == TaskState::Runnable;
}

const Task& ProcessRegistry::task(Pid pid) const {
  const auto it = tasks_.find(pid);
  if (it == tasks_.end()) throw SimError("no such task: " + std::to_string(pid));
  return it->second;
}

const Group* ProcessRegistry::group(std::string_view path) const {
  const auto it = groups_.find(path);
  return it == groups_.end() ? nullptr : &it->second;
}

}  // namespace failsim
