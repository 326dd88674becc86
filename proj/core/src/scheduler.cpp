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

#include "failsim/scheduler.hpp"

#include <algorithm>

namespace failsim {

SchedulerState::SchedulerState(Tick quantum) : quantum_(quantum) {
  if (quantum < 1) throw SimError("quantum must be >= 1");
}

void SchedulerState::register_probe(ProbeFn probe) {
  if (started_) {
    throw SimError("probes must be registered before the simulation starts");
  }
  probes_.push_back(std::move(probe));
}

void SchedulerState::remove(Pid pid) {
  std::erase(run_queue_, pid);
}

bool SchedulerState::queued(Pid pid) const {
  return std::ranges::find(run_queue_, pid) != run_queue_.end();
}

Pid SchedulerState::pop_head() {
  const Pid pid = run_queue_.front();
  run_queue_.pop_front();
  return pid;
}

}  // namespace failsim
