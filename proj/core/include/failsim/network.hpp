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
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "failsim/process.hpp"
#include "failsim/random.hpp"
#include "failsim/trace.hpp"
#include "failsim/types.hpp"

namespace failsim {

/// Simulated connection. The defining rule: killing an endpoint never
/// changes the state. Only close_clean moves ESTABLISHED -> CLOSED.
struct Connection {
  ConnId id = 0;
  Pid endpoint_a = 0;
  Pid endpoint_b = 0;
  bool closed = false;
};

struct Message {
  MsgId id = 0;
  ConnId conn = 0;
  Pid sender = 0;
  Pid receiver = 0;
  std::string payload;
  Tick send_time = 0;
  Tick deliver_time = 0;
};

enum class SendStatus {
  Sent,
  /// The connection was closed by close_clean. This error is what makes a
  /// clean close instantly detectable; a fail-stop kill never produces it.
  ConnectionClosed,
};

/// Outcome of one message hook. Drop is final; Duplicate enqueues an extra
/// copy and lets later hooks keep running against the original.
enum class MessageAction { Pass, Drop, Duplicate };

struct MessageHookContext {
  const ProcessRegistry& procs;
  RandomStream& rng;
};

/// Hook fired at send time, before the message is put in flight. Hooks run
/// in registration order; duplicated copies do not re-enter the hooks.
using MessageHookFn = std::function<MessageAction(MessageHookContext&, const Message&)>;

/// Connection-oriented transport with constant latency. Dead receivers
/// blackhole their messages silently: the sender gets no error, ever.
class Network {
 public:
  Network(const ProcessRegistry& procs, RandomStream& rng, TraceLog& trace,
          Tick latency);

  /// Both endpoints must be runnable. Traces OPEN.
  ConnId open(Pid a, Pid b, Tick now);

  /// Runs the message hooks, then schedules the surviving copies for
  /// delivery at now + latency. Traces SEND, then DROP or DUPLICATE as the
  /// hooks decide. Returns ConnectionClosed for cleanly closed connections;
  /// throws SimError for unknown connections or a dead/foreign sender.
  SendStatus send(ConnId conn, Pid sender, std::string payload, Tick now);

  /// Delivers every message with deliver_time <= now, in (deliver_time,
  /// message id) order: DELIVER into a live receiver's inbox, BLACKHOLE
  /// for a dead one. Returns the messages that were actually delivered.
  std::vector<Message> deliver_due(Tick now);

  /// Closes all of a task's established connections, one CLOSE event per
  /// connection in connection-id order. The baseline a traditional killer
  /// would produce.
  void close_clean(Pid pid, Tick now);

  void add_hook(MessageHookFn hook);
  void freeze_hooks() { hooks_frozen_ = true; }

  /// Moves the accumulated inbox of a task to the caller.
  std::vector<Message> take_inbox(Pid pid);

  std::size_t in_flight() const { return in_flight_.size(); }
  const Connection& connection(ConnId id) const;
  const std::map<ConnId, Connection>& connections() const { return connections_; }

 private:
  const ProcessRegistry& procs_;
  RandomStream& rng_;
  TraceLog& trace_;
  Tick latency_;

  std::map<ConnId, Connection> connections_;
  // Keyed by (deliver_time, id) so extraction order is total and stable.
  std::map<std::pair<Tick, MsgId>, Message> in_flight_;
  std::unordered_map<Pid, std::vector<Message>> inboxes_;
  std::vector<MessageHookFn> hooks_;
  bool hooks_frozen_ = false;
  ConnId next_conn_ = 1;
  MsgId next_msg_ = 1;
};

}  // namespace failsim
