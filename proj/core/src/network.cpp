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

#include "failsim/network.hpp"

namespace failsim {

Network::Network(const ProcessRegistry& procs, RandomStream& rng,
                 TraceLog& trace, Tick latency)
    : procs_(procs), rng_(rng), trace_(trace), latency_(latency) {
  if (latency < 1) throw SimError("network latency must be >= 1 tick");
}

ConnId Network::open(Pid a, Pid b, Tick now) {
  if (!procs_.is_runnable(a) || !procs_.is_runnable(b)) {
    throw SimError("open_connection: both endpoints must be runnable");
  }
  const ConnId id = next_conn_++;
  connections_.emplace(id, Connection{id, a, b, false});

  TraceEvent ev;
  ev.t = now;
  ev.kind = EventKind::Open;
  ev.conn = id;
  ev.a = a;
  ev.b = b;
  trace_.append(std::move(ev));
  return id;
}

SendStatus Network::send(ConnId conn, Pid sender, std::string payload, Tick now) {
  const auto it = connections_.find(conn);
  if (it == connections_.end()) {
    throw SimError("send: no such connection: " + std::to_string(conn));
  }
  const Connection& c = it->second;
  if (sender != c.endpoint_a && sender != c.endpoint_b) {
    throw SimError("send: pid " + std::to_string(sender) +
                   " is not an endpoint of connection " + std::to_string(conn));
  }
  if (!procs_.is_runnable(sender)) {
    throw SimError("send: sender " + std::to_string(sender) + " is not runnable");
  }
  if (c.closed) return SendStatus::ConnectionClosed;

  Message m;
  m.id = next_msg_++;
  m.conn = conn;
  m.sender = sender;
  m.receiver = sender == c.endpoint_a ? c.endpoint_b : c.endpoint_a;
  m.payload = std::move(payload);
  m.send_time = now;
  m.deliver_time = now + latency_;

  TraceEvent sent;
  sent.t = now;
  sent.kind = EventKind::Send;
  sent.msg = m.id;
  sent.conn = conn;
  sent.from = m.sender;
  sent.to = m.receiver;
  sent.size = static_cast<std::int64_t>(m.payload.size());
  trace_.append(std::move(sent));

  // Hooks in registration order. Drop ends processing; a duplicate copy is
  // materialized immediately and is not itself re-probed.
  MessageHookContext ctx{procs_, rng_};
  bool dropped = false;
  for (const auto& hook : hooks_) {
    const MessageAction action = hook(ctx, m);
    if (action == MessageAction::Drop) {
      TraceEvent drop;
      drop.t = now;
      drop.kind = EventKind::Drop;
      drop.msg = m.id;
      drop.conn = conn;
      drop.from = m.sender;
      drop.to = m.receiver;
      trace_.append(std::move(drop));
      dropped = true;
      break;
    }
    if (action == MessageAction::Duplicate) {
      Message copy = m;
      copy.id = next_msg_++;
      TraceEvent dup;
      dup.t = now;
      dup.kind = EventKind::Duplicate;
      dup.msg = copy.id;
      dup.orig = m.id;
      dup.conn = conn;
      dup.from = m.sender;
      dup.to = m.receiver;
      trace_.append(std::move(dup));
      in_flight_.emplace(std::make_pair(copy.deliver_time, copy.id), std::move(copy));
    }
  }
  if (!dropped) {
    in_flight_.emplace(std::make_pair(m.deliver_time, m.id), std::move(m));
  }
  return SendStatus::Sent;
}

std::vector<Message> Network::deliver_due(Tick now) {
  std::vector<Message> delivered;
  while (!in_flight_.empty() && in_flight_.begin()->first.first <= now) {
    Message m = std::move(in_flight_.begin()->second);
    in_flight_.erase(in_flight_.begin());

    TraceEvent ev;
    ev.t = now;
    ev.msg = m.id;
    ev.conn = m.conn;
    ev.from = m.sender;
    ev.to = m.receiver;
    if (procs_.is_runnable(m.receiver)) {
      ev.kind = EventKind::Deliver;
      trace_.append(std::move(ev));
      inboxes_[m.receiver].push_back(m);
      delivered.push_back(std::move(m));
    } else {
      // Dead receiver: the message vanishes and the sender never hears
      // about it.
      ev.kind = EventKind::Blackhole;
      trace_.append(std::move(ev));
    }
  }
  return delivered;
}

void Network::close_clean(Pid pid, Tick now) {
  if (!procs_.exists(pid)) {
    throw SimError("close_clean: no such task: " + std::to_string(pid));
  }
  for (auto& [id, c] : connections_) {
    if (c.closed || (c.endpoint_a != pid && c.endpoint_b != pid)) continue;
    c.closed = true;
    TraceEvent ev;
    ev.t = now;
    ev.kind = EventKind::Close;
    ev.conn = id;
    ev.pid = pid;
    ev.peer = c.endpoint_a == pid ? c.endpoint_b : c.endpoint_a;
    trace_.append(std::move(ev));
  }
}

void Network::add_hook(MessageHookFn hook) {
  if (hooks_frozen_) {
    throw SimError("message hooks must be registered before the simulation starts");
  }
  hooks_.push_back(std::move(hook));
}

std::vector<Message> Network::take_inbox(Pid pid) {
  const auto it = inboxes_.find(pid);
  if (it == inboxes_.end()) return {};
  std::vector<Message> out = std::move(it->second);
  it->second.clear();
  return out;
}

const Connection& Network::connection(ConnId id) const {
  const auto it = connections_.find(id);
  if (it == connections_.end()) {
    throw SimError("no such connection: " + std::to_string(id));
  }
  return it->second;
}

}  // namespace failsim
