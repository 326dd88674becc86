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

#include "failsim/trace.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace failsim {

namespace {

struct KindEntry {
  EventKind kind;
  std::string_view name;
};

constexpr std::array<KindEntry, 13> kKinds{{
    {EventKind::Spawn, "SPAWN"},
    {EventKind::Schedule, "SCHEDULE"},
    {EventKind::Idle, "IDLE"},
    {EventKind::Kill, "KILL"},
    {EventKind::Open, "OPEN"},
    {EventKind::Send, "SEND"},
    {EventKind::Deliver, "DELIVER"},
    {EventKind::Drop, "DROP"},
    {EventKind::Duplicate, "DUPLICATE"},
    {EventKind::Blackhole, "BLACKHOLE"},
    {EventKind::Close, "CLOSE"},
    {EventKind::Suspect, "SUSPECT"},
    {EventKind::Warn, "WARN"},
}};

void append_escaped(std::string& out, std::string_view s) {
  out.push_back('"');
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void field(std::string& out, std::string_view key, std::int64_t value) {
  out.push_back(',');
  append_escaped(out, key);
  out.push_back(':');
  out += std::to_string(value);
}

void field(std::string& out, std::string_view key, const std::string& value) {
  out.push_back(',');
  append_escaped(out, key);
  out.push_back(':');
  append_escaped(out, value);
}

}  // namespace

std::string_view kind_name(EventKind kind) {
  for (const auto& entry : kKinds) {
    if (entry.kind == kind) return entry.name;
  }
  throw SimError("unknown event kind");
}

EventKind kind_from_name(std::string_view name) {
  for (const auto& entry : kKinds) {
    if (entry.name == name) return entry.kind;
  }
  throw SimError("unknown event kind: " + std::string(name));
}

std::string to_ndjson_line(const TraceEvent& ev) {
  std::string out;
  out.reserve(96);
  out += "{\"t\":";
  out += std::to_string(ev.t);
  out += ",\"kind\":";
  append_escaped(out, kind_name(ev.kind));

  switch (ev.kind) {
    case EventKind::Spawn:
      field(out, "pid", ev.pid);
      field(out, "ppid", ev.ppid);
      field(out, "group", ev.group);
      field(out, "name", ev.name);
      break;
    case EventKind::Schedule:
      field(out, "pid", ev.pid);
      field(out, "time", ev.time);
      break;
    case EventKind::Idle:
      break;
    case EventKind::Kill:
      field(out, "pid", ev.pid);
      field(out, "group", ev.group);
      field(out, "time", ev.time);
      break;
    case EventKind::Open:
      field(out, "conn", ev.conn);
      field(out, "a", ev.a);
      field(out, "b", ev.b);
      break;
    case EventKind::Send:
      field(out, "msg", ev.msg);
      field(out, "conn", ev.conn);
      field(out, "from", ev.from);
      field(out, "to", ev.to);
      field(out, "size", ev.size);
      break;
    case EventKind::Deliver:
    case EventKind::Blackhole:
    case EventKind::Drop:
      field(out, "msg", ev.msg);
      field(out, "conn", ev.conn);
      field(out, "from", ev.from);
      field(out, "to", ev.to);
      break;
    case EventKind::Duplicate:
      field(out, "msg", ev.msg);
      field(out, "orig", ev.orig);
      field(out, "conn", ev.conn);
      field(out, "from", ev.from);
      field(out, "to", ev.to);
      break;
    case EventKind::Close:
      field(out, "conn", ev.conn);
      field(out, "pid", ev.pid);
      field(out, "peer", ev.peer);
      break;
    case EventKind::Suspect:
      field(out, "observer", ev.observer);
      field(out, "suspect", ev.suspect);
      field(out, "via", ev.via);
      break;
    case EventKind::Warn:
      field(out, "pid", ev.pid);
      field(out, "text", ev.text);
      break;
  }
  out.push_back('}');
  return out;
}

TraceEvent from_ndjson_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw SimError(std::string("malformed trace line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("t") || !j.contains("kind")) {
    throw SimError("trace event must be an object with \"t\" and \"kind\"");
  }
  if (!j["t"].is_number_integer() || !j["kind"].is_string()) {
    throw SimError("trace event has non-integer \"t\" or non-string \"kind\"");
  }

  TraceEvent ev;
  ev.t = j["t"].get<Tick>();
  ev.kind = kind_from_name(j["kind"].get<std::string>());

  const auto num = [&](const char* key, std::int64_t& slot) {
    if (auto it = j.find(key); it != j.end()) slot = it->get<std::int64_t>();
  };
  const auto str = [&](const char* key, std::string& slot) {
    if (auto it = j.find(key); it != j.end()) slot = it->get<std::string>();
  };
  num("pid", ev.pid);
  num("ppid", ev.ppid);
  num("a", ev.a);
  num("b", ev.b);
  num("from", ev.from);
  num("to", ev.to);
  num("observer", ev.observer);
  num("suspect", ev.suspect);
  num("peer", ev.peer);
  num("conn", ev.conn);
  num("msg", ev.msg);
  num("orig", ev.orig);
  num("time", ev.time);
  num("size", ev.size);
  str("group", ev.group);
  str("name", ev.name);
  str("via", ev.via);
  str("text", ev.text);
  return ev;
}

std::size_t TraceLog::count(EventKind kind) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      events_, [kind](const TraceEvent& ev) { return ev.kind == kind; }));
}

void TraceLog::write_ndjson(std::ostream& out) const {
  for (const auto& ev : events_) {
    out << to_ndjson_line(ev) << '\n';
  }
}

std::vector<TraceEvent> read_ndjson(std::istream& in) {
  std::vector<TraceEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      events.push_back(from_ndjson_line(line));
    } catch (const SimError& e) {
      throw SimError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return events;
}

}  // namespace failsim
