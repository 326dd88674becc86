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
#include <stdexcept>
#include <string>
#include <string_view>

namespace failsim {

using Pid = std::int64_t;
using Tick = std::int64_t;
using ConnId = std::int64_t;
using MsgId = std::int64_t;

inline constexpr Pid kInitPid = 1;
inline constexpr std::string_view kRootGroup = "/";

/// Sentinel returned by find_group for pids that were never registered.
inline constexpr std::string_view kNullGroup = "NULL";

/// Raised on contract violations: unknown pids, dead parents, malformed
/// paths, bad scenario files, late probe registration, and the like.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

/// A group path is "/" or "/" followed by one non-empty path component.
/// Nested hierarchies are not modeled.
bool is_valid_group_path(std::string_view path);

}  // namespace failsim
