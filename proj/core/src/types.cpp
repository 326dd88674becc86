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

#include "failsim/types.hpp"

#include <algorithm>
#include <cctype>

namespace failsim {

bool is_valid_group_path(std::string_view path) {
  if (path == kRootGroup) return true;
  if (path.size() < 2 || path.front() != '/') return false;
  const auto name = path.substr(1);
  return std::ranges::all_of(name, [](unsigned char c) {
    return c != '/' && !std::isspace(c) && std::isprint(c);
  });
}

}  // namespace failsim
