// Copyright 2026 The edgecover Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented instance files:
//
//   # comment
//   # @key = value        <- optional problem parameter
//   n m
//   w_0 w_1 ... w_{n-1}
//   u v                   <- m lines, 0-based, u < v
//
// Blank lines and comments may appear anywhere. Parameters are kept in a
// sorted map, so a save/load round trip reproduces them exactly.

#ifndef EDGECOVER_INSTANCE_IO_H_
#define EDGECOVER_INSTANCE_IO_H_

#include <map>
#include <string>
#include <string_view>

#include "edgecover/graph.h"

namespace edgecover {

struct Instance {
  Graph graph;
  std::map<std::string, std::string> params;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws ParseError carrying the offending line number.
Instance LoadInstance(std::string_view text);
std::string SaveInstance(const Instance& instance);

Instance LoadInstanceFile(const std::string& path);
void SaveInstanceFile(const Instance& instance, const std::string& path);

}  // namespace edgecover

#endif  // EDGECOVER_INSTANCE_IO_H_
