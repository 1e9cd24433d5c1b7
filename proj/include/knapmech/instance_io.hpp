// Copyright 2026 The knapmech Authors
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

#ifndef KNAPMECH_INSTANCE_IO_HPP_
#define KNAPMECH_INSTANCE_IO_HPP_

#include <stdexcept>
#include <string>
#include <variant>

#include "knapmech/mechanisms.hpp"
#include "knapmech/model.hpp"

namespace knapmech {

// Instance files are JSON. Set-model files look like
//   {"capacity": "1", "agents": [{"id": 1, "model": "understating",
//    "items": [{"id": "a", "value": "3/4", "size": "1/2"}]}]}
// and single-item files set "kqus": true with per-agent {"id", "ratio",
// "size"}. All rationals are quoted "p/q" strings; decimals are rejected
// with the exact fraction suggested. Agent ids must be 1..n in order.

struct ParseError : std::runtime_error {
  // 1-based position for JSON syntax errors; -1/-1 for structural or
  // validation errors, which name the offending field instead.
  int line = -1;
  int column = -1;

  explicit ParseError(const std::string& message, int line_at = -1, int column_at = -1)
      : std::runtime_error(message), line(line_at), column(column_at) {}
};

using ParsedInstance = std::variant<Instance, KqusInstance>;

// Parses and validates. Throws ParseError on any problem.
ParsedInstance parse_instance_text(const std::string& text);

// Reads the file and parses it. File errors also surface as ParseError.
ParsedInstance load_instance(const std::string& path);

// Canonical serialization: two-space indent, alphabetical keys, trailing
// newline. parse(serialize(x)) reproduces x exactly.
std::string serialize_instance(const Instance& instance);
std::string serialize_instance(const KqusInstance& instance);
std::string serialize_instance(const ParsedInstance& parsed);

}  // namespace knapmech

#endif  // KNAPMECH_INSTANCE_IO_HPP_
