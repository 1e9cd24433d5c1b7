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

#ifndef KNAPMECH_CATALOG_HPP_
#define KNAPMECH_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "knapmech/mechanisms.hpp"
#include "knapmech/model.hpp"
#include "knapmech/rational.hpp"

namespace knapmech {

struct CatalogParam {
  std::string name;
  Rational default_value;
  std::string domain;  // human-readable, e.g. "integer in [2, 12]"
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<CatalogParam> params;
};

using BuiltInstance = std::variant<Instance, KqusInstance>;

// The named instances, in listing order.
std::vector<CatalogEntry> catalog_entries();

// Builds a named instance. Missing parameters take their defaults; unknown
// names, unknown parameters, and out-of-domain values raise invalid_argument.
// Pure: equal (name, params) yield identical instances.
BuiltInstance catalog_build(const std::string& name,
                            const std::map<std::string, Rational>& params = {});

// Grids the random generators draw from by default.
std::vector<Rational> default_value_grid();
std::vector<Rational> default_size_grid();   // all within (0, 1]
std::vector<Rational> default_ratio_grid();  // includes 0

// Reproducible random instance with unit capacity: `items_per_agent` items
// for each of `agents` agents (0 is a valid, empty profile), values and
// sizes drawn from the grids, every agent given `model`. Equal arguments
// yield identical instances. Empty grids or grid sizes outside (0, 1] throw.
Instance random_instance(std::uint64_t seed, int agents, int items_per_agent,
                         const std::vector<Rational>& value_grid,
                         const std::vector<Rational>& size_grid,
                         ReportModel model = ReportModel::kUnderstating);

// Same contract for the single-item model: one (ratio, true size) pair per
// agent, drawn from the grids.
KqusInstance random_kqus(std::uint64_t seed, int agents,
                         const std::vector<Rational>& ratio_grid,
                         const std::vector<Rational>& size_grid);

}  // namespace knapmech

#endif  // KNAPMECH_CATALOG_HPP_
