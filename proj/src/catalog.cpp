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

#include "knapmech/catalog.hpp"

#include <random>
#include <stdexcept>

namespace knapmech {

namespace {

// Shared item parameters of the first example family: three interchangeable
// items worth 3/4 at half capacity and one item worth 1 at full capacity.
Item ex1_item(const std::string& id, int owner) {
  return {id, owner, Rational(3, 4), Rational(1, 2)};
}

Rational param_or(const std::map<std::string, Rational>& params, const std::string& key,
                  const Rational& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, Rational>& params,
                    const std::vector<std::string>& known, const std::string& entry) {
  for (const auto& [key, value] : params) {
    (void)value;
    bool ok = false;
    for (const std::string& name : known) {
      if (key == name) ok = true;
    }
    if (!ok) throw std::invalid_argument("catalog " + entry + ": unknown parameter " + key);
  }
}

long scale_param(const std::map<std::string, Rational>& params, const std::string& entry,
                 long fallback, long lo, long hi) {
  const Rational m = param_or(params, "M", Rational(fallback));
  if (m.denominator() != 1 || m < Rational(lo) || m > Rational(hi)) {
    throw std::invalid_argument("catalog " + entry + ": M must be an integer in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                m.str());
  }
  return std::stol(m.str());
}

Rational eps_param(const std::map<std::string, Rational>& params, const std::string& entry,
                   const Rational& fallback, const Rational& upper) {
  const Rational eps = param_or(params, "eps", fallback);
  if (eps.sign() <= 0 || eps >= upper) {
    throw std::invalid_argument("catalog " + entry + ": eps must lie in (0, " + upper.str() +
                                "), got " + eps.str());
  }
  return eps;
}

Instance two_agents(ItemSet first, ItemSet second, ReportModel first_model,
                    ReportModel second_model) {
  Instance instance;
  instance.capacity = Rational(1);
  instance.true_sets = {std::move(first), std::move(second)};
  instance.models = {first_model, second_model};
  return instance;
}

// "a", "b", ..., "z", "aa", "ab", ... for generated items.
std::string generated_id(int index) {
  std::string id;
  int n = index;
  do {
    id.insert(id.begin(), static_cast<char>('a' + n % 26));
    n = n / 26 - 1;
  } while (n >= 0);
  return id;
}

const Rational& pick(std::mt19937_64& rng, const std::vector<Rational>& grid) {
  return grid[static_cast<std::size_t>(rng() % grid.size())];
}

void check_grids(const std::vector<Rational>& value_grid, const std::vector<Rational>& size_grid,
                 bool sizes_unit_bound) {
  if (value_grid.empty() || size_grid.empty()) {
    throw std::invalid_argument("random instance: empty grid");
  }
  for (const Rational& v : value_grid) {
    if (v.sign() < 0) throw std::invalid_argument("random instance: negative grid value");
  }
  for (const Rational& s : size_grid) {
    if (s.sign() <= 0 || (sizes_unit_bound && s > Rational(1))) {
      throw std::invalid_argument("random instance: grid size outside (0, 1]");
    }
  }
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"example1.instance1", "agent 1 owns a; agent 2 owns c and d", {}},
      {"example1.instance2", "agent 1 owns a; agent 2 owns d", {}},
      {"example1.instance3", "agent 1 owns a and b; agent 2 owns d", {}},
      {"example2.badgreedy",
       "a unit item against a small item; a fake half-size item beats it under BAD-GREEDY",
       {}},
      {"example3.nash-fake",
       "a fake report that is simultaneously a Nash profile and welfare-ruinous",
       {{"M", Rational(10), "integer in [3, 1000]"}}},
      {"footnote7.no-dominant",
       "two understating agents with no dominant strategy under HALF-GREEDY",
       {{"eps", Rational(1, 100), "rational in (0, 1/4)"}}},
      {"thm5.overstate-rand",
       "one tiny item against a unit item; the deviation claims M^2 tiny copies",
       {{"M", Rational(3), "integer in [2, 12]"}}},
      {"thm7.understate-det",
       "a near-golden-ratio item with a hideable half-size companion",
       {{"eps", Rational(1, 100), "rational in (0, 1)"}}},
      {"thm8.understate-rand",
       "the randomized variant: the companion item is worth exactly 1",
       {}},
      {"appendixA1.eu-tight",
       "drives EQUAL-UTILITY arbitrarily close to its guarantee",
       {{"eps", Rational(1, 10000), "rational in (0, 400/209)"}}},
      {"thm9.kqus",
       "single-item model: ratio M at size 1 against ratio 1 at size 1",
       {{"M", Rational(100), "integer in [2, 10^6]"}}},
  };
}

BuiltInstance catalog_build(const std::string& name,
                            const std::map<std::string, Rational>& params) {
  if (name == "example1.instance1") {
    reject_unknown(params, {}, name);
    return two_agents(ItemSet({ex1_item("a", 1)}),
                      ItemSet({ex1_item("c", 2), {"d", 2, Rational(1), Rational(1)}}),
                      ReportModel::kUnderstating, ReportModel::kUnderstating);
  }
  if (name == "example1.instance2") {
    reject_unknown(params, {}, name);
    return two_agents(ItemSet({ex1_item("a", 1)}), ItemSet({{"d", 2, Rational(1), Rational(1)}}),
                      ReportModel::kUnderstating, ReportModel::kUnderstating);
  }
  if (name == "example1.instance3") {
    reject_unknown(params, {}, name);
    return two_agents(ItemSet({ex1_item("a", 1), ex1_item("b", 1)}),
                      ItemSet({{"d", 2, Rational(1), Rational(1)}}),
                      ReportModel::kUnderstating, ReportModel::kUnderstating);
  }
  if (name == "example2.badgreedy") {
    reject_unknown(params, {}, name);
    return two_agents(ItemSet({{"a", 1, Rational(1), Rational(1)}}),
                      ItemSet({{"b", 2, Rational(1, 4), Rational(1, 2)}}),
                      ReportModel::kOverstating, ReportModel::kOverstating);
  }
  if (name == "example3.nash-fake") {
    reject_unknown(params, {"M"}, name);
    const long m = scale_param(params, name, 10, 3, 1000);
    return two_agents(
        ItemSet({{"a", 1, Rational(1), Rational(1, m)}}),
        ItemSet({{"b", 2, Rational(m - 2), Rational(m - 1, m)}}),
        ReportModel::kFull, ReportModel::kHonest);
  }
  if (name == "footnote7.no-dominant") {
    reject_unknown(params, {"eps"}, name);
    const Rational eps = eps_param(params, name, Rational(1, 100), Rational(1, 4));
    const Rational quarter = Rational(1, 4) + eps;
    return two_agents(
        ItemSet({{"a", 1, Rational(2), quarter}, {"b", 1, Rational(3) - eps, Rational(1, 2)}}),
        ItemSet({{"c", 2, Rational(2) - eps, quarter}, {"d", 2, Rational(3), Rational(1, 2)}}),
        ReportModel::kUnderstating, ReportModel::kUnderstating);
  }
  if (name == "thm5.overstate-rand") {
    reject_unknown(params, {"M"}, name);
    const long m = scale_param(params, name, 3, 2, 12);
    std::vector<Item> tiny;
    for (long j = 1; j <= m * m; ++j) {
      tiny.push_back({"a" + std::to_string(j), 1, Rational(1, m), Rational(1, m * m)});
    }
    return two_agents(ItemSet(tiny), ItemSet({{"b", 2, Rational(1), Rational(1)}}),
                      ReportModel::kOverstating, ReportModel::kHonest);
  }
  if (name == "thm7.understate-det") {
    reject_unknown(params, {"eps"}, name);
    const Rational eps = eps_param(params, name, Rational(1, 100), Rational(1));
    const Rational phi(1597, 987);  // rational stand-in just above the golden ratio
    return two_agents(
        ItemSet({{"a", 1, phi, Rational(1)}, {"c", 1, phi - eps, Rational(1, 2)}}),
        ItemSet({{"b", 2, Rational(1), Rational(1, 2)}}),
        ReportModel::kUnderstating, ReportModel::kHonest);
  }
  if (name == "thm8.understate-rand") {
    reject_unknown(params, {}, name);
    const Rational phi(1597, 987);
    return two_agents(
        ItemSet({{"a", 1, phi, Rational(1)}, {"c", 1, Rational(1), Rational(1, 2)}}),
        ItemSet({{"b", 2, Rational(1), Rational(1, 2)}}),
        ReportModel::kUnderstating, ReportModel::kHonest);
  }
  if (name == "appendixA1.eu-tight") {
    reject_unknown(params, {"eps"}, name);
    // 400/209 = 1/(alpha - 1) for the EQUAL-UTILITY alpha of 15225/10000.
    const Rational eps = eps_param(params, name, Rational(1, 10000), Rational(400, 209));
    return two_agents(
        ItemSet({{"a", 1, Rational(1), Rational(1)}, {"b", 1, Rational(1, 2), Rational(1, 2)}}),
        ItemSet({{"c", 2, Rational(400, 209) - eps, Rational(1, 2)}}),
        ReportModel::kUnderstating, ReportModel::kUnderstating);
  }
  if (name == "thm9.kqus") {
    reject_unknown(params, {"M"}, name);
    const long m = scale_param(params, name, 100, 2, 1000000);
    KqusInstance instance;
    instance.agents = {{Rational(m), Rational(1)}, {Rational(1), Rational(1)}};
    return instance;
  }
  throw std::invalid_argument("catalog: unknown entry " + name);
}

std::vector<Rational> default_value_grid() {
  return {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2),
          Rational(2)};
}

std::vector<Rational> default_size_grid() {
  return {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4),
          Rational(1)};
}

std::vector<Rational> default_ratio_grid() {
  return {Rational(0), Rational(1), Rational(2), Rational(3), Rational(5), Rational(10)};
}

Instance random_instance(std::uint64_t seed, int agents, int items_per_agent,
                         const std::vector<Rational>& value_grid,
                         const std::vector<Rational>& size_grid, ReportModel model) {
  if (agents < 1) throw std::invalid_argument("random instance: need at least one agent");
  if (items_per_agent < 0) throw std::invalid_argument("random instance: negative item count");
  check_grids(value_grid, size_grid, true);
  std::mt19937_64 rng(seed);
  Instance instance;
  instance.capacity = Rational(1);
  int next_id = 0;
  for (int i = 1; i <= agents; ++i) {
    std::vector<Item> items;
    for (int j = 0; j < items_per_agent; ++j) {
      items.push_back({generated_id(next_id++), i, pick(rng, value_grid), pick(rng, size_grid)});
    }
    instance.true_sets.push_back(ItemSet(std::move(items)));
    instance.models.push_back(model);
  }
  return instance;
}

KqusInstance random_kqus(std::uint64_t seed, int agents,
                         const std::vector<Rational>& ratio_grid,
                         const std::vector<Rational>& size_grid) {
  if (agents < 1) throw std::invalid_argument("random instance: need at least one agent");
  check_grids(ratio_grid, size_grid, true);
  std::mt19937_64 rng(seed);
  KqusInstance instance;
  for (int i = 0; i < agents; ++i) {
    instance.agents.push_back({pick(rng, ratio_grid), pick(rng, size_grid)});
  }
  return instance;
}

}  // namespace knapmech
