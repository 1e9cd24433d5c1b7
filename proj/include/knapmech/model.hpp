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

#ifndef KNAPMECH_MODEL_HPP_
#define KNAPMECH_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knapmech/rational.hpp"

namespace knapmech {

// What an agent may do to its report relative to its true item set.
enum class ReportModel {
  kHonest,        // report exactly the true set
  kUnderstating,  // report any subset of the true set
  kOverstating,   // report any superset of the true set
  kFull,          // report any finite set of owned items
};

std::string to_string(ReportModel model);
std::optional<ReportModel> report_model_from_string(std::string_view name);

// An indivisible item. Ids are unique within an instance; the id order is
// also the fixed tie-breaking priority (lexicographically smaller id wins).
struct Item {
  std::string id;
  int owner = 0;
  Rational value;
  Rational size;
};

bool same_item(const Item& a, const Item& b);

// Compares items under the value-per-size priority used by the greedy
// mechanisms: higher value/size ratio first, ties broken by smaller id.
// Returns -1 if a precedes b, +1 if b precedes a. Equal ids are a caller
// bug and throw.
int priority_compare(const Item& a, const Item& b);

struct PriorityLess {
  bool operator()(const Item& a, const Item& b) const { return priority_compare(a, b) < 0; }
};

// A set of items, kept sorted by id with unique ids.
class ItemSet {
 public:
  ItemSet() = default;
  explicit ItemSet(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  const Item* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  Rational total_value() const;
  Rational total_size() const;

  // Set union. Items with equal ids must agree on all attributes.
  ItemSet union_with(const ItemSet& other) const;
  // Set intersection by id. Matching ids with conflicting attributes throw.
  ItemSet intersect(const ItemSet& other) const;
  ItemSet minus(const ItemSet& other) const;
  bool subset_of(const ItemSet& other) const;

  bool operator==(const ItemSet& other) const;
  bool operator!=(const ItemSet& other) const { return !(*this == other); }

  // Rendering such as "{a,c}"; "{}" for the empty set.
  std::string id_list() const;

 private:
  std::vector<Item> items_;
};

// Total order on item sets by their sorted id sequences. Used everywhere a
// deterministic tie-break between otherwise equivalent sets is needed.
bool canonical_less(const ItemSet& a, const ItemSet& b);

using ReportProfile = std::vector<ItemSet>;

ItemSet profile_union(const ReportProfile& reports);

// A finitely supported distribution over item sets. Probabilities are
// positive exact rationals summing to one; atoms are distinct and stored in
// canonical order.
class OutcomeDistribution {
 public:
  OutcomeDistribution() = default;

  static OutcomeDistribution deterministic(ItemSet set);
  // Merges duplicate atoms, drops zero-probability atoms, verifies the
  // probabilities are nonnegative and sum to exactly one.
  static OutcomeDistribution make(std::vector<std::pair<ItemSet, Rational>> atoms);

  const std::vector<std::pair<ItemSet, Rational>>& atoms() const { return atoms_; }

  // Probability that the given item id is part of the outcome.
  Rational selection_probability(std::string_view id) const;

  // Throws unless every atom fits in the capacity and only uses available
  // items.
  void check_feasible(const Rational& capacity, const ItemSet& available) const;

  std::string str() const;

 private:
  std::vector<std::pair<ItemSet, Rational>> atoms_;
};

// Utility of an agent owning true set x_i when the outcome is s: the total
// true value of the agent's items that were selected.
Rational agent_utility(const ItemSet& x_i, const ItemSet& outcome);
Rational expected_utility(const ItemSet& x_i, const OutcomeDistribution& dist);

// A knapsack game: capacity, the agents' true item sets, and each agent's
// report model.
struct Instance {
  Rational capacity = Rational(1);
  std::vector<ItemSet> true_sets;
  std::vector<ReportModel> models;

  int agents() const { return static_cast<int>(true_sets.size()); }
  ItemSet union_all() const { return profile_union(true_sets); }
  ReportProfile truthful_reports() const { return true_sets; }

  // Scales all sizes and the capacity by 1/capacity, so the result has
  // capacity one. Values are unchanged. Idempotent.
  Instance normalized() const;
};

Rational expected_welfare(const Instance& instance, const OutcomeDistribution& dist);

struct ValidationResult {
  bool ok = true;
  int agent = -1;  // -1 when the problem is not specific to one agent
  std::string message;
};

// Structural checks: positive capacity, unique ids across all agents,
// owner fields matching agent slots, sizes in (0, capacity], values >= 0,
// one model per agent.
ValidationResult validate_instance(const Instance& instance);

// Checks that each agent's report is allowed by its report model and that
// the profile has no id conflicts. Returns the first violation found.
ValidationResult validate_reports(const Instance& instance, const ReportProfile& reports);

}  // namespace knapmech

#endif  // KNAPMECH_MODEL_HPP_
