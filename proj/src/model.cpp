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

#include "knapmech/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace knapmech {

std::string to_string(ReportModel model) {
  switch (model) {
    case ReportModel::kHonest: return "honest";
    case ReportModel::kUnderstating: return "understating";
    case ReportModel::kOverstating: return "overstating";
    case ReportModel::kFull: return "full";
  }
  throw std::logic_error("unknown report model");
}

std::optional<ReportModel> report_model_from_string(std::string_view name) {
  if (name == "honest") return ReportModel::kHonest;
  if (name == "understating") return ReportModel::kUnderstating;
  if (name == "overstating") return ReportModel::kOverstating;
  if (name == "full") return ReportModel::kFull;
  return std::nullopt;
}

bool same_item(const Item& a, const Item& b) {
  return a.id == b.id && a.owner == b.owner && a.value == b.value && a.size == b.size;
}

int priority_compare(const Item& a, const Item& b) {
  if (a.id == b.id) throw std::invalid_argument("priority_compare: equal ids");
  // Compare value/size ratios without dividing: a.value * b.size vs
  // b.value * a.size (sizes are positive).
  const Rational lhs = a.value * b.size;
  const Rational rhs = b.value * a.size;
  if (lhs > rhs) return -1;
  if (lhs < rhs) return 1;
  return a.id < b.id ? -1 : 1;
}

ItemSet::ItemSet(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (items_[i - 1].id == items_[i].id) {
      throw std::invalid_argument("item set: duplicate id '" + items_[i].id + "'");
    }
  }
}

const Item* ItemSet::find(std::string_view id) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), id,
                             [](const Item& item, std::string_view key) { return item.id < key; });
  if (it == items_.end() || it->id != id) return nullptr;
  return &*it;
}

Rational ItemSet::total_value() const {
  Rational sum;
  for (const Item& item : items_) sum += item.value;
  return sum;
}

Rational ItemSet::total_size() const {
  Rational sum;
  for (const Item& item : items_) sum += item.size;
  return sum;
}

ItemSet ItemSet::union_with(const ItemSet& other) const {
  std::vector<Item> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < items_.size() && j < other.items_.size()) {
    if (items_[i].id < other.items_[j].id) {
      merged.push_back(items_[i++]);
    } else if (other.items_[j].id < items_[i].id) {
      merged.push_back(other.items_[j++]);
    } else {
      if (!same_item(items_[i], other.items_[j])) {
        throw std::invalid_argument("union: conflicting items with id '" + items_[i].id + "'");
      }
      merged.push_back(items_[i]);
      ++i;
      ++j;
    }
  }
  merged.insert(merged.end(), items_.begin() + i, items_.end());
  merged.insert(merged.end(), other.items_.begin() + j, other.items_.end());
  ItemSet result;
  result.items_ = std::move(merged);  // already sorted and unique
  return result;
}

ItemSet ItemSet::intersect(const ItemSet& other) const {
  std::vector<Item> common;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < items_.size() && j < other.items_.size()) {
    if (items_[i].id < other.items_[j].id) {
      ++i;
    } else if (other.items_[j].id < items_[i].id) {
      ++j;
    } else {
      if (!same_item(items_[i], other.items_[j])) {
        throw std::invalid_argument("intersect: conflicting items with id '" + items_[i].id + "'");
      }
      common.push_back(items_[i]);
      ++i;
      ++j;
    }
  }
  ItemSet result;
  result.items_ = std::move(common);
  return result;
}

ItemSet ItemSet::minus(const ItemSet& other) const {
  std::vector<Item> rest;
  for (const Item& item : items_) {
    if (!other.contains(item.id)) rest.push_back(item);
  }
  ItemSet result;
  result.items_ = std::move(rest);
  return result;
}

bool ItemSet::subset_of(const ItemSet& other) const {
  for (const Item& item : items_) {
    const Item* match = other.find(item.id);
    if (match == nullptr || !same_item(item, *match)) return false;
  }
  return true;
}

bool ItemSet::operator==(const ItemSet& other) const {
  if (items_.size() != other.items_.size()) return false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!same_item(items_[i], other.items_[i])) return false;
  }
  return true;
}

std::string ItemSet::id_list() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out += ",";
    out += items_[i].id;
  }
  out += "}";
  return out;
}

bool canonical_less(const ItemSet& a, const ItemSet& b) {
  const auto& xs = a.items();
  const auto& ys = b.items();
  return std::lexicographical_compare(
      xs.begin(), xs.end(), ys.begin(), ys.end(),
      [](const Item& x, const Item& y) { return x.id < y.id; });
}

ItemSet profile_union(const ReportProfile& reports) {
  ItemSet all;
  for (const ItemSet& set : reports) all = all.union_with(set);
  return all;
}

OutcomeDistribution OutcomeDistribution::deterministic(ItemSet set) {
  OutcomeDistribution dist;
  dist.atoms_.emplace_back(std::move(set), Rational(1));
  return dist;
}

OutcomeDistribution OutcomeDistribution::make(std::vector<std::pair<ItemSet, Rational>> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  OutcomeDistribution dist;
  Rational total;
  for (auto& [set, prob] : atoms) {
    if (prob.sign() < 0) throw std::invalid_argument("distribution: negative probability");
    if (prob.is_zero()) continue;
    total += prob;
    if (!dist.atoms_.empty() && dist.atoms_.back().first == set) {
      dist.atoms_.back().second += prob;
    } else {
      dist.atoms_.emplace_back(std::move(set), prob);
    }
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("distribution: probabilities sum to " + total.str() + ", not 1");
  }
  return dist;
}

Rational OutcomeDistribution::selection_probability(std::string_view id) const {
  Rational p;
  for (const auto& [set, prob] : atoms_) {
    if (set.contains(id)) p += prob;
  }
  return p;
}

void OutcomeDistribution::check_feasible(const Rational& capacity, const ItemSet& available) const {
  for (const auto& [set, prob] : atoms_) {
    if (set.total_size() > capacity) {
      throw std::logic_error("distribution atom " + set.id_list() + " exceeds capacity");
    }
    if (!set.subset_of(available)) {
      throw std::logic_error("distribution atom " + set.id_list() + " uses unavailable items");
    }
  }
}

std::string OutcomeDistribution::str() const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms_[i].first.id_list() + ":" + atoms_[i].second.str();
  }
  return out;
}

Rational agent_utility(const ItemSet& x_i, const ItemSet& outcome) {
  return x_i.intersect(outcome).total_value();
}

Rational expected_utility(const ItemSet& x_i, const OutcomeDistribution& dist) {
  Rational sum;
  for (const auto& [set, prob] : dist.atoms()) sum += prob * agent_utility(x_i, set);
  return sum;
}

Instance Instance::normalized() const {
  Instance scaled = *this;
  if (capacity == Rational(1)) return scaled;
  for (ItemSet& set : scaled.true_sets) {
    std::vector<Item> items = set.items();
    for (Item& item : items) item.size /= capacity;
    set = ItemSet(std::move(items));
  }
  scaled.capacity = Rational(1);
  return scaled;
}

Rational expected_welfare(const Instance& instance, const OutcomeDistribution& dist) {
  Rational sum;
  for (const ItemSet& x_i : instance.true_sets) sum += expected_utility(x_i, dist);
  return sum;
}

ValidationResult validate_instance(const Instance& instance) {
  if (instance.capacity.sign() <= 0) {
    return {false, -1, "capacity must be positive"};
  }
  if (instance.models.size() != instance.true_sets.size()) {
    return {false, -1, "one report model required per agent"};
  }
  std::vector<std::string> ids;
  for (int i = 0; i < instance.agents(); ++i) {
    for (const Item& item : instance.true_sets[i].items()) {
      if (item.owner != i + 1) {
        return {false, i + 1, "item '" + item.id + "' has owner " + std::to_string(item.owner) +
                                  " but belongs to agent " + std::to_string(i + 1)};
      }
      if (item.size.sign() <= 0 || item.size > instance.capacity) {
        return {false, i + 1, "item '" + item.id + "' has size outside (0, capacity]"};
      }
      if (item.value.sign() < 0) {
        return {false, i + 1, "item '" + item.id + "' has negative value"};
      }
      ids.push_back(item.id);
    }
  }
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] == ids[i]) return {false, -1, "duplicate item id '" + ids[i] + "' across agents"};
  }
  return {};
}

ValidationResult validate_reports(const Instance& instance, const ReportProfile& reports) {
  if (static_cast<int>(reports.size()) != instance.agents()) {
    return {false, -1, "report profile must have one report per agent"};
  }
  for (int i = 0; i < instance.agents(); ++i) {
    const ItemSet& truth = instance.true_sets[i];
    const ItemSet& report = reports[i];
    const ReportModel model = instance.models[i];
    for (const Item& item : report.items()) {
      if (item.owner != i + 1) {
        return {false, i + 1, "reported item '" + item.id + "' not owned by agent " + std::to_string(i + 1)};
      }
      if (item.size.sign() <= 0 || item.size > instance.capacity) {
        return {false, i + 1, "reported item '" + item.id + "' has size outside (0, capacity]"};
      }
      if (item.value.sign() < 0) {
        return {false, i + 1, "reported item '" + item.id + "' has negative value"};
      }
      // A reported id that names a true item must carry that item's
      // attributes; fabricated items need fresh ids.
      const Item* truth_item = truth.find(item.id);
      if (truth_item != nullptr && !same_item(item, *truth_item)) {
        return {false, i + 1, "reported item '" + item.id + "' conflicts with the true item"};
      }
      for (int j = 0; j < instance.agents(); ++j) {
        if (j != i && instance.true_sets[j].contains(item.id)) {
          return {false, i + 1, "reported item '" + item.id + "' belongs to agent " + std::to_string(j + 1)};
        }
      }
    }
    switch (model) {
      case ReportModel::kHonest:
        if (report != truth) return {false, i + 1, "honest agent must report its true set"};
        break;
      case ReportModel::kUnderstating:
        if (!report.subset_of(truth)) {
          return {false, i + 1, "understating agent must report a subset of its true set"};
        }
        break;
      case ReportModel::kOverstating:
        if (!truth.subset_of(report)) {
          return {false, i + 1, "overstating agent must report a superset of its true set"};
        }
        break;
      case ReportModel::kFull:
        break;
    }
  }
  // Cross-agent id conflicts among reports (fabricated ids must be unique).
  std::vector<std::pair<std::string, int>> ids;
  for (int i = 0; i < instance.agents(); ++i) {
    for (const Item& item : reports[i].items()) ids.emplace_back(item.id, i + 1);
  }
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1].first == ids[i].first) {
      return {false, ids[i].second, "reported id '" + ids[i].first + "' appears in two reports"};
    }
  }
  return {};
}

}  // namespace knapmech
