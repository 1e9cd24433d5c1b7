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

#include "knapmech/knapsack.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace knapmech {

namespace {

struct Candidate {
  Rational value;
  Rational size;
  std::vector<std::string> ids;  // sorted
  bool valid = false;
};

// True when (value, size, ids) beats the current candidate under the
// canonical order: higher value, then lower size, then smaller id sequence.
bool improves(const Candidate& best, const Rational& value, const Rational& size,
              const std::vector<std::string>& ids) {
  if (!best.valid) return true;
  if (value != best.value) return value > best.value;
  if (size != best.size) return size < best.size;
  return std::lexicographical_compare(ids.begin(), ids.end(), best.ids.begin(), best.ids.end());
}

struct BnbState {
  const std::vector<Item>* items;  // sorted by priority
  Rational capacity;
  Candidate best;
  std::vector<bool> taken;
};

// Fractional relaxation bound for the remaining suffix.
Rational suffix_bound(const BnbState& state, std::size_t index, Rational room) {
  Rational bound;
  for (std::size_t i = index; i < state.items->size(); ++i) {
    const Item& item = (*state.items)[i];
    if (item.size <= room) {
      bound += item.value;
      room -= item.size;
    } else {
      if (room.sign() > 0) bound += item.value * room / item.size;
      break;
    }
  }
  return bound;
}

void record(BnbState& state, const Rational& value, const Rational& size) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < state.items->size(); ++i) {
    if (state.taken[i]) ids.push_back((*state.items)[i].id);
  }
  std::sort(ids.begin(), ids.end());
  if (improves(state.best, value, size, ids)) {
    state.best.value = value;
    state.best.size = size;
    state.best.ids = std::move(ids);
    state.best.valid = true;
  }
}

void branch(BnbState& state, std::size_t index, const Rational& value, const Rational& size) {
  if (index == state.items->size()) {
    record(state, value, size);
    return;
  }
  // Prune only when the relaxation is strictly below the incumbent value;
  // equal bounds may still hide canonically smaller optima.
  if (state.best.valid && value + suffix_bound(state, index, state.capacity - size) < state.best.value) {
    return;
  }
  const Item& item = (*state.items)[index];
  if (size + item.size <= state.capacity) {
    state.taken[index] = true;
    branch(state, index + 1, value + item.value, size + item.size);
    state.taken[index] = false;
  }
  branch(state, index + 1, value, size);
}

}  // namespace

OptResult opt_knapsack(const ItemSet& pool, const Rational& capacity, const KnapsackLimits& limits) {
  if (static_cast<int>(pool.size()) > limits.max_items) {
    throw std::invalid_argument("opt_knapsack: pool exceeds " + std::to_string(limits.max_items) +
                                " items");
  }
  std::vector<Item> sorted = pool.items();
  std::sort(sorted.begin(), sorted.end(), PriorityLess{});
  BnbState state;
  state.items = &sorted;
  state.capacity = capacity;
  state.taken.assign(sorted.size(), false);
  branch(state, 0, Rational(0), Rational(0));
  std::vector<Item> chosen;
  for (const std::string& id : state.best.ids) chosen.push_back(*pool.find(id));
  return {ItemSet(std::move(chosen)), state.best.value, state.best.size};
}

namespace {

void exhaust(const std::vector<Item>& items, std::size_t index, const Rational& capacity,
             Rational value, Rational size, std::vector<bool>& taken, Candidate& best) {
  if (size > capacity) return;
  if (index == items.size()) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (taken[i]) ids.push_back(items[i].id);
    }
    if (improves(best, value, size, ids)) {
      best.value = value;
      best.size = size;
      best.ids = std::move(ids);
      best.valid = true;
    }
    return;
  }
  taken[index] = false;
  exhaust(items, index + 1, capacity, value, size, taken, best);
  taken[index] = true;
  exhaust(items, index + 1, capacity, value + items[index].value, size + items[index].size, taken,
          best);
  taken[index] = false;
}

}  // namespace

OptResult brute_force_opt(const ItemSet& pool, const Rational& capacity) {
  if (pool.size() > 20) throw std::invalid_argument("brute_force_opt: pool exceeds 20 items");
  const std::vector<Item>& items = pool.items();  // id order; ids already sorted
  Candidate best;
  std::vector<bool> taken(items.size(), false);
  exhaust(items, 0, capacity, Rational(0), Rational(0), taken, best);
  std::vector<Item> chosen;
  for (const std::string& id : best.ids) chosen.push_back(*pool.find(id));
  return {ItemSet(std::move(chosen)), best.value, best.size};
}

}  // namespace knapmech
