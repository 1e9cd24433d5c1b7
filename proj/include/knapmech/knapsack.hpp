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

#ifndef KNAPMECH_KNAPSACK_HPP_
#define KNAPMECH_KNAPSACK_HPP_

#include "knapmech/model.hpp"

namespace knapmech {

struct OptResult {
  ItemSet chosen;
  Rational value;
  Rational size;
};

struct KnapsackLimits {
  int max_items = 30;
};

// Exact 0/1 knapsack optimum by branch and bound with the fractional
// relaxation as bound. Ties are resolved canonically: maximum value, then
// minimum total size, then lexicographically smallest id sequence, so the
// returned set is unique. Throws if the pool exceeds limits.max_items.
OptResult opt_knapsack(const ItemSet& pool, const Rational& capacity,
                       const KnapsackLimits& limits = {});

// Exhaustive reference used to validate opt_knapsack in tests. Same
// canonical tie-break. Limited to 20 items.
OptResult brute_force_opt(const ItemSet& pool, const Rational& capacity);

}  // namespace knapmech

#endif  // KNAPMECH_KNAPSACK_HPP_
