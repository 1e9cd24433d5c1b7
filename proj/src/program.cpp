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

#include "knapmech/program.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace knapmech {

namespace {

// Enumerates feasible subsets as bitmasks over the pool's id order,
// pruning supersets of oversize sets (sizes are positive).
void collect_feasible(const std::vector<Item>& items, std::size_t index, std::uint32_t mask,
                      const Rational& size, const Rational& capacity,
                      std::vector<std::uint32_t>& out) {
  if (index == items.size()) {
    out.push_back(mask);
    return;
  }
  collect_feasible(items, index + 1, mask, size, capacity, out);
  const Rational grown = size + items[index].size;
  if (grown <= capacity) {
    collect_feasible(items, index + 1, mask | (1u << index), grown, capacity, out);
  }
}

ItemSet mask_to_set(const std::vector<Item>& items, std::uint32_t mask) {
  std::vector<Item> chosen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (mask & (1u << i)) chosen.push_back(items[i]);
  }
  return ItemSet(std::move(chosen));
}

// Canonical order on masks over id-sorted items: lexicographic on the id
// sequences. The first differing position decides; it lies in the set that
// owns the lowest bit of the symmetric difference.
bool canonical_mask_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  const std::uint32_t low = diff & (~diff + 1u);
  return (a & low) != 0;
}

struct Candidate {
  bool valid = false;
  Rational objective;
  int support = 0;
  std::uint32_t first = 0;
  std::uint32_t second = 0;  // pair supports only; first < second canonically
  Rational weight;           // probability of `first`
};

// True when b beats a: higher objective, then smaller support, then
// canonically smaller support sets.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return false;
  if (!a.valid) return true;
  if (b.objective != a.objective) return b.objective > a.objective;
  if (b.support != a.support) return b.support < a.support;
  if (b.first != a.first) return canonical_mask_less(b.first, a.first);
  return canonical_mask_less(b.second, a.second);
}

struct SetStats {
  std::uint32_t mask;
  Rational value;
  Rational delta;  // u1 - u2
};

Candidate best_singleton(const std::vector<SetStats>& zero_delta) {
  Candidate best;
  for (const SetStats& s : zero_delta) {
    Candidate cand;
    cand.valid = true;
    cand.objective = s.value;
    cand.support = 1;
    cand.first = s.mask;
    cand.weight = Rational(1);
    if (better(best, cand)) best = cand;
  }
  return best;
}

Candidate pair_candidate(const SetStats& pos, const SetStats& neg) {
  Candidate cand;
  cand.valid = true;
  const Rational span = pos.delta - neg.delta;  // > 0
  cand.weight = -neg.delta / span;
  cand.objective = (pos.delta * neg.value - neg.delta * pos.value) / span;
  cand.support = 2;
  if (canonical_mask_less(pos.mask, neg.mask)) {
    cand.first = pos.mask;
    cand.second = neg.mask;
  } else {
    // Keep the stored weight attached to `first`.
    cand.first = neg.mask;
    cand.second = pos.mask;
    cand.weight = Rational(1) - cand.weight;
  }
  return cand;
}

struct Tableau {
  std::vector<Item> pool;
  std::vector<SetStats> zero;
  std::vector<SetStats> pos;
  std::vector<SetStats> neg;
};

Tableau build_tableau(const ProgramInstance& program, const ProgramLimits& limits) {
  if (program.capacity.sign() <= 0) throw std::invalid_argument("program: capacity must be positive");
  const ItemSet pool_set = program.x1.union_with(program.x2);
  if (static_cast<int>(pool_set.size()) > limits.max_items) {
    throw std::invalid_argument("program: pool exceeds " + std::to_string(limits.max_items) +
                                " items");
  }
  Tableau t;
  t.pool = pool_set.items();
  std::vector<std::uint32_t> masks;
  collect_feasible(t.pool, 0, 0, Rational(0), program.capacity, masks);
  std::uint32_t m1 = 0;
  std::uint32_t m2 = 0;
  for (std::size_t i = 0; i < t.pool.size(); ++i) {
    if (program.x1.contains(t.pool[i].id)) m1 |= (1u << i);
    if (program.x2.contains(t.pool[i].id)) m2 |= (1u << i);
  }
  for (std::uint32_t mask : masks) {
    SetStats s;
    s.mask = mask;
    Rational u1;
    Rational u2;
    for (std::size_t i = 0; i < t.pool.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      s.value += t.pool[i].value;
      if (m1 & (1u << i)) u1 += t.pool[i].value;
      if (m2 & (1u << i)) u2 += t.pool[i].value;
    }
    s.delta = u1 - u2;
    const int sign = s.delta.sign();
    if (sign == 0) {
      t.zero.push_back(s);
    } else if (sign > 0) {
      t.pos.push_back(s);
    } else {
      t.neg.push_back(s);
    }
  }
  return t;
}

ProgramSolution finish(const Tableau& t, const Candidate& best) {
  ProgramSolution solution;
  solution.objective = best.objective;
  if (best.support == 1) {
    solution.distribution = OutcomeDistribution::deterministic(mask_to_set(t.pool, best.first));
  } else {
    std::vector<std::pair<ItemSet, Rational>> atoms;
    atoms.emplace_back(mask_to_set(t.pool, best.first), best.weight);
    atoms.emplace_back(mask_to_set(t.pool, best.second), Rational(1) - best.weight);
    solution.distribution = OutcomeDistribution::make(std::move(atoms));
  }
  return solution;
}

}  // namespace

std::vector<ItemSet> enumerate_feasible_sets(const ItemSet& pool, const Rational& capacity,
                                             const ProgramLimits& limits) {
  if (static_cast<int>(pool.size()) > limits.max_items) {
    throw std::invalid_argument("enumerate_feasible_sets: pool exceeds " +
                                std::to_string(limits.max_items) + " items");
  }
  std::vector<std::uint32_t> masks;
  collect_feasible(pool.items(), 0, 0, Rational(0), capacity, masks);
  std::sort(masks.begin(), masks.end(), canonical_mask_less);
  std::vector<ItemSet> sets;
  sets.reserve(masks.size());
  for (std::uint32_t mask : masks) sets.push_back(mask_to_set(pool.items(), mask));
  return sets;
}

ProgramSolution solve_program_serial(const ProgramInstance& program, const ProgramLimits& limits) {
  const Tableau t = build_tableau(program, limits);
  Candidate best = best_singleton(t.zero);
  for (const SetStats& pos : t.pos) {
    for (const SetStats& neg : t.neg) {
      const Candidate cand = pair_candidate(pos, neg);
      if (better(best, cand)) best = cand;
    }
  }
  return finish(t, best);
}

ProgramSolution solve_program(const ProgramInstance& program, const ProgramLimits& limits) {
  const Tableau t = build_tableau(program, limits);
  Candidate best = best_singleton(t.zero);
  const std::int64_t n_pos = static_cast<std::int64_t>(t.pos.size());
#ifdef _OPENMP
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n_pos; ++i) {
      for (const SetStats& neg : t.neg) {
        const Candidate cand = pair_candidate(t.pos[i], neg);
        if (better(local, cand)) local = cand;
      }
    }
#pragma omp critical
    {
      // The comparator is a strict total order on candidates, so the merged
      // result does not depend on thread scheduling.
      if (better(best, local)) best = local;
    }
  }
#else
  for (std::int64_t i = 0; i < n_pos; ++i) {
    for (const SetStats& neg : t.neg) {
      const Candidate cand = pair_candidate(t.pos[i], neg);
      if (better(best, cand)) best = cand;
    }
  }
#endif
  return finish(t, best);
}

ProgramInstance reduce_knapsack_to_program(const ItemSet& items, const Rational& k) {
  const Rational half(1, 2);
  if (k.sign() <= 0) throw std::invalid_argument("reduction: target k must be positive");
  std::vector<Item> owned;
  for (Item item : items.items()) {
    if (item.size.sign() <= 0 || item.size > half) {
      throw std::invalid_argument("reduction: item sizes must lie in (0, 1/2]");
    }
    if (item.value.sign() < 0) throw std::invalid_argument("reduction: negative item value");
    item.owner = 1;
    owned.push_back(std::move(item));
  }
  std::string aux_id = "~aux";
  while (items.contains(aux_id)) aux_id += "x";
  ProgramInstance program;
  program.x1 = ItemSet(std::move(owned));
  program.x2 = ItemSet({Item{aux_id, 2, k, half}});
  program.capacity = Rational(1);
  return program;
}

ReductionCheck run_reduction(const ItemSet& items, const Rational& k, const ProgramLimits& limits) {
  ReductionCheck check;
  check.program = reduce_knapsack_to_program(items, k);
  check.program_objective = solve_program(check.program, limits).objective;
  check.knapsack_opt = opt_knapsack(items, Rational(1, 2)).value;
  check.opt_at_least_k = check.knapsack_opt >= k;
  check.objective_is_2k = check.program_objective == Rational(2) * k;
  check.agree = check.opt_at_least_k == check.objective_is_2k;
  return check;
}

}  // namespace knapmech
