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

#include "knapmech/gamelab.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "knapmech/knapsack.hpp"

namespace knapmech {

namespace {

constexpr int kMaxSubsetItems = 20;

void require_valid(const Instance& instance) {
  const ValidationResult check = validate_instance(instance);
  if (!check.ok) throw std::invalid_argument("invalid instance: " + check.message);
}

std::vector<ItemSet> subsets_of(const ItemSet& set) {
  const std::vector<Item>& items = set.items();
  if (items.size() > kMaxSubsetItems) {
    throw std::invalid_argument("deviation space too large: more than " +
                                std::to_string(kMaxSubsetItems) + " items");
  }
  std::vector<ItemSet> subsets;
  const std::uint32_t total = 1u << items.size();
  subsets.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Item> chosen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(items[i]);
    }
    subsets.push_back(ItemSet(std::move(chosen)));
  }
  return subsets;
}

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Rational> fake_value_pool(const Instance& instance, const PoolConfig& pool) {
  if (pool.fake_values) return sorted_unique(*pool.fake_values);
  std::vector<Rational> values;
  Rational max_value;
  for (const ItemSet& set : instance.true_sets) {
    for (const Item& item : set.items()) {
      values.push_back(item.value);
      max_value = std::max(max_value, item.value);
    }
  }
  values.push_back(max_value + Rational(1));
  return sorted_unique(values);
}

std::vector<Rational> fake_size_pool(const Instance& instance, int agent,
                                     const PoolConfig& pool) {
  std::vector<Rational> sizes;
  if (pool.fake_sizes) {
    sizes = *pool.fake_sizes;
  } else {
    for (const ItemSet& set : instance.true_sets) {
      for (const Item& item : set.items()) sizes.push_back(item.size);
    }
    sizes.push_back(instance.capacity - instance.true_sets[agent - 1].total_size());
    sizes.push_back(instance.capacity);
  }
  std::vector<Rational> legal;
  for (const Rational& size : sizes) {
    if (size.sign() > 0 && size <= instance.capacity) legal.push_back(size);
  }
  return sorted_unique(legal);
}

// Fake attribute choices: all (value, size) pairs in ascending order.
std::vector<std::pair<Rational, Rational>> fake_attributes(const Instance& instance, int agent,
                                                           const PoolConfig& pool) {
  std::vector<std::pair<Rational, Rational>> attrs;
  for (const Rational& value : fake_value_pool(instance, pool)) {
    for (const Rational& size : fake_size_pool(instance, agent, pool)) {
      attrs.emplace_back(value, size);
    }
  }
  return attrs;
}

std::string fresh_fake_id(const Instance& instance, int ordinal) {
  std::string id = "~f" + std::to_string(ordinal);
  const ItemSet all = instance.union_all();
  while (all.contains(id)) id += "x";
  return id;
}

// Multisets of up to max_fakes attribute pairs, smallest count first, then
// lexicographic on pair indices (non-decreasing index sequences).
std::vector<std::vector<int>> fake_index_combos(int pool_size, int max_fakes) {
  std::vector<std::vector<int>> combos;
  combos.push_back({});
  std::vector<std::vector<int>> frontier = {{}};
  for (int k = 1; k <= max_fakes; ++k) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& combo : frontier) {
      const int start = combo.empty() ? 0 : combo.back();
      for (int idx = start; idx < pool_size; ++idx) {
        std::vector<int> grown = combo;
        grown.push_back(idx);
        next.push_back(grown);
      }
    }
    combos.insert(combos.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return combos;
}

ItemSet with_fakes(const Instance& instance, int agent, const ItemSet& base,
                   const std::vector<std::pair<Rational, Rational>>& attrs,
                   const std::vector<int>& combo) {
  std::vector<Item> items = base.items();
  for (std::size_t t = 0; t < combo.size(); ++t) {
    Item fake;
    fake.id = fresh_fake_id(instance, static_cast<int>(t) + 1);
    fake.owner = agent;
    fake.value = attrs[combo[t]].first;
    fake.size = attrs[combo[t]].second;
    items.push_back(std::move(fake));
  }
  return ItemSet(std::move(items));
}

}  // namespace

DeviationSet enumerate_deviations(const Instance& instance, int agent, const PoolConfig& pool) {
  require_valid(instance);
  if (agent < 1 || agent > instance.agents()) {
    throw std::invalid_argument("enumerate_deviations: no agent " + std::to_string(agent));
  }
  const ItemSet& truth = instance.true_sets[agent - 1];
  DeviationSet result;
  switch (instance.models[agent - 1]) {
    case ReportModel::kHonest:
      result.reports = {truth};
      result.exhaustive = true;
      break;
    case ReportModel::kUnderstating:
      result.reports = subsets_of(truth);
      result.exhaustive = true;
      break;
    case ReportModel::kOverstating: {
      const auto attrs = fake_attributes(instance, agent, pool);
      for (const std::vector<int>& combo :
           fake_index_combos(static_cast<int>(attrs.size()), pool.max_fake_items)) {
        result.reports.push_back(with_fakes(instance, agent, truth, attrs, combo));
      }
      result.exhaustive = false;
      break;
    }
    case ReportModel::kFull: {
      const auto attrs = fake_attributes(instance, agent, pool);
      const auto combos = fake_index_combos(static_cast<int>(attrs.size()), pool.max_fake_items);
      for (const ItemSet& subset : subsets_of(truth)) {
        for (const std::vector<int>& combo : combos) {
          result.reports.push_back(with_fakes(instance, agent, subset, attrs, combo));
        }
      }
      result.exhaustive = false;
      break;
    }
  }
  return result;
}

RatioValue ratio_of(const Rational& opt, const Rational& welfare) {
  if (opt.is_zero()) return {true, Rational(1)};
  if (welfare.is_zero()) return {false, Rational(0)};
  return {true, opt / welfare};
}

RatioValue approx_ratio(const SetMechanism& mechanism, const Instance& instance) {
  require_valid(instance);
  const Rational opt = opt_knapsack(instance.union_all(), instance.capacity).value;
  if (opt.is_zero()) throw std::invalid_argument("approx_ratio: optimal welfare is zero");
  const OutcomeDistribution dist = mechanism(instance.truthful_reports(), instance.capacity);
  return ratio_of(opt, expected_welfare(instance, dist));
}

namespace {

AuditVerdict audit_impl(const SetMechanism& mechanism, const Instance& instance,
                        const PoolConfig& pool, bool parallel) {
  require_valid(instance);
  const ReportProfile truth = instance.truthful_reports();
  const OutcomeDistribution truthful_dist = mechanism(truth, instance.capacity);

  struct Flat {
    int agent;
    ItemSet report;
    Rational truthful_utility;
  };
  std::vector<Flat> flat;
  AuditVerdict verdict;
  verdict.exhaustive = true;
  for (int agent = 1; agent <= instance.agents(); ++agent) {
    if (instance.models[agent - 1] == ReportModel::kHonest) continue;
    DeviationSet deviations = enumerate_deviations(instance, agent, pool);
    verdict.exhaustive = verdict.exhaustive && deviations.exhaustive;
    const Rational truthful_utility =
        expected_utility(instance.true_sets[agent - 1], truthful_dist);
    for (ItemSet& report : deviations.reports) {
      flat.push_back({agent, std::move(report), truthful_utility});
    }
  }
  verdict.deviations_checked = static_cast<long>(flat.size());

  std::vector<Rational> utilities(flat.size());
  const std::int64_t count = static_cast<std::int64_t>(flat.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t k = 0; k < count; ++k) {
    ReportProfile profile = truth;
    profile[flat[k].agent - 1] = flat[k].report;
    const OutcomeDistribution dist = mechanism(profile, instance.capacity);
    utilities[k] = expected_utility(instance.true_sets[flat[k].agent - 1], dist);
  }
  (void)parallel;

  // Deterministic argmax in enumeration order: agents ascending, then each
  // agent's deviations in their listed order.
  std::int64_t best = -1;
  Rational best_gain;
  for (std::int64_t k = 0; k < count; ++k) {
    const Rational gain = utilities[k] - flat[k].truthful_utility;
    if (best < 0 || gain > best_gain) {
      best = k;
      best_gain = gain;
    }
  }
  if (best >= 0 && best_gain.sign() > 0) {
    verdict.violation = true;
    AuditWitness witness;
    witness.agent = flat[best].agent;
    witness.deviation = flat[best].report;
    witness.truthful_utility = flat[best].truthful_utility;
    witness.deviating_utility = utilities[best];
    witness.gain = best_gain;
    verdict.witness = std::move(witness);
  }
  return verdict;
}

}  // namespace

AuditVerdict audit_strategyproofness(const SetMechanism& mechanism, const Instance& instance,
                                     const PoolConfig& pool) {
  return audit_impl(mechanism, instance, pool, true);
}

AuditVerdict audit_strategyproofness_serial(const SetMechanism& mechanism,
                                            const Instance& instance, const PoolConfig& pool) {
  return audit_impl(mechanism, instance, pool, false);
}

std::string to_string(HalfGreedyBranch branch) {
  return branch == HalfGreedyBranch::kMaxValue ? "max-value" : "greedy";
}

std::optional<FakeImpactWitness> fake_impact_witness(const Instance& instance, int agent,
                                                     const ItemSet& report) {
  require_valid(instance);
  if (agent < 1 || agent > instance.agents()) {
    throw std::invalid_argument("fake_impact_witness: no agent " + std::to_string(agent));
  }
  const ItemSet stripped = report.intersect(instance.true_sets[agent - 1]);
  ReportProfile with = instance.truthful_reports();
  with[agent - 1] = report;
  ReportProfile without = instance.truthful_reports();
  without[agent - 1] = stripped;

  const ItemSet mv_with = run_max_value(with, instance.capacity);
  const ItemSet mv_without = run_max_value(without, instance.capacity);
  const ItemSet gr_with = run_greedy(with, instance.capacity);
  const ItemSet gr_without = run_greedy(without, instance.capacity);

  for (const HalfGreedyBranch branch : {HalfGreedyBranch::kMaxValue, HalfGreedyBranch::kGreedy}) {
    const ItemSet& sel_with = branch == HalfGreedyBranch::kMaxValue ? mv_with : gr_with;
    const ItemSet& sel_without = branch == HalfGreedyBranch::kMaxValue ? mv_without : gr_without;
    for (int j = 1; j <= instance.agents(); ++j) {
      if (j == agent) continue;
      const ItemSet mine_with = instance.true_sets[j - 1].intersect(sel_with);
      const ItemSet mine_without = instance.true_sets[j - 1].intersect(sel_without);
      if (mine_with != mine_without) {
        return FakeImpactWitness{j, branch, mine_with, mine_without};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct StrategySpace {
  std::vector<std::vector<ItemSet>> choices;  // per agent
  std::vector<long> strides;
  long profiles = 0;
  bool exhaustive = true;
};

StrategySpace build_space(const Instance& instance, const PoolConfig& pool,
                          const NashLimits& limits) {
  StrategySpace space;
  space.strides.assign(instance.agents(), 1);
  long total = 1;
  for (int agent = 1; agent <= instance.agents(); ++agent) {
    DeviationSet deviations = enumerate_deviations(instance, agent, pool);
    space.exhaustive = space.exhaustive && deviations.exhaustive;
    space.strides[agent - 1] = total;
    const long count = static_cast<long>(deviations.reports.size());
    if (count == 0 || total > limits.max_profiles / count) {
      throw std::invalid_argument("nash: profile space exceeds " +
                                  std::to_string(limits.max_profiles) + " profiles");
    }
    total *= count;
    space.choices.push_back(std::move(deviations.reports));
  }
  space.profiles = total;
  return space;
}

NashReport nash_impl(const SetMechanism& mechanism, const Instance& instance,
                     const PoolConfig& pool, const NashLimits& limits, bool parallel) {
  require_valid(instance);
  const StrategySpace space = build_space(instance, pool, limits);
  const int n = instance.agents();
  const long profiles = space.profiles;

  // Per-profile expected utilities (for the deviation lookups) and true
  // expected welfare.
  std::vector<std::vector<Rational>> utility(profiles, std::vector<Rational>(n));
  std::vector<Rational> welfare(profiles);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long p = 0; p < profiles; ++p) {
    ReportProfile profile;
    profile.reserve(n);
    for (int i = 0; i < n; ++i) {
      profile.push_back(space.choices[i][(p / space.strides[i]) %
                                         static_cast<long>(space.choices[i].size())]);
    }
    const OutcomeDistribution dist = mechanism(profile, instance.capacity);
    for (int i = 0; i < n; ++i) utility[p][i] = expected_utility(instance.true_sets[i], dist);
    welfare[p] = expected_welfare(instance, dist);
  }
  (void)parallel;

  std::vector<char> is_equilibrium(profiles, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long p = 0; p < profiles; ++p) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const long count = static_cast<long>(space.choices[i].size());
      const long current = (p / space.strides[i]) % count;
      const long base = p - current * space.strides[i];
      for (long c = 0; c < count; ++c) {
        if (c == current) continue;
        if (utility[base + c * space.strides[i]][i] > utility[p][i]) {
          stable = false;
          break;
        }
      }
    }
    is_equilibrium[p] = stable ? 1 : 0;
  }

  NashReport report;
  report.exhaustive = space.exhaustive;
  report.profiles_checked = profiles;
  report.opt_welfare = opt_knapsack(instance.union_all(), instance.capacity).value;

  // The truthful profile's index, for the truthful_is_equilibrium flag.
  long truthful_index = 0;
  bool truthful_found = true;
  for (int i = 0; i < n && truthful_found; ++i) {
    bool found = false;
    for (long c = 0; c < static_cast<long>(space.choices[i].size()); ++c) {
      if (space.choices[i][c] == instance.true_sets[i]) {
        truthful_index += c * space.strides[i];
        found = true;
        break;
      }
    }
    truthful_found = found;
  }

  for (long p = 0; p < profiles; ++p) {
    if (!is_equilibrium[p]) continue;
    NashEquilibrium eq;
    for (int i = 0; i < n; ++i) {
      eq.profile.push_back(space.choices[i][(p / space.strides[i]) %
                                            static_cast<long>(space.choices[i].size())]);
    }
    eq.welfare = welfare[p];
    eq.ratio = ratio_of(report.opt_welfare, welfare[p]);
    report.equilibria.push_back(std::move(eq));
    if (truthful_found && p == truthful_index) report.truthful_is_equilibrium = true;
  }

  for (const NashEquilibrium& eq : report.equilibria) {
    if (!report.worst_ratio) {
      report.worst_ratio = eq.ratio;
      continue;
    }
    const RatioValue& cur = *report.worst_ratio;
    if ((!eq.ratio.finite && cur.finite) ||
        (eq.ratio.finite && cur.finite && eq.ratio.value > cur.value)) {
      report.worst_ratio = eq.ratio;
    }
  }
  return report;
}

}  // namespace

NashReport enumerate_pure_nash(const SetMechanism& mechanism, const Instance& instance,
                               const PoolConfig& pool, const NashLimits& limits) {
  return nash_impl(mechanism, instance, pool, limits, true);
}

NashReport enumerate_pure_nash_serial(const SetMechanism& mechanism, const Instance& instance,
                                      const PoolConfig& pool, const NashLimits& limits) {
  return nash_impl(mechanism, instance, pool, limits, false);
}

bool has_dominant_strategy(const SetMechanism& mechanism, const Instance& instance, int agent,
                           const PoolConfig& pool, const NashLimits& limits) {
  require_valid(instance);
  if (agent < 1 || agent > instance.agents()) {
    throw std::invalid_argument("has_dominant_strategy: no agent " + std::to_string(agent));
  }
  const StrategySpace space = build_space(instance, pool, limits);
  const int n = instance.agents();
  const std::vector<ItemSet>& own = space.choices[agent - 1];
  std::vector<char> dominant(own.size(), 1);

  // Iterate over the opponents' joint choices; a strategy stays dominant
  // only if it is a best response against every one of them.
  std::vector<long> counts(n);
  long rest = 1;
  for (int i = 0; i < n; ++i) {
    counts[i] = static_cast<long>(space.choices[i].size());
    if (i != agent - 1) rest *= counts[i];
  }
  for (long opp = 0; opp < rest; ++opp) {
    ReportProfile profile(n);
    long remaining = opp;
    for (int i = 0; i < n; ++i) {
      if (i == agent - 1) continue;
      profile[i] = space.choices[i][remaining % counts[i]];
      remaining /= counts[i];
    }
    std::vector<Rational> utilities(own.size());
    Rational best;
    for (std::size_t c = 0; c < own.size(); ++c) {
      profile[agent - 1] = own[c];
      const OutcomeDistribution dist = mechanism(profile, instance.capacity);
      utilities[c] = expected_utility(instance.true_sets[agent - 1], dist);
      if (c == 0 || utilities[c] > best) best = utilities[c];
    }
    bool any = false;
    for (std::size_t c = 0; c < own.size(); ++c) {
      if (utilities[c] < best) dominant[c] = 0;
      any = any || dominant[c];
    }
    if (!any) return false;
  }
  for (char d : dominant) {
    if (d) return true;
  }
  return false;
}

KqusAuditVerdict audit_kqus(MechanismKind kind, const KqusInstance& instance,
                            const KqusAuditConfig& config) {
  const ValidationResult check = validate_kqus(instance);
  if (!check.ok) throw std::invalid_argument("invalid kqus instance: " + check.message);
  if (config.grid_denominator < 1) {
    throw std::invalid_argument("audit_kqus: grid denominator must be >= 1");
  }
  const KqusMechanism mechanism = make_kqus_mechanism(kind);
  std::vector<Rational> truth;
  for (const KqusAgent& agent : instance.agents) truth.push_back(agent.size);
  const OutcomeDistribution truthful_dist = mechanism(instance, truth);

  KqusAuditVerdict verdict;
  Rational best_gain;
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    const Rational truthful_utility =
        kqus_expected_utility(instance, static_cast<int>(i), truthful_dist);
    std::vector<Rational> reports;
    reports.push_back(truth[i]);
    for (int k = 1; k <= config.grid_denominator; ++k) {
      const Rational candidate(k, config.grid_denominator);
      if (candidate != truth[i]) reports.push_back(candidate);
    }
    for (const Rational& reported : reports) {
      std::vector<Rational> sizes = truth;
      sizes[i] = reported;
      const OutcomeDistribution dist = mechanism(instance, sizes);
      const Rational utility = kqus_expected_utility(instance, static_cast<int>(i), dist);
      const Rational gain = utility - truthful_utility;
      ++verdict.deviations_checked;
      if (!verdict.witness || gain > best_gain) {
        best_gain = gain;
        verdict.witness = KqusAuditWitness{static_cast<int>(i) + 1, reported, truthful_utility,
                                           utility, gain};
      }
    }
  }
  if (verdict.witness && best_gain.sign() > 0) {
    verdict.violation = true;
  } else {
    verdict.witness.reset();
  }
  return verdict;
}

}  // namespace knapmech
