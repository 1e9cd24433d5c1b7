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

#include "knapmech/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace knapmech {

namespace {

std::vector<Item> priority_sorted_union(const ReportProfile& reports) {
  std::vector<Item> items = profile_union(reports).items();
  std::sort(items.begin(), items.end(), PriorityLess{});
  return items;
}

// Index of the first item in priority order whose prefix-inclusive size
// exceeds the capacity, or -1 when the whole pool fits. Every item after
// that index also fails to fit on top of its own prefix.
int blocking_index(const std::vector<Item>& items, const Rational& capacity) {
  Rational used;
  for (std::size_t i = 0; i < items.size(); ++i) {
    used += items[i].size;
    if (used > capacity) return static_cast<int>(i);
  }
  return -1;
}

void require_two_agents(const ReportProfile& reports, const char* name) {
  if (reports.size() != 2) {
    throw std::invalid_argument(std::string(name) + ": exactly two agents required");
  }
}

}  // namespace

ItemSet run_greedy(const ReportProfile& reports, const Rational& capacity) {
  const std::vector<Item> items = priority_sorted_union(reports);
  const int stop = blocking_index(items, capacity);
  if (stop < 0) return ItemSet(items);
  return ItemSet(std::vector<Item>(items.begin(), items.begin() + stop));
}

ItemSet run_max_value(const ReportProfile& reports, const Rational& capacity) {
  const ItemSet all = profile_union(reports);
  const Item* best = nullptr;
  for (const Item& item : all.items()) {  // id order, so ties keep the smaller id
    if (item.size > capacity) continue;
    if (best == nullptr || item.value > best->value) best = &item;
  }
  if (best == nullptr) return ItemSet();
  return ItemSet({*best});
}

OutcomeDistribution run_half_greedy(const ReportProfile& reports, const Rational& capacity) {
  const Rational half(1, 2);
  return OutcomeDistribution::make(
      {{run_greedy(reports, capacity), half}, {run_max_value(reports, capacity), half}});
}

ItemSet run_bad_greedy(const ReportProfile& reports, const Rational& capacity) {
  const std::vector<Item> items = priority_sorted_union(reports);
  std::vector<Item> chosen;
  Rational used;
  for (const Item& item : items) {
    if (used + item.size <= capacity) {
      chosen.push_back(item);
      used += item.size;
    }
  }
  return ItemSet(std::move(chosen));
}

OutcomeDistribution run_equal_utility(const ReportProfile& reports, const Rational& capacity,
                                      const Rational& alpha, const ProgramLimits& limits) {
  require_two_agents(reports, "equal-utility");
  if (alpha < Rational(1) || alpha >= Rational(2)) {
    throw std::invalid_argument("equal-utility: alpha must lie in [1, 2)");
  }
  const OptResult z1 = opt_knapsack(reports[0], capacity);
  const OptResult z2 = opt_knapsack(reports[1], capacity);
  const Rational both = z1.value + z2.value;
  // v(z_i) >= (1/alpha) * (v(z_1) + v(z_2)), scaled by alpha. Agent 1 is
  // checked first, which also settles the all-zero tie in its favor.
  if (alpha * z1.value >= both) return OutcomeDistribution::deterministic(z1.chosen);
  if (alpha * z2.value >= both) return OutcomeDistribution::deterministic(z2.chosen);
  ProgramInstance program;
  program.x1 = reports[0];
  program.x2 = reports[1];
  program.capacity = capacity;
  return solve_program(program, limits).distribution;
}

namespace {

struct PacifyCandidate {
  bool valid = false;
  Rational inter_value;  // value of the intersection with report 1
  Rational value;
  Rational size;
  std::vector<std::string> ids;
};

bool pacify_improves(const PacifyCandidate& best, const PacifyCandidate& cand) {
  if (!best.valid) return true;
  if (cand.inter_value != best.inter_value) return cand.inter_value > best.inter_value;
  if (cand.value != best.value) return cand.value > best.value;
  if (cand.size != best.size) return cand.size < best.size;
  return std::lexicographical_compare(cand.ids.begin(), cand.ids.end(), best.ids.begin(),
                                      best.ids.end());
}

struct PacifySearch {
  const std::vector<Item>* items;  // id order
  const ItemSet* report1;
  Rational capacity;
  Rational threshold;  // qualify only with value strictly above this
  std::vector<Rational> suffix_value;
  std::vector<bool> taken;
  PacifyCandidate best;
};

void pacify_dfs(PacifySearch& s, std::size_t index, const Rational& value,
                const Rational& inter_value, const Rational& size) {
  if (value + s.suffix_value[index] <= s.threshold) return;  // cannot qualify
  if (index == s.items->size()) {
    PacifyCandidate cand;
    cand.valid = true;
    cand.inter_value = inter_value;
    cand.value = value;
    cand.size = size;
    for (std::size_t i = 0; i < s.items->size(); ++i) {
      if (s.taken[i]) cand.ids.push_back((*s.items)[i].id);
    }
    if (pacify_improves(s.best, cand)) s.best = std::move(cand);
    return;
  }
  const Item& item = (*s.items)[index];
  if (size + item.size <= s.capacity) {
    s.taken[index] = true;
    const bool in_r1 = s.report1->contains(item.id);
    pacify_dfs(s, index + 1, value + item.value, in_r1 ? inter_value + item.value : inter_value,
               size + item.size);
    s.taken[index] = false;
  }
  pacify_dfs(s, index + 1, value, inter_value, size);
}

}  // namespace

ItemSet run_pacify_the_liar(const ReportProfile& reports, const Rational& capacity,
                            const Rational& alpha, const PacifyLimits& limits) {
  if (reports.size() < 2) {
    throw std::invalid_argument("pacify-the-liar: at least two agents required");
  }
  if (alpha < Rational(1)) throw std::invalid_argument("pacify-the-liar: alpha must be >= 1");
  const OptResult z1 = opt_knapsack(reports[0], capacity);
  ItemSet others;
  for (std::size_t i = 1; i < reports.size(); ++i) others = others.union_with(reports[i]);
  const OptResult z2 = opt_knapsack(others, capacity);
  // Option 1: agent 1's solo optimum already carries a 1/alpha share.
  if (alpha * z1.value >= z1.value + z2.value) return z1.chosen;
  const ItemSet pool = reports[0].union_with(others);
  const OptResult joint = opt_knapsack(pool, capacity);
  // Option 2: agent 2's solo optimum is within alpha of the joint optimum.
  if (alpha * z2.value >= joint.value) return z2.chosen;
  // Option 3: exhaustive search over qualifying sets. The joint optimum
  // qualifies (option 2 failed), so a candidate always exists.
  if (static_cast<int>(pool.size()) > limits.max_items) {
    throw std::invalid_argument("pacify-the-liar: pool exceeds " +
                                std::to_string(limits.max_items) + " items");
  }
  PacifySearch search;
  const std::vector<Item>& items = pool.items();
  search.items = &items;
  search.report1 = &reports[0];
  search.capacity = capacity;
  search.threshold = alpha * z2.value;
  search.suffix_value.assign(items.size() + 1, Rational(0));
  for (std::size_t i = items.size(); i > 0; --i) {
    search.suffix_value[i - 1] = search.suffix_value[i] + items[i - 1].value;
  }
  search.taken.assign(items.size(), false);
  pacify_dfs(search, 0, Rational(0), Rational(0), Rational(0));
  if (!search.best.valid) throw std::logic_error("pacify-the-liar: no qualifying set");
  std::vector<Item> chosen;
  for (const std::string& id : search.best.ids) chosen.push_back(*pool.find(id));
  return ItemSet(std::move(chosen));
}

ValidationResult validate_kqus(const KqusInstance& instance) {
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    const KqusAgent& agent = instance.agents[i];
    if (agent.ratio.sign() < 0) {
      return {false, static_cast<int>(i) + 1, "kqus ratio must be nonnegative"};
    }
    if (agent.size.sign() <= 0 || agent.size > Rational(1)) {
      return {false, static_cast<int>(i) + 1, "kqus size must lie in (0, 1]"};
    }
  }
  return {};
}

std::string kqus_item_id(int agent) { return "a" + std::to_string(agent + 1); }

ReportProfile kqus_reports(const KqusInstance& instance, const std::vector<Rational>& sizes) {
  if (sizes.size() != instance.agents.size()) {
    throw std::invalid_argument("kqus: one reported size per agent required");
  }
  ReportProfile profile;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i].sign() <= 0 || sizes[i] > Rational(1)) {
      throw std::invalid_argument("kqus: reported size must lie in (0, 1]");
    }
    Item item;
    item.id = kqus_item_id(static_cast<int>(i));
    item.owner = static_cast<int>(i) + 1;
    item.size = sizes[i];
    item.value = instance.agents[i].ratio * sizes[i];
    profile.push_back(ItemSet({std::move(item)}));
  }
  return profile;
}

ItemSet run_next(const ReportProfile& reports, const Rational& capacity) {
  const std::vector<Item> items = priority_sorted_union(reports);
  const int stop = blocking_index(items, capacity);
  if (stop < 0) return ItemSet();
  return ItemSet({items[stop]});
}

OutcomeDistribution run_modified_half_greedy(const ReportProfile& reports,
                                             const Rational& capacity) {
  const Rational half(1, 2);
  return OutcomeDistribution::make(
      {{run_greedy(reports, capacity), half}, {run_next(reports, capacity), half}});
}

Rational kqus_expected_utility(const KqusInstance& instance, int agent,
                               const OutcomeDistribution& dist) {
  const KqusAgent& a = instance.agents.at(agent);
  return dist.selection_probability(kqus_item_id(agent)) * a.ratio * a.size;
}

Rational kqus_expected_welfare(const KqusInstance& instance, const OutcomeDistribution& dist) {
  Rational sum;
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    sum += kqus_expected_utility(instance, static_cast<int>(i), dist);
  }
  return sum;
}

Rational kqus_opt_value(const KqusInstance& instance) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    Item item;
    item.id = kqus_item_id(static_cast<int>(i));
    item.owner = static_cast<int>(i) + 1;
    item.size = instance.agents[i].size;
    item.value = instance.agents[i].ratio * instance.agents[i].size;
    items.push_back(std::move(item));
  }
  return opt_knapsack(ItemSet(std::move(items)), Rational(1)).value;
}

MechanismId MechanismId::of(MechanismKind kind) {
  MechanismId id;
  id.kind = kind;
  if (kind == MechanismKind::kEqualUtility) id.alpha = alpha_equal_utility();
  if (kind == MechanismKind::kPacifyTheLiar) id.alpha = alpha_pacify();
  return id;
}

MechanismId MechanismId::of(MechanismKind kind, const Rational& alpha) {
  if (kind == MechanismKind::kEqualUtility) {
    if (alpha < Rational(1) || alpha >= Rational(2)) {
      throw std::invalid_argument("equal-utility: alpha must lie in [1, 2)");
    }
  } else if (kind == MechanismKind::kPacifyTheLiar) {
    if (alpha < Rational(1)) {
      throw std::invalid_argument("pacify-the-liar: alpha must be >= 1");
    }
  } else {
    throw std::invalid_argument("mechanism '" + to_string(kind) + "' takes no alpha");
  }
  MechanismId id;
  id.kind = kind;
  id.alpha = alpha;
  return id;
}

std::string to_string(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kGreedy: return "greedy";
    case MechanismKind::kMaxValue: return "max-value";
    case MechanismKind::kHalfGreedy: return "half-greedy";
    case MechanismKind::kBadGreedy: return "bad-greedy";
    case MechanismKind::kEqualUtility: return "equal-utility";
    case MechanismKind::kPacifyTheLiar: return "pacify-the-liar";
    case MechanismKind::kNext: return "next";
    case MechanismKind::kModifiedHalfGreedy: return "modified-half-greedy";
    case MechanismKind::kOptimal: return "optimal";
  }
  throw std::logic_error("unknown mechanism kind");
}

std::optional<MechanismKind> mechanism_kind_from_string(std::string_view name) {
  if (name == "greedy") return MechanismKind::kGreedy;
  if (name == "max-value") return MechanismKind::kMaxValue;
  if (name == "half-greedy") return MechanismKind::kHalfGreedy;
  if (name == "bad-greedy") return MechanismKind::kBadGreedy;
  if (name == "equal-utility") return MechanismKind::kEqualUtility;
  if (name == "pacify-the-liar") return MechanismKind::kPacifyTheLiar;
  if (name == "next") return MechanismKind::kNext;
  if (name == "modified-half-greedy") return MechanismKind::kModifiedHalfGreedy;
  if (name == "optimal") return MechanismKind::kOptimal;
  return std::nullopt;
}

bool is_kqus_mechanism(MechanismKind kind) {
  return kind == MechanismKind::kNext || kind == MechanismKind::kModifiedHalfGreedy;
}

SetMechanism make_mechanism(const MechanismId& id) {
  switch (id.kind) {
    case MechanismKind::kGreedy:
      return [](const ReportProfile& r, const Rational& c) {
        return OutcomeDistribution::deterministic(run_greedy(r, c));
      };
    case MechanismKind::kMaxValue:
      return [](const ReportProfile& r, const Rational& c) {
        return OutcomeDistribution::deterministic(run_max_value(r, c));
      };
    case MechanismKind::kHalfGreedy:
      return [](const ReportProfile& r, const Rational& c) { return run_half_greedy(r, c); };
    case MechanismKind::kBadGreedy:
      return [](const ReportProfile& r, const Rational& c) {
        return OutcomeDistribution::deterministic(run_bad_greedy(r, c));
      };
    case MechanismKind::kEqualUtility:
      return [alpha = id.alpha](const ReportProfile& r, const Rational& c) {
        return run_equal_utility(r, c, alpha);
      };
    case MechanismKind::kPacifyTheLiar:
      return [alpha = id.alpha](const ReportProfile& r, const Rational& c) {
        return OutcomeDistribution::deterministic(run_pacify_the_liar(r, c, alpha));
      };
    case MechanismKind::kOptimal:
      return [](const ReportProfile& r, const Rational& c) {
        return OutcomeDistribution::deterministic(opt_knapsack(profile_union(r), c).chosen);
      };
    case MechanismKind::kNext:
    case MechanismKind::kModifiedHalfGreedy:
      throw std::invalid_argument("mechanism '" + to_string(id.kind) +
                                  "' acts on kqus instances");
  }
  throw std::logic_error("unknown mechanism kind");
}

KqusMechanism make_kqus_mechanism(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kNext:
      return [](const KqusInstance& instance, const std::vector<Rational>& sizes) {
        return OutcomeDistribution::deterministic(
            run_next(kqus_reports(instance, sizes), Rational(1)));
      };
    case MechanismKind::kModifiedHalfGreedy:
      return [](const KqusInstance& instance, const std::vector<Rational>& sizes) {
        return run_modified_half_greedy(kqus_reports(instance, sizes), Rational(1));
      };
    default:
      throw std::invalid_argument("mechanism '" + to_string(kind) + "' acts on item sets");
  }
}

}  // namespace knapmech
