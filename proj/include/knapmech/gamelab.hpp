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

#ifndef KNAPMECH_GAMELAB_HPP_
#define KNAPMECH_GAMELAB_HPP_

#include <optional>
#include <string>
#include <vector>

#include "knapmech/mechanisms.hpp"
#include "knapmech/model.hpp"

namespace knapmech {

// Agent ids in this header are 1-based, matching item owner fields.

// Controls the report space searched for overstating and full agents. A
// fabricated item takes its value from the instance's values plus one value
// above the maximum, and its size from the instance's sizes plus the
// leftover capacity against the agent's true load and the full capacity.
struct PoolConfig {
  int max_fake_items = 2;
  std::optional<std::vector<Rational>> fake_values;  // overrides the value pool
  std::optional<std::vector<Rational>> fake_sizes;   // overrides the size pool
};

struct DeviationSet {
  std::vector<ItemSet> reports;  // includes the truthful report
  // True when `reports` covers the agent's entire report space, which holds
  // for honest and understating agents. Overstating and full spaces are
  // infinite; for them the set is a refutation pool only.
  bool exhaustive = false;
};

// All reports searched for the given agent, deterministically ordered:
// subsets in ascending bit order over the id-sorted true set, then (for
// overstating and full agents) fabricated extensions in pool order.
DeviationSet enumerate_deviations(const Instance& instance, int agent,
                                  const PoolConfig& pool = {});

// An approximation ratio; `finite` is false when the mechanism's expected
// welfare is zero but the optimum is positive.
struct RatioValue {
  bool finite = true;
  Rational value;
  std::string str() const { return finite ? value.str() : "inf"; }
};

// opt / welfare, with ratio 1 when opt is zero and infinity when only the
// welfare is zero.
RatioValue ratio_of(const Rational& opt, const Rational& welfare);

// Ratio of the optimal welfare to the mechanism's expected welfare under
// truthful reports.
RatioValue approx_ratio(const SetMechanism& mechanism, const Instance& instance);

struct AuditWitness {
  int agent = 0;
  ItemSet deviation;
  Rational truthful_utility;
  Rational deviating_utility;
  Rational gain;  // deviating - truthful, positive for violations
};

struct AuditVerdict {
  bool violation = false;
  // True when every manipulative agent's full report space was searched, so
  // a clean audit certifies strategyproofness on this instance. False when
  // any agent's space was only sampled (fabrication models).
  bool exhaustive = false;
  long deviations_checked = 0;
  std::optional<AuditWitness> witness;  // the maximum-gain deviation found
};

// One-shot strategyproofness audit: replays the mechanism against every
// enumerated unilateral deviation and reports the most profitable one.
// Ties on gain go to the smaller agent id, then to the earlier deviation in
// enumeration order. Deviation replays run in parallel.
AuditVerdict audit_strategyproofness(const SetMechanism& mechanism, const Instance& instance,
                                     const PoolConfig& pool = {});
// Single-threaded reference with identical output.
AuditVerdict audit_strategyproofness_serial(const SetMechanism& mechanism,
                                            const Instance& instance,
                                            const PoolConfig& pool = {});

enum class HalfGreedyBranch { kMaxValue, kGreedy };

std::string to_string(HalfGreedyBranch branch);

struct FakeImpactWitness {
  int affected_agent = 0;
  HalfGreedyBranch branch = HalfGreedyBranch::kMaxValue;
  ItemSet with_fakes;     // the affected agent's true items selected
  ItemSet without_fakes;  // same, after stripping fakes from the report
};

// Checks whether the fabricated part of `report` (items outside agent's
// true set) changes which true items of other agents get selected by
// half-greedy, against the same report with fakes stripped. Branches are
// inspected max-value first, then greedy; agents in increasing id order.
std::optional<FakeImpactWitness> fake_impact_witness(const Instance& instance, int agent,
                                                     const ItemSet& report);

struct NashLimits {
  long max_profiles = 1000000;
};

struct NashEquilibrium {
  ReportProfile profile;
  Rational welfare;
  RatioValue ratio;
};

struct NashReport {
  std::vector<NashEquilibrium> equilibria;  // ascending profile order
  Rational opt_welfare;
  std::optional<RatioValue> worst_ratio;  // empty when no equilibria found
  bool truthful_is_equilibrium = false;
  bool exhaustive = false;  // all strategy spaces fully enumerated
  long profiles_checked = 0;
};

// Enumerates pure-strategy profiles over each agent's deviation set and
// reports every profile where no unilateral deviation (within that set)
// gains. Mechanism runs are cached per profile and run in parallel.
NashReport enumerate_pure_nash(const SetMechanism& mechanism, const Instance& instance,
                               const PoolConfig& pool = {}, const NashLimits& limits = {});
NashReport enumerate_pure_nash_serial(const SetMechanism& mechanism, const Instance& instance,
                                      const PoolConfig& pool = {}, const NashLimits& limits = {});

// True when the agent has a report that is a best response against every
// profile of the other agents' deviation sets.
bool has_dominant_strategy(const SetMechanism& mechanism, const Instance& instance, int agent,
                           const PoolConfig& pool = {}, const NashLimits& limits = {});

struct KqusAuditConfig {
  int grid_denominator = 20;  // deviation sizes k/D for k = 1..D
};

struct KqusAuditWitness {
  int agent = 0;
  Rational reported_size;
  Rational truthful_utility;
  Rational deviating_utility;
  Rational gain;
};

struct KqusAuditVerdict {
  bool violation = false;
  long deviations_checked = 0;
  std::optional<KqusAuditWitness> witness;
};

// Grid audit for the known-quality-unknown-size mechanisms (next and
// modified-half-greedy). Size reports are infinite, so this is refutation
// only, never a proof.
KqusAuditVerdict audit_kqus(MechanismKind kind, const KqusInstance& instance,
                            const KqusAuditConfig& config = {});

}  // namespace knapmech

#endif  // KNAPMECH_GAMELAB_HPP_
