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

#ifndef KNAPMECH_MECHANISMS_HPP_
#define KNAPMECH_MECHANISMS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knapmech/knapsack.hpp"
#include "knapmech/model.hpp"
#include "knapmech/program.hpp"

namespace knapmech {

// Threshold for the equal-utility mechanism: any rational strictly above
// (5 + 4*sqrt(2)) / 7 = 1.52203... keeps the mechanism strategyproof.
inline Rational alpha_equal_utility() { return Rational(15225, 10000); }

// Threshold for the pacify-the-liar mechanism: any rational strictly above
// the golden ratio 1.61803...
inline Rational alpha_pacify() { return Rational(1619, 1000); }

// GREEDY: scan the union of reports in value-per-size priority order and
// return the maximal prefix that fits; the scan stops at the first item
// that does not fit even if later items would.
ItemSet run_greedy(const ReportProfile& reports, const Rational& capacity);

// MAXIMUM-VALUE: the single most valuable item (ties to the smaller id).
ItemSet run_max_value(const ReportProfile& reports, const Rational& capacity);

// HALF-GREEDY: GREEDY with probability 1/2, MAXIMUM-VALUE with 1/2.
OutcomeDistribution run_half_greedy(const ReportProfile& reports, const Rational& capacity);

// BAD-GREEDY: like GREEDY but keeps scanning past items that do not fit.
// Not strategyproof; kept as a negative control.
ItemSet run_bad_greedy(const ReportProfile& reports, const Rational& capacity);

// EQUAL-UTILITY (two agents, alpha in [1, 2)): with z_i the best feasible
// subset of report i alone, hand z_i to an agent whose z-value carries at
// least a 1/alpha share of v(z_1) + v(z_2); otherwise solve the equalizing
// program on the two reports. When both z-values are zero agent 1 wins the
// tie and receives z_1.
OutcomeDistribution run_equal_utility(const ReportProfile& reports, const Rational& capacity,
                                      const Rational& alpha = alpha_equal_utility(),
                                      const ProgramLimits& limits = {});

struct PacifyLimits {
  int max_items = 20;  // option-3 exhaustive search cap
};

// PACIFY-THE-LIAR (n >= 2 agents, alpha >= 1; agent 1 is the one
// manipulator, the others are honest). With z_1 the best feasible subset
// of report 1 alone and z_2 the best feasible subset of the other reports
// combined: option 1 returns z_1 if alpha * v(z_1) >= v(z_1) + v(z_2);
// option 2 returns z_2 if alpha * v(z_2) >= v(opt of the whole union);
// option 3 returns, among feasible sets with value strictly above
// alpha * v(z_2), the one whose intersection with report 1 is most
// valuable.
ItemSet run_pacify_the_liar(const ReportProfile& reports, const Rational& capacity,
                            const Rational& alpha = alpha_pacify(),
                            const PacifyLimits& limits = {});

// Known-quality-unknown-size model: every agent owns one item whose
// value-to-size ratio is public; only the size is reported. Capacity is 1.
// An agent whose item is chosen receives its true value r_i * s_i no
// matter what size it reported.
struct KqusAgent {
  Rational ratio;  // >= 0
  Rational size;   // true size, in (0, 1]
};

struct KqusInstance {
  std::vector<KqusAgent> agents;
};

ValidationResult validate_kqus(const KqusInstance& instance);

// Item id for kqus agent i (0-based): "a1", "a2", ...
std::string kqus_item_id(int agent);

// The reports as an item profile: agent i contributes one item of size
// sizes[i] and value ratio_i * sizes[i].
ReportProfile kqus_reports(const KqusInstance& instance, const std::vector<Rational>& sizes);

// NEXT: if everything fits return the empty set, otherwise return only the
// first item that fails to fit in the greedy scan.
ItemSet run_next(const ReportProfile& reports, const Rational& capacity);

// MODIFIED-HALF-GREEDY: GREEDY with probability 1/2, NEXT with 1/2.
OutcomeDistribution run_modified_half_greedy(const ReportProfile& reports,
                                             const Rational& capacity);

// Expected true utility of kqus agent i under an outcome distribution on
// the reported items.
Rational kqus_expected_utility(const KqusInstance& instance, int agent,
                               const OutcomeDistribution& dist);
Rational kqus_expected_welfare(const KqusInstance& instance, const OutcomeDistribution& dist);
// Optimum welfare over the true items.
Rational kqus_opt_value(const KqusInstance& instance);

enum class MechanismKind {
  kGreedy,
  kMaxValue,
  kHalfGreedy,
  kBadGreedy,
  kEqualUtility,
  kPacifyTheLiar,
  kNext,
  kModifiedHalfGreedy,
  kOptimal,  // non-strategyproof benchmark: an optimal knapsack over reports
};

struct MechanismId {
  MechanismKind kind = MechanismKind::kHalfGreedy;
  Rational alpha;  // used by equal-utility and pacify-the-liar only

  static MechanismId of(MechanismKind kind);
  // Throws when alpha is outside the mechanism's legal range.
  static MechanismId of(MechanismKind kind, const Rational& alpha);
};

std::string to_string(MechanismKind kind);
std::optional<MechanismKind> mechanism_kind_from_string(std::string_view name);
// True for next and modified-half-greedy, which act on kqus instances.
bool is_kqus_mechanism(MechanismKind kind);

using SetMechanism = std::function<OutcomeDistribution(const ReportProfile&, const Rational&)>;

// Wraps a mechanism id as a distribution-valued function of the reports.
// Kqus-only kinds are rejected; use the kqus entry points instead.
SetMechanism make_mechanism(const MechanismId& id);

using KqusMechanism =
    std::function<OutcomeDistribution(const KqusInstance&, const std::vector<Rational>&)>;

KqusMechanism make_kqus_mechanism(MechanismKind kind);

}  // namespace knapmech

#endif  // KNAPMECH_MECHANISMS_HPP_
