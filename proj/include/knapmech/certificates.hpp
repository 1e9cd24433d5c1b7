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

#ifndef KNAPMECH_CERTIFICATES_HPP_
#define KNAPMECH_CERTIFICATES_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knapmech/mechanisms.hpp"
#include "knapmech/model.hpp"
#include "knapmech/rational.hpp"

namespace knapmech {

// Lower-bound certificate families. Each one checks, for a claimed
// approximation ratio (r in the set model, t in the single-item model) and a
// scale parameter, whether the family's adversarial construction forces a
// contradiction. Infeasible means "no mechanism of the stated kind can achieve
// the claimed ratio at this parameter point".
enum class CertificateFamily {
  kOverstateRand,   // thm5: randomized, overstating agents
  kOverstateDet,    // thm6: deterministic, overstating agents
  kUnderstateDet,   // thm7: deterministic, understating agents
  kUnderstateRand,  // thm8: randomized, understating agents
  kKqusRand,        // thm9: randomized, single-item size reports
  kKqusDet,         // thm10: deterministic, single-item size reports
};

// CLI-facing family names: "thm5".."thm10".
std::string to_string(CertificateFamily family);
std::optional<CertificateFamily> certificate_family_from_string(const std::string& name);
std::vector<CertificateFamily> all_certificate_families();

struct Certificate {
  CertificateFamily family;
  // Echoed parameters and derived bounds, in presentation order. Values are
  // exact rational strings, or interval strings for quantities touching a
  // radical enclosure.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> bounds;
  bool infeasible = false;
  // Present iff infeasible; always a strictly positive exact rational (for
  // enclosure-based families, the adverse end of the enclosure).
  std::optional<Rational> margin;
  // The construction's instance pair (truthful instance, deviated instance)
  // for the set-model families. Omitted for kOverstate* when M > 12, in which
  // case instance_note says so.
  std::optional<std::pair<Instance, Instance>> instances;
  // Same role for the single-item families: true sizes differ, ratios match.
  std::optional<std::pair<KqusInstance, KqusInstance>> kqus_instances;
  std::string instance_note;
};

// Evaluates one certificate. Required parameter keys by family:
//   thm5: r in (1,2], M integer >= 2
//   thm6: r >= 1, M integer >= 2
//   thm7: r >= 1, eps in (0,1)
//   thm8: r in (1,2]
//   thm9: t in (1,2], M integer >= 2
//   thm10: t >= 1, M integer >= 2
// Unknown or missing keys, or out-of-domain values, raise invalid_argument.
Certificate eval_certificate(CertificateFamily family,
                             const std::map<std::string, Rational>& params);

}  // namespace knapmech

#endif  // KNAPMECH_CERTIFICATES_HPP_
