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

#include "knapmech/certificates.hpp"

#include <stdexcept>

#include "knapmech/interval.hpp"

namespace knapmech {

namespace {

// Emitted set-model instances stay below this scale; thm5/thm6 need M^2
// items, so larger M keeps the arithmetic but drops the instances.
constexpr long kMaxEmittedScale = 12;

// A rational a hair above the golden ratio (a Fibonacci convergent from
// above), used as the stand-in value for the "phi" item in emitted
// instances. Any value in (golden ratio, 2) keeps the construction's
// inequalities strict; this one keeps numbers small.
Rational phi_stand_in() { return Rational(1597, 987); }

Rational require_param(const std::map<std::string, Rational>& params, const std::string& key,
                       const std::string& family) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("certificate " + family + ": missing parameter " + key);
  }
  return it->second;
}

void reject_unknown(const std::map<std::string, Rational>& params,
                    const std::vector<std::string>& known, const std::string& family) {
  for (const auto& [key, value] : params) {
    (void)value;
    bool ok = false;
    for (const std::string& name : known) {
      if (key == name) ok = true;
    }
    if (!ok) throw std::invalid_argument("certificate " + family + ": unknown parameter " + key);
  }
}

long require_scale(const Rational& m, const std::string& family) {
  if (m.denominator() != 1 || m < Rational(2) || m > Rational(1000000)) {
    throw std::invalid_argument("certificate " + family +
                                ": M must be an integer in [2, 10^6], got " + m.str());
  }
  return std::stol(m.str());
}

// The overstating construction: agent 1 owns one small item of value 1/M and
// size 1/M^2; the deviation claims M^2 copies of it. Agent 2's unit item
// exactly fills the knapsack.
std::pair<Instance, Instance> overstate_instances(long m) {
  const Rational small_value(1, m);
  const Rational small_size(1, m * m);
  std::vector<Item> truth = {{"a1", 1, small_value, small_size}};
  std::vector<Item> inflated;
  for (long j = 1; j <= m * m; ++j) {
    inflated.push_back({"a" + std::to_string(j), 1, small_value, small_size});
  }
  const Item unit = {"b", 2, Rational(1), Rational(1)};
  Instance x;
  x.capacity = Rational(1);
  x.true_sets = {ItemSet(truth), ItemSet({unit})};
  x.models = {ReportModel::kOverstating, ReportModel::kHonest};
  Instance x_prime = x;
  x_prime.true_sets[0] = ItemSet(inflated);
  return {x, x_prime};
}

// The understating construction: agent 1 owns a full-size item worth about
// the golden ratio; the deviated instance adds a half-size item that crowds
// agent 2's half-size unit item.
std::pair<Instance, Instance> understate_instances(const Rational& extra_value) {
  const Item big = {"a", 1, phi_stand_in(), Rational(1)};
  const Item extra = {"c", 1, extra_value, Rational(1, 2)};
  const Item unit = {"b", 2, Rational(1), Rational(1, 2)};
  Instance x;
  x.capacity = Rational(1);
  x.true_sets = {ItemSet({big}), ItemSet({unit})};
  x.models = {ReportModel::kUnderstating, ReportModel::kHonest};
  Instance x_prime = x;
  x_prime.true_sets[0] = ItemSet({big, extra});
  return {x, x_prime};
}

// The single-item construction: a high-ratio agent whose size report is the
// only unknown, against a unit-size agent of ratio 1. The pair differs only
// in the high-ratio agent's true size.
std::pair<KqusInstance, KqusInstance> kqus_instances(long m) {
  KqusInstance big;
  big.agents = {{Rational(m), Rational(1)}, {Rational(1), Rational(1)}};
  KqusInstance tiny = big;
  tiny.agents[0].size = Rational(1, m * m);
  return {big, tiny};
}

Certificate eval_overstate_rand(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"r", "M"}, "thm5");
  const Rational r = require_param(params, "r", "thm5");
  const long m = require_scale(require_param(params, "M", "thm5"), "thm5");
  if (r <= Rational(1) || r > Rational(2)) {
    throw std::invalid_argument("certificate thm5: r must lie in (1, 2], got " + r.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kOverstateRand;
  cert.parameters = {{"r", r.str()}, {"M", std::to_string(m)}};

  // If a mechanism guarantees ratio r on the inflated instance it must pick
  // the small items with probability at least q; consistency with the
  // truthful instance then forces a ratio of at least `bound` somewhere.
  const Rational big(m);
  const Rational q = (big - r) / (r * (big - Rational(1)));
  const Rational bound = Rational(1) / (q / big + Rational(1) - q);
  cert.bounds = {{"q", q.str()}, {"bound", bound.str()}};
  if (bound > r) {
    cert.infeasible = true;
    cert.margin = bound - r;
  }
  if (m <= kMaxEmittedScale) {
    cert.instances = overstate_instances(m);
  } else {
    cert.instance_note = "instances omitted for M > " + std::to_string(kMaxEmittedScale);
  }
  return cert;
}

Certificate eval_overstate_det(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"r", "M"}, "thm6");
  const Rational r = require_param(params, "r", "thm6");
  const long m = require_scale(require_param(params, "M", "thm6"), "thm6");
  if (r < Rational(1)) {
    throw std::invalid_argument("certificate thm6: r must be >= 1, got " + r.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kOverstateDet;
  cert.parameters = {{"r", r.str()}, {"M", std::to_string(m)}};

  // Deterministically the mechanism either takes the unit item on the
  // inflated instance (ratio M there is forced on the truthful one) or not
  // (ratio M on the inflated one). Either way some instance has ratio >= M.
  cert.bounds = {{"forced_ratio", std::to_string(m)}};
  if (Rational(m) > r) {
    cert.infeasible = true;
    cert.margin = Rational(m) - r;
  }
  if (m <= kMaxEmittedScale) {
    cert.instances = overstate_instances(m);
  } else {
    cert.instance_note = "instances omitted for M > " + std::to_string(kMaxEmittedScale);
  }
  return cert;
}

Certificate eval_understate_det(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"r", "eps"}, "thm7");
  const Rational r = require_param(params, "r", "thm7");
  const Rational eps = require_param(params, "eps", "thm7");
  if (r < Rational(1)) {
    throw std::invalid_argument("certificate thm7: r must be >= 1, got " + r.str());
  }
  if (eps.sign() <= 0 || eps >= Rational(1)) {
    throw std::invalid_argument("certificate thm7: eps must lie in (0, 1), got " + eps.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kUnderstateDet;
  cert.parameters = {{"r", r.str()}, {"eps", eps.str()}};

  const RatInterval phi = golden_ratio_enclosure();
  // Ratio r below phi forces the mechanism to take the extra item on the
  // deviated instance; hiding it then leaves welfare 1 against an optimum of
  // phi - eps + 1, i.e. a ratio of at least 1 + (1 - eps)/phi.
  const RatInterval ratio =
      RatInterval::point(Rational(1)) +
      RatInterval::point(Rational(1) - eps) / phi;
  cert.bounds = {{"phi", phi.str()}, {"deviation_ratio", ratio.str()}};
  const Rational forced = phi.lo < ratio.lo ? phi.lo : ratio.lo;
  if (r < forced) {
    cert.infeasible = true;
    cert.margin = forced - r;
  }
  cert.instances = understate_instances(phi_stand_in() - eps);
  return cert;
}

Certificate eval_understate_rand(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"r"}, "thm8");
  const Rational r = require_param(params, "r", "thm8");
  if (r <= Rational(1) || r > Rational(2)) {
    throw std::invalid_argument("certificate thm8: r must lie in (1, 2], got " + r.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kUnderstateRand;
  cert.parameters = {{"r", r.str()}};

  const RatInterval phi = golden_ratio_enclosure();
  const RatInterval one = RatInterval::point(Rational(1));
  const RatInterval two = RatInterval::point(Rational(2));
  const RatInterval rr = RatInterval::point(r);
  // p = probability the big item is taken on the truthful instance, p' = the
  // same probability on the deviated one. Ratio r bounds p from below and p'
  // from above; consistency under hiding the extra item needs
  // p*phi <= 1 + p'*(phi - 1), so a positive slack is a contradiction.
  const RatInterval p_lower = (phi / rr - one) / (phi - one);
  const RatInterval p_upper = (two - two / rr) / (two - phi);
  const RatInterval slack = p_lower * phi - one - p_upper * (phi - one);
  cert.bounds = {{"p_lower", p_lower.str()},
                 {"p_prime_upper", p_upper.str()},
                 {"slack", slack.str()}};
  if (slack.lo.sign() > 0) {
    cert.infeasible = true;
    cert.margin = slack.lo;
  }
  cert.instances = understate_instances(Rational(1));
  return cert;
}

Certificate eval_kqus_rand(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"t", "M"}, "thm9");
  const Rational t = require_param(params, "t", "thm9");
  const long m = require_scale(require_param(params, "M", "thm9"), "thm9");
  if (t <= Rational(1) || t > Rational(2)) {
    throw std::invalid_argument("certificate thm9: t must lie in (1, 2], got " + t.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kKqusRand;
  cert.parameters = {{"t", t.str()}, {"M", std::to_string(m)}};

  const Rational big(m);
  // Ratio t forces the size-1 report to win with probability at least
  // p_lower, and (by the tiny-size instance plus truthful reporting being
  // optimal for the agent) at most p_upper. They cross iff 2/t > 1 + 1/M.
  const Rational p_lower = (big / t - Rational(1)) / (big - Rational(1));
  const Rational p_upper = (Rational(1) - Rational(1) / t) / (Rational(1) - Rational(1) / big);
  const Rational gap = Rational(2) / t - Rational(1) - Rational(1) / big;
  cert.bounds = {{"p_lower", p_lower.str()}, {"p_upper", p_upper.str()}, {"gap", gap.str()}};
  if (gap.sign() > 0) {
    cert.infeasible = true;
    cert.margin = gap;
  }
  cert.kqus_instances = kqus_instances(m);
  return cert;
}

Certificate eval_kqus_det(const std::map<std::string, Rational>& params) {
  reject_unknown(params, {"t", "M"}, "thm10");
  const Rational t = require_param(params, "t", "thm10");
  const long m = require_scale(require_param(params, "M", "thm10"), "thm10");
  if (t < Rational(1)) {
    throw std::invalid_argument("certificate thm10: t must be >= 1, got " + t.str());
  }
  Certificate cert;
  cert.family = CertificateFamily::kKqusDet;
  cert.parameters = {{"t", t.str()}, {"M", std::to_string(m)}};

  // A deterministic mechanism with ratio t must take the size-1 high-ratio
  // item when its size really is 1, and must not when the true size is
  // 1/M^2; the tiny-size agent then gains by reporting 1. Either resolution
  // leaves some instance at ratio M.
  cert.bounds = {{"forced_ratio", std::to_string(m)},
                 {"deviation_gain", Rational(1, m).str()}};
  if (Rational(m) > t) {
    cert.infeasible = true;
    cert.margin = Rational(m) - t;
  }
  cert.kqus_instances = kqus_instances(m);
  return cert;
}

}  // namespace

std::string to_string(CertificateFamily family) {
  switch (family) {
    case CertificateFamily::kOverstateRand:
      return "thm5";
    case CertificateFamily::kOverstateDet:
      return "thm6";
    case CertificateFamily::kUnderstateDet:
      return "thm7";
    case CertificateFamily::kUnderstateRand:
      return "thm8";
    case CertificateFamily::kKqusRand:
      return "thm9";
    case CertificateFamily::kKqusDet:
      return "thm10";
  }
  throw std::logic_error("unreachable certificate family");
}

std::optional<CertificateFamily> certificate_family_from_string(const std::string& name) {
  for (CertificateFamily family : all_certificate_families()) {
    if (to_string(family) == name) return family;
  }
  return std::nullopt;
}

std::vector<CertificateFamily> all_certificate_families() {
  return {CertificateFamily::kOverstateRand, CertificateFamily::kOverstateDet,
          CertificateFamily::kUnderstateDet, CertificateFamily::kUnderstateRand,
          CertificateFamily::kKqusRand,      CertificateFamily::kKqusDet};
}

Certificate eval_certificate(CertificateFamily family,
                             const std::map<std::string, Rational>& params) {
  switch (family) {
    case CertificateFamily::kOverstateRand:
      return eval_overstate_rand(params);
    case CertificateFamily::kOverstateDet:
      return eval_overstate_det(params);
    case CertificateFamily::kUnderstateDet:
      return eval_understate_det(params);
    case CertificateFamily::kUnderstateRand:
      return eval_understate_rand(params);
    case CertificateFamily::kKqusRand:
      return eval_kqus_rand(params);
    case CertificateFamily::kKqusDet:
      return eval_kqus_det(params);
  }
  throw std::logic_error("unreachable certificate family");
}

}  // namespace knapmech
