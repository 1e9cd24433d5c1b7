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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "knapmech/certificates.hpp"
#include "knapmech/model.hpp"

using namespace knapmech;

namespace {

using Params = std::map<std::string, Rational>;

Certificate eval(const std::string& family, const Params& params) {
  const auto parsed = certificate_family_from_string(family);
  REQUIRE(parsed.has_value());
  return eval_certificate(*parsed, params);
}

std::string bound_of(const Certificate& cert, const std::string& key) {
  for (const auto& [name, value] : cert.bounds) {
    if (name == key) return value;
  }
  FAIL("missing bound ", key);
  return "";
}

}  // namespace

TEST_CASE("family names round trip") {
  const auto families = all_certificate_families();
  REQUIRE(families.size() == 6);
  for (const CertificateFamily family : families) {
    const auto parsed = certificate_family_from_string(to_string(family));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == family);
  }
  CHECK(to_string(CertificateFamily::kOverstateRand) == "thm5");
  CHECK(to_string(CertificateFamily::kKqusDet) == "thm10");
  CHECK_FALSE(certificate_family_from_string("thm11").has_value());
  CHECK_FALSE(certificate_family_from_string("").has_value());
}

TEST_CASE("randomized overstating bound") {
  const Certificate tight = eval("thm5", {{"r", Rational(19, 10)}, {"M", Rational(100)}});
  CHECK(tight.infeasible);
  REQUIRE(tight.margin.has_value());
  CHECK(*tight.margin == Rational(1539, 9190));
  CHECK(bound_of(tight, "q") == "109/209");
  CHECK(bound_of(tight, "bound") == "1900/919");
  CHECK_FALSE(tight.instances.has_value());
  CHECK(tight.instance_note == "instances omitted for M > 12");

  const Certificate mid = eval("thm5", {{"r", Rational(3, 2)}, {"M", Rational(100)}});
  CHECK(mid.infeasible);
  CHECK(*mid.margin == Rational(291, 206));
  CHECK(bound_of(mid, "q") == "197/297");
  CHECK(bound_of(mid, "bound") == "300/103");

  // r = 2 is attainable, so the certificate must not claim otherwise.
  const Certificate edge = eval("thm5", {{"r", Rational(2)}, {"M", Rational(100)}});
  CHECK_FALSE(edge.infeasible);
  CHECK_FALSE(edge.margin.has_value());
  CHECK(bound_of(edge, "bound") == "100/51");
}

TEST_CASE("overstating certificates carry a checkable instance pair") {
  // Small scales emit the pair; at M = 5 the bound 35/17 still beats r.
  const Certificate cert = eval("thm5", {{"r", Rational(7, 5)}, {"M", Rational(5)}});
  CHECK(cert.infeasible);
  CHECK(*cert.margin == Rational(56, 85));
  CHECK(bound_of(cert, "bound") == "35/17");
  REQUIRE(cert.instances.has_value());
  const auto& [x, x_prime] = *cert.instances;
  CHECK(validate_instance(x).ok);
  CHECK(validate_instance(x_prime).ok);
  CHECK(x.agents() == 2);
  CHECK(x.true_sets[0].size() == 1);
  CHECK(x.true_sets[0].items()[0].value == Rational(1, 5));
  CHECK(x.true_sets[0].items()[0].size == Rational(1, 25));
  CHECK(x.models[0] == ReportModel::kOverstating);
  CHECK(x.models[1] == ReportModel::kHonest);
  // The deviated twin owns M^2 copies that exactly fill the knapsack.
  CHECK(x_prime.true_sets[0].size() == 25);
  CHECK(x_prime.true_sets[0].total_size() == Rational(1));
  CHECK(x_prime.true_sets[1].id_list() == "{b}");
}

TEST_CASE("deterministic overstating bound") {
  const Certificate cert = eval("thm6", {{"r", Rational(7)}, {"M", Rational(100)}});
  CHECK(cert.infeasible);
  CHECK(*cert.margin == Rational(93));
  CHECK(bound_of(cert, "forced_ratio") == "100");

  const Certificate feasible = eval("thm6", {{"r", Rational(100)}, {"M", Rational(100)}});
  CHECK_FALSE(feasible.infeasible);

  const Certificate small = eval("thm6", {{"r", Rational(1)}, {"M", Rational(3)}});
  CHECK(small.infeasible);
  CHECK(*small.margin == Rational(2));
  REQUIRE(small.instances.has_value());
  CHECK(validate_instance(small.instances->first).ok);
  CHECK(validate_instance(small.instances->second).ok);
}

TEST_CASE("deterministic understating bound") {
  const Certificate cert = eval("thm7", {{"r", Rational(3, 2)}, {"eps", Rational(1, 100)}});
  CHECK(cert.infeasible);
  CHECK(*cert.margin == Rational(10968667, 98062666));

  const Certificate tighter = eval("thm7", {{"r", Rational(8, 5)}, {"eps", Rational(1, 100)}});
  CHECK(tighter.infeasible);
  CHECK(*tighter.margin == Rational(2906001, 245156665));

  // Above the enclosure's low end nothing is refuted.
  const Certificate feasible = eval("thm7", {{"r", Rational(13, 8)}, {"eps", Rational(1, 100)}});
  CHECK_FALSE(feasible.infeasible);

  REQUIRE(cert.instances.has_value());
  const auto& [x, x_prime] = *cert.instances;
  CHECK(validate_instance(x).ok);
  CHECK(validate_instance(x_prime).ok);
  CHECK(x.true_sets[0].id_list() == "{a}");
  CHECK(x_prime.true_sets[0].id_list() == "{a,c}");
  // The crowding item is worth the phi stand-in minus eps.
  const Item& extra = x_prime.true_sets[0].items()[1];
  CHECK(extra.value == Rational(1597, 987) - Rational(1, 100));
  CHECK(extra.size == Rational(1, 2));
}

TEST_CASE("randomized understating bound") {
  const Certificate cert = eval("thm8", {{"r", Rational(27, 25)}});
  CHECK(cert.infeasible);
  REQUIRE(cert.margin.has_value());
  // The exact slack is a directed-rounding interval endpoint; pin its range.
  CHECK(*cert.margin > Rational(1, 20));
  CHECK(*cert.margin < Rational(1, 10));

  CHECK_FALSE(eval("thm8", {{"r", Rational(11, 10)}}).infeasible);
  CHECK_FALSE(eval("thm8", {{"r", Rational(2)}}).infeasible);

  REQUIRE(cert.instances.has_value());
  CHECK(validate_instance(cert.instances->first).ok);
  CHECK(validate_instance(cert.instances->second).ok);
  CHECK(cert.instances->second.true_sets[0].items()[1].value == Rational(1));
}

TEST_CASE("randomized single-item bound") {
  const Certificate cert = eval("thm9", {{"t", Rational(9, 5)}, {"M", Rational(100)}});
  CHECK(cert.infeasible);
  CHECK(*cert.margin == Rational(91, 900));
  CHECK(bound_of(cert, "p_lower") == "491/891");
  CHECK(bound_of(cert, "p_upper") == "400/891");
  CHECK(bound_of(cert, "gap") == "91/900");

  const Certificate mid = eval("thm9", {{"t", Rational(3, 2)}, {"M", Rational(100)}});
  CHECK(mid.infeasible);
  CHECK(*mid.margin == Rational(97, 300));

  CHECK_FALSE(eval("thm9", {{"t", Rational(2)}, {"M", Rational(100)}}).infeasible);

  REQUIRE(cert.kqus_instances.has_value());
  const auto& [big, tiny] = *cert.kqus_instances;
  CHECK(validate_kqus(big).ok);
  CHECK(validate_kqus(tiny).ok);
  CHECK(big.agents[0].ratio == Rational(100));
  CHECK(big.agents[0].size == Rational(1));
  CHECK(big.agents[1].ratio == Rational(1));
  CHECK(tiny.agents[0].size == Rational(1, 10000));
}

TEST_CASE("deterministic single-item bound") {
  const Certificate cert = eval("thm10", {{"t", Rational(3, 2)}, {"M", Rational(4)}});
  CHECK(cert.infeasible);
  CHECK(*cert.margin == Rational(5, 2));
  CHECK(bound_of(cert, "forced_ratio") == "4");
  CHECK(bound_of(cert, "deviation_gain") == "1/4");
  REQUIRE(cert.kqus_instances.has_value());
  CHECK(cert.kqus_instances->second.agents[0].size == Rational(1, 16));

  CHECK_FALSE(eval("thm10", {{"t", Rational(5)}, {"M", Rational(4)}}).infeasible);
}

TEST_CASE("certificate parameter validation") {
  CHECK_THROWS_AS(eval("thm5", {{"M", Rational(3)}}), std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(19, 10)}}), std::invalid_argument);
  CHECK_THROWS_AS(
      eval("thm5", {{"r", Rational(19, 10)}, {"M", Rational(3)}, {"z", Rational(1)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(1)}, {"M", Rational(3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(21, 10)}, {"M", Rational(3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(19, 10)}, {"M", Rational(5, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(19, 10)}, {"M", Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm5", {{"r", Rational(19, 10)}, {"M", Rational(1000001)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm6", {{"r", Rational(1, 2)}, {"M", Rational(3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm7", {{"r", Rational(3, 2)}, {"eps", Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm7", {{"r", Rational(3, 2)}, {"eps", Rational(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm9", {{"t", Rational(1)}, {"M", Rational(4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm9", {{"t", Rational(21, 10)}, {"M", Rational(4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval("thm10", {{"t", Rational(1, 2)}, {"M", Rational(4)}}),
                  std::invalid_argument);
}
