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

#include "knapmech/knapsack.hpp"
#include "knapmech/mechanisms.hpp"

using namespace knapmech;

namespace {

Item item(const std::string& id, int owner, const Rational& value, const Rational& size) {
  return {id, owner, value, size};
}

}  // namespace

TEST_CASE("greedy stops at the first item that does not fit") {
  // Priority order c (ratio 4), a (ratio 1), b (ratio 1/2). Item a fails,
  // so b is never considered even though it would fit.
  const ReportProfile reports = {ItemSet({item("c", 1, Rational(2), Rational(1, 2)),
                                          item("a", 1, Rational(1), Rational(1)),
                                          item("b", 1, Rational(1, 4), Rational(1, 2))})};
  CHECK(run_greedy(reports, Rational(1)).id_list() == "{c}");
  // The negative control keeps scanning and picks b up.
  CHECK(run_bad_greedy(reports, Rational(1)).id_list() == "{b,c}");
}

TEST_CASE("greedy breaks ratio ties by id and fills the prefix") {
  const ReportProfile reports = {
      ItemSet({item("b", 1, Rational(1), Rational(1, 2)),
               item("a", 1, Rational(1), Rational(1, 2)),
               item("c", 1, Rational(1), Rational(1, 2))})};
  CHECK(run_greedy(reports, Rational(1)).id_list() == "{a,b}");
  CHECK(run_greedy(reports, Rational(3, 2)).id_list() == "{a,b,c}");
  CHECK(run_greedy({}, Rational(1)).empty());
}

TEST_CASE("maximum value takes the single best item") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(3, 4), Rational(1, 2))}),
                                 ItemSet({item("c", 2, Rational(3, 4), Rational(1, 2)),
                                          item("d", 2, Rational(1), Rational(1))})};
  CHECK(run_max_value(reports, Rational(1)).id_list() == "{d}");

  // Value ties go to the smaller id.
  const ReportProfile tied = {ItemSet({item("b", 1, Rational(1), Rational(1, 2)),
                                       item("a", 1, Rational(1), Rational(1))})};
  CHECK(run_max_value(tied, Rational(1)).id_list() == "{a}");
  CHECK(run_max_value({ItemSet()}, Rational(1)).empty());
}

TEST_CASE("half greedy mixes the two branches") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(3, 4), Rational(1, 2))}),
                                 ItemSet({item("c", 2, Rational(3, 4), Rational(1, 2)),
                                          item("d", 2, Rational(1), Rational(1))})};
  const OutcomeDistribution dist = run_half_greedy(reports, Rational(1));
  CHECK(dist.str() == "{a,c}:1/2, {d}:1/2");

  // When both branches agree the distribution is a single atom.
  const ReportProfile lone = {ItemSet({item("a", 1, Rational(1), Rational(1))})};
  CHECK(run_half_greedy(lone, Rational(1)).str() == "{a}:1");
}

TEST_CASE("equal utility option one hands a dominant agent its own optimum") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(2), Rational(1))}),
                                 ItemSet({item("b", 2, Rational(1, 2), Rational(1, 2))})};
  const OutcomeDistribution dist = run_equal_utility(reports, Rational(1));
  CHECK(dist.str() == "{a}:1");
}

TEST_CASE("equal utility option two equalizes expected utilities") {
  // The tightness instance: option 1 just barely fails, so the equalizing
  // program runs and both agents end up with the same expectation.
  const Rational v_c = Rational(400, 209) - Rational(1, 10000);
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(1), Rational(1)),
                                          item("b", 1, Rational(1, 2), Rational(1, 2))}),
                                 ItemSet({item("c", 2, v_c, Rational(1, 2))})};
  const OutcomeDistribution dist = run_equal_utility(reports, Rational(1));
  const Rational u1 = expected_utility(reports[0], dist);
  const Rational u2 = expected_utility(reports[1], dist);
  CHECK(u1 == u2);

  // Welfare matches the hand-solved optimum 2*v_c/(v_c + 1/2) of the
  // program, attained by mixing {a} with {b,c}.
  Rational welfare;
  for (const auto& [set, prob] : dist.atoms()) welfare += prob * set.total_value();
  CHECK(welfare == Rational(2) * v_c / (v_c + Rational(1, 2)));
}

TEST_CASE("equal utility with all-zero values falls to agent one") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(0), Rational(1, 2))}),
                                 ItemSet({item("b", 2, Rational(0), Rational(1, 2))})};
  const OutcomeDistribution dist = run_equal_utility(reports, Rational(1));
  REQUIRE(dist.atoms().size() == 1);
  CHECK(dist.atoms()[0].first.empty());
}

TEST_CASE("equal utility input validation") {
  const ReportProfile three = {ItemSet(), ItemSet(), ItemSet()};
  CHECK_THROWS_AS(run_equal_utility(three, Rational(1)), std::invalid_argument);
  const ReportProfile two = {ItemSet(), ItemSet()};
  CHECK_THROWS_AS(run_equal_utility(two, Rational(1), Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(run_equal_utility(two, Rational(1), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("pacify option one keeps the liar happy") {
  const Rational phi(1597, 987);
  const ReportProfile reports = {ItemSet({item("a", 1, phi, Rational(1)),
                                          item("c", 1, phi - Rational(1, 10), Rational(1, 2))}),
                                 ItemSet({item("b", 2, Rational(1), Rational(1, 2))})};
  CHECK(run_pacify_the_liar(reports, Rational(1)).id_list() == "{a}");
}

TEST_CASE("pacify option two serves the honest coalition") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(1), Rational(1))}),
                                 ItemSet({item("b", 2, Rational(10), Rational(1, 2))})};
  CHECK(run_pacify_the_liar(reports, Rational(1)).id_list() == "{b}");
}

TEST_CASE("pacify option three maximizes the liar's share above the bar") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(1), Rational(1, 2))}),
                                 ItemSet({item("b", 2, Rational(1), Rational(1, 2))})};
  CHECK(run_pacify_the_liar(reports, Rational(1)).id_list() == "{a,b}");

  const ReportProfile wide = {ItemSet({item("a", 1, Rational(1), Rational(1, 4)),
                                       item("c", 1, Rational(1), Rational(1, 4))}),
                              ItemSet({item("b", 2, Rational(2), Rational(1, 2))})};
  CHECK(run_pacify_the_liar(wide, Rational(1)).id_list() == "{a,b,c}");
}

TEST_CASE("pacify pools every honest agent into the coalition") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(1), Rational(1, 2))}),
                                 ItemSet({item("b", 2, Rational(3), Rational(1, 2))}),
                                 ItemSet({item("c", 3, Rational(3), Rational(1, 2))})};
  CHECK(run_pacify_the_liar(reports, Rational(1)).id_list() == "{b,c}");
}

TEST_CASE("pacify input validation") {
  CHECK_THROWS_AS(run_pacify_the_liar({ItemSet()}, Rational(1)), std::invalid_argument);
  const ReportProfile two = {ItemSet(), ItemSet()};
  CHECK_THROWS_AS(run_pacify_the_liar(two, Rational(1), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("next returns nothing when everything fits, else the first failure") {
  KqusInstance fits;
  fits.agents = {{Rational(1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}};
  const auto fit_reports = kqus_reports(fits, {Rational(1, 2), Rational(1, 2)});
  CHECK(run_next(fit_reports, Rational(1)).empty());

  KqusInstance clash;
  clash.agents = {{Rational(10), Rational(1)}, {Rational(1), Rational(1)}};
  const auto clash_reports = kqus_reports(clash, {Rational(1), Rational(1)});
  CHECK(run_next(clash_reports, Rational(1)).id_list() == "{a2}");
}

TEST_CASE("modified half greedy reproduces the three-ratio example") {
  KqusInstance instance;
  instance.agents = {{Rational(3), Rational(1, 2)},
                     {Rational(2), Rational(1, 2)},
                     {Rational(1), Rational(1, 2)}};
  const auto mech = make_kqus_mechanism(MechanismKind::kModifiedHalfGreedy);
  const OutcomeDistribution dist =
      mech(instance, {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(dist.str() == "{a1,a2}:1/2, {a3}:1/2");
  const Rational welfare = kqus_expected_welfare(instance, dist);
  CHECK(welfare == Rational(3, 2));
  CHECK(kqus_opt_value(instance) == Rational(5, 2));
  CHECK(kqus_opt_value(instance) == welfare * Rational(5, 3));
}

TEST_CASE("kqus utility is the true value regardless of the report") {
  KqusInstance instance;
  instance.agents = {{Rational(2), Rational(1, 2)}};
  const auto mech = make_kqus_mechanism(MechanismKind::kModifiedHalfGreedy);
  // Overstated report: greedy takes the item, next takes nothing.
  const OutcomeDistribution dist = mech(instance, {Rational(1)});
  CHECK(kqus_expected_utility(instance, 0, dist) == Rational(1, 2));
}

TEST_CASE("kqus validation") {
  KqusInstance bad;
  bad.agents = {{Rational(-1), Rational(1, 2)}};
  CHECK_FALSE(validate_kqus(bad).ok);
  bad.agents = {{Rational(1), Rational(0)}};
  CHECK_FALSE(validate_kqus(bad).ok);
  bad.agents = {{Rational(1), Rational(3, 2)}};
  CHECK_FALSE(validate_kqus(bad).ok);
  KqusInstance zero_ratio;
  zero_ratio.agents = {{Rational(0), Rational(1)}};
  CHECK(validate_kqus(zero_ratio).ok);
}

TEST_CASE("mechanism ids validate their alpha") {
  CHECK_THROWS_AS(MechanismId::of(MechanismKind::kEqualUtility, Rational(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(MechanismId::of(MechanismKind::kPacifyTheLiar, Rational(99, 100)),
                  std::invalid_argument);
  CHECK_THROWS_AS(MechanismId::of(MechanismKind::kGreedy, Rational(3, 2)),
                  std::invalid_argument);
  CHECK(MechanismId::of(MechanismKind::kEqualUtility, Rational(3, 2)).alpha == Rational(3, 2));
  CHECK(MechanismId::of(MechanismKind::kPacifyTheLiar).alpha == alpha_pacify());
}

TEST_CASE("set mechanism factory rejects the single-item kinds") {
  CHECK_THROWS_AS(make_mechanism(MechanismId::of(MechanismKind::kNext)), std::invalid_argument);
  CHECK_THROWS_AS(make_mechanism(MechanismId::of(MechanismKind::kModifiedHalfGreedy)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_kqus_mechanism(MechanismKind::kGreedy), std::invalid_argument);
}

TEST_CASE("optimal benchmark mechanism returns the knapsack optimum") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(3, 4), Rational(1, 2))}),
                                 ItemSet({item("c", 2, Rational(3, 4), Rational(1, 2)),
                                          item("d", 2, Rational(1), Rational(1))})};
  const auto mech = make_mechanism(MechanismId::of(MechanismKind::kOptimal));
  CHECK(mech(reports, Rational(1)).str() == "{a,c}:1");
}

TEST_CASE("every mechanism output is feasible") {
  const ReportProfile reports = {ItemSet({item("a", 1, Rational(1), Rational(2, 3)),
                                          item("b", 1, Rational(2), Rational(2, 3))}),
                                 ItemSet({item("c", 2, Rational(3), Rational(2, 3))})};
  const ItemSet pool = profile_union(reports);
  for (const MechanismKind kind :
       {MechanismKind::kGreedy, MechanismKind::kMaxValue, MechanismKind::kHalfGreedy,
        MechanismKind::kBadGreedy, MechanismKind::kEqualUtility, MechanismKind::kPacifyTheLiar,
        MechanismKind::kOptimal}) {
    const OutcomeDistribution dist = make_mechanism(MechanismId::of(kind))(reports, Rational(1));
    CHECK_NOTHROW(dist.check_feasible(Rational(1), pool));
  }
}
