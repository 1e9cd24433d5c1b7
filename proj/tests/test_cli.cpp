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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knapmech/cli.hpp"

using namespace knapmech;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Materializes catalog entries as files once per process.
class Workdir {
 public:
  Workdir() {
    dir_ = std::filesystem::temp_directory_path() / "knapmech-cli-test";
    std::filesystem::create_directories(dir_);
  }

  std::string path(const std::string& leaf) const { return (dir_ / leaf).string(); }

  std::string build(const std::string& entry, const std::vector<std::string>& params = {}) {
    const std::string file = path(entry + ".json");
    std::vector<std::string> args = {"catalog", "build", entry, "-o", file};
    for (const std::string& p : params) {
      args.push_back("--param");
      args.push_back(p);
    }
    REQUIRE(run(args).code == 0);
    return file;
  }

  std::string write(const std::string& leaf, const std::string& text) {
    const std::string file = path(leaf);
    std::ofstream stream(file, std::ios::binary | std::ios::trunc);
    stream << text;
    return file;
  }

  std::string read(const std::string& file) const {
    std::ifstream stream(file, std::ios::binary);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
  }

 private:
  std::filesystem::path dir_;
};

Workdir& workdir() {
  static Workdir dir;
  return dir;
}

}  // namespace

TEST_CASE("solve prints the optimum of an instance file") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"solve", file});
  CHECK(r.code == 0);
  CHECK(r.out == "opt {a,c}\nvalue 3/2\nsize 1\n");
  CHECK(r.err.empty());
}

TEST_CASE("run prints the outcome distribution and utilities") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"run", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "mechanism half-greedy\n"
        "outcome {a,c}:1/2, {d}:1/2\n"
        "utility 1 3/8\n"
        "utility 2 7/8\n"
        "welfare 5/4\n");

  // Repeat runs are byte identical.
  CHECK(run({"run", "half-greedy", file}).out == r.out);
}

TEST_CASE("run supports sampling as a labeled demonstration") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r =
      run({"run", "half-greedy", file, "--sample", "8", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sampled 8 with seed 42 (non-authoritative):"));
  CHECK(contains(r.out, " x"));
  // Sampling is seeded, so the whole output is reproducible.
  CHECK(run({"run", "half-greedy", file, "--sample", "8", "--seed", "42"}).out == r.out);
}

TEST_CASE("ratio reports opt, welfare, and their quotient") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"ratio", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "mechanism half-greedy\n"
        "opt 3/2\n"
        "welfare 5/4\n"
        "ratio 6/5\n");
}

TEST_CASE("audit flags the optimum mechanism and exits three") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"audit", "optimal", file});
  CHECK(r.code == 3);
  CHECK(r.out ==
        "mechanism optimal\n"
        "exhaustive true\n"
        "deviations 6\n"
        "violation agent 2 gain 1/4\n"
        "  deviation {d}\n"
        "  truthful-utility 3/4\n"
        "  deviating-utility 1\n");
}

TEST_CASE("audit reports fabricated items explicitly") {
  const std::string file = workdir().build("example2.badgreedy");
  const CliResult r = run({"audit", "bad-greedy", file, "--model", "overstating"});
  CHECK(r.code == 3);
  CHECK(r.out ==
        "mechanism bad-greedy\n"
        "exhaustive false\n"
        "deviations 56\n"
        "violation agent 2 gain 1/4\n"
        "  deviation {b,~f1}\n"
        "  fake ~f1 value 1 size 1/2\n"
        "  truthful-utility 0\n"
        "  deviating-utility 1/4\n");
}

TEST_CASE("audit clears half greedy and exits zero") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"audit", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "no violation found"));
}

TEST_CASE("audit accepts custom fake pools and fake budgets") {
  const std::string file = workdir().build("example2.badgreedy");
  // A single fake from a poolrestricted to worthless attributes finds nothing.
  const CliResult r = run({"audit", "bad-greedy", file, "--max-fakes", "1", "--fake-values",
                           "1/8", "--fake-sizes", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "deviations "));
  CHECK(contains(r.out, "no violation found"));
}

TEST_CASE("nash prints equilibria with welfare and ratio") {
  const std::string file = workdir().build("example1.instance2");
  const CliResult r = run({"nash", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "mechanism half-greedy\n"
        "profiles 4\n"
        "exhaustive true\n"
        "opt 1\n"
        "equilibrium {a} {d} welfare 7/8 ratio 8/7\n"
        "equilibria 1\n"
        "truthful-equilibrium true\n"
        "worst-ratio 8/7\n");
}

TEST_CASE("nash omits the worst ratio when no equilibrium exists") {
  const std::string file = workdir().build("footnote7.no-dominant");
  const CliResult r = run({"nash", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "equilibria 0\n"));
  CHECK(contains(r.out, "truthful-equilibrium false\n"));
  CHECK_FALSE(contains(r.out, "worst-ratio"));
}

TEST_CASE("certify prints the bound chain and margin") {
  const CliResult r = run({"certify", "thm9", "--t", "9/5", "--M", "100"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "family thm9\n"
        "t 9/5\n"
        "M 100\n"
        "p_lower 491/891\n"
        "p_upper 400/891\n"
        "gap 91/900\n"
        "Infeasible, margin 91/900\n");
}

TEST_CASE("certify exits four when an expected refutation is feasible") {
  const CliResult r = run({"certify", "thm5", "--r", "2", "--M", "100", "--expect-infeasible"});
  CHECK(r.code == 4);
  CHECK(contains(r.out, "Feasible\n"));
  CHECK(contains(r.out, "note instances omitted for M > 12\n"));

  const CliResult ok =
      run({"certify", "thm5", "--r", "19/10", "--M", "100", "--expect-infeasible"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "Infeasible, margin 1539/9190\n"));
}

TEST_CASE("certify can print the construction instances") {
  const CliResult r = run({"certify", "thm5", "--r", "7/5", "--M", "5", "--instances"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "instance X:\n"));
  CHECK(contains(r.out, "instance X':\n"));
  CHECK(contains(r.out, "\"a25\""));
  CHECK(contains(r.out, "\"model\": \"overstating\""));

  const CliResult kqus = run({"certify", "thm10", "--t", "3/2", "--M", "4", "--instances"});
  CHECK(kqus.code == 0);
  CHECK(contains(kqus.out, "\"kqus\": true"));
  CHECK(contains(kqus.out, "\"size\": \"1/16\""));
}

TEST_CASE("reduce reports the equivalence verdict") {
  const std::string file = workdir().build("example1.instance2");
  const CliResult r = run({"reduce", file, "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k 1\n"
        "knapsack-opt 1\n"
        "opt-at-least-k true\n"
        "program-objective 2\n"
        "objective-is-2k true\n"
        "agree true\n");

  const CliResult above = run({"reduce", file, "--k", "5/4"});
  CHECK(above.code == 0);
  CHECK(contains(above.out, "opt-at-least-k false\n"));
  CHECK(contains(above.out, "objective-is-2k false\n"));
  CHECK(contains(above.out, "agree true\n"));
}

TEST_CASE("catalog list is a stable golden") {
  const CliResult r = run({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(r.out == R"(example1.instance1: agent 1 owns a; agent 2 owns c and d
example1.instance2: agent 1 owns a; agent 2 owns d
example1.instance3: agent 1 owns a and b; agent 2 owns d
example2.badgreedy: a unit item against a small item; a fake half-size item beats it under BAD-GREEDY
example3.nash-fake [M=10, integer in [3, 1000]]: a fake report that is simultaneously a Nash profile and welfare-ruinous
footnote7.no-dominant [eps=1/100, rational in (0, 1/4)]: two understating agents with no dominant strategy under HALF-GREEDY
thm5.overstate-rand [M=3, integer in [2, 12]]: one tiny item against a unit item; the deviation claims M^2 tiny copies
thm7.understate-det [eps=1/100, rational in (0, 1)]: a near-golden-ratio item with a hideable half-size companion
thm8.understate-rand: the randomized variant: the companion item is worth exactly 1
appendixA1.eu-tight [eps=1/10000, rational in (0, 400/209)]: drives EQUAL-UTILITY arbitrarily close to its guarantee
thm9.kqus [M=100, integer in [2, 10^6]]: single-item model: ratio M at size 1 against ratio 1 at size 1
)");
}

TEST_CASE("catalog build writes parameterized instances") {
  const CliResult stdout_build = run({"catalog", "build", "example1.instance2"});
  CHECK(stdout_build.code == 0);
  CHECK(contains(stdout_build.out, "\"capacity\": \"1\""));

  const std::string file =
      workdir().build("example3.nash-fake", {"M=4"});
  const std::string text = workdir().read(file);
  CHECK(contains(text, "\"value\": \"2\""));
  CHECK(contains(text, "\"size\": \"3/4\""));
  CHECK(run({"solve", file}).code == 0);
}

TEST_CASE("kqus instance files drive the single-item mechanisms") {
  const std::string file = workdir().build("thm9.kqus");
  const CliResult solve = run({"solve", file});
  CHECK(solve.code == 0);
  CHECK(solve.out == "opt {a1}\nvalue 100\nsize 1\n");

  const CliResult mhg = run({"run", "modified-half-greedy", file});
  CHECK(mhg.code == 0);
  CHECK(mhg.out ==
        "mechanism modified-half-greedy\n"
        "outcome {a1}:1/2, {a2}:1/2\n"
        "utility 1 50\n"
        "utility 2 1/2\n"
        "welfare 101/2\n");

  const CliResult ratio = run({"ratio", "modified-half-greedy", file});
  CHECK(ratio.code == 0);
  CHECK(contains(ratio.out, "ratio 200/101\n"));

  const CliResult next = run({"run", "next", file});
  CHECK(next.code == 0);
  CHECK(contains(next.out, "outcome {a2}:1\n"));

  // Set-model mechanisms cannot consume a kqus file.
  const CliResult bad = run({"run", "greedy", file});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "needs a set-model instance file"));
  CHECK(run({"nash", "half-greedy", file}).code == 2);
  CHECK(run({"reduce", file, "--k", "1"}).code == 2);
}

TEST_CASE("kqus audits run on the size grid") {
  const std::string file = workdir().write("kqus-manip.json", R"({
  "agents": [
    {"id": 1, "ratio": "5", "size": "1/2"},
    {"id": 2, "ratio": "1", "size": "1/2"}
  ],
  "capacity": "1",
  "kqus": true
}
)");
  const CliResult next = run({"audit", "next", file});
  CHECK(next.code == 3);
  CHECK(next.out ==
        "mechanism next\n"
        "grid 20\n"
        "deviations 40\n"
        "violation agent 2 gain 1/2\n"
        "  reported-size 11/20\n"
        "  truthful-utility 0\n"
        "  deviating-utility 1/2\n");

  const CliResult mhg = run({"audit", "modified-half-greedy", file, "--grid", "24"});
  CHECK(mhg.code == 0);
  CHECK(contains(mhg.out, "grid 24\n"));
  CHECK(contains(mhg.out, "no violation found"));
}

TEST_CASE("records files hold one machine-readable line per result") {
  const std::string file = workdir().build("example1.instance1");
  const std::string records = workdir().path("run.records");
  const CliResult r = run({"--records", records, "run", "half-greedy", file});
  CHECK(r.code == 0);
  CHECK(workdir().read(records) ==
        "record=run mechanism=half-greedy outcome={a,c}:1/2;{d}:1/2 "
        "u1=3/8 u2=7/8 welfare=5/4\n");

  const std::string audit_records = workdir().path("audit.records");
  CHECK(run({"--records", audit_records, "audit", "optimal", file}).code == 3);
  CHECK(workdir().read(audit_records) ==
        "record=audit mechanism=optimal exhaustive=true deviations=6 violation=true "
        "agent=2 deviation={d} truthful=3/4 deviating=1 gain=1/4\n");

  const std::string nash_records = workdir().path("nash.records");
  const std::string nash_file = workdir().build("example1.instance2");
  CHECK(run({"--records", nash_records, "nash", "half-greedy", nash_file}).code == 0);
  CHECK(workdir().read(nash_records) ==
        "record=nash mechanism=half-greedy profiles=4 exhaustive=true opt=1 "
        "equilibria=1 truthful=true worst_ratio=8/7\n"
        "record=nash-equilibrium index=0 profile={a}|{d} welfare=7/8 ratio=8/7\n");

  const std::string cert_records = workdir().path("cert.records");
  CHECK(run({"--records", cert_records, "certify", "thm9", "--t", "9/5", "--M", "100"}).code ==
        0);
  CHECK(workdir().read(cert_records) ==
        "record=certificate family=thm9 t=9/5 M=100 p_lower=491/891 p_upper=400/891 "
        "gap=91/900 verdict=Infeasible margin=91/900\n");
}

TEST_CASE("alpha overrides reach the alpha mechanisms") {
  const std::string file = workdir().build("appendixA1.eu-tight");
  const CliResult r = run({"run", "equal-utility", file, "--alpha", "2999/2000"});
  CHECK(r.code == 0);
  const CliResult bad = run({"run", "equal-utility", file, "--alpha", "2"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "error: "));
  const CliResult greedy = run({"run", "greedy", file, "--alpha", "3/2"});
  CHECK(greedy.code == 2);
}

TEST_CASE("jobs flag is accepted") {
  const std::string file = workdir().build("example1.instance1");
  const CliResult r = run({"--jobs", "2", "audit", "half-greedy", file});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors exit two with a diagnostic") {
  const std::string file = workdir().build("example1.instance1");

  const CliResult unknown_mech = run({"run", "stingy", file});
  CHECK(unknown_mech.code == 2);
  CHECK(contains(unknown_mech.err, "unknown mechanism 'stingy'"));

  const CliResult missing = run({"run", "greedy", workdir().path("absent.json")});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot open instance file"));

  const CliResult bad_rational = run({"certify", "thm9", "--t", "0.9", "--M", "100"});
  CHECK(bad_rational.code == 2);
  CHECK(contains(bad_rational.err, "decimals not permitted"));

  const CliResult bad_family = run({"certify", "thm99", "--r", "3/2"});
  CHECK(bad_family.code == 2);
  CHECK(contains(bad_family.err, "unknown certificate family 'thm99'"));

  const CliResult bad_sub = run({"frobnicate"});
  CHECK(bad_sub.code == 2);
  CHECK(!bad_sub.err.empty());

  const CliResult no_sub = run({});
  CHECK(no_sub.code == 2);

  const CliResult bad_model = run({"audit", "greedy", file, "--model", "bogus"});
  CHECK(bad_model.code == 2);
  CHECK(contains(bad_model.err, "unknown report model 'bogus'"));

  const CliResult missing_k = run({"reduce", file});
  CHECK(missing_k.code == 2);

  const CliResult bad_entry = run({"catalog", "build", "nope"});
  CHECK(bad_entry.code == 2);
  CHECK(contains(bad_entry.err, "unknown entry"));

  const CliResult bad_param = run({"catalog", "build", "thm9.kqus", "--param", "M"});
  CHECK(bad_param.code == 2);
  CHECK(contains(bad_param.err, "--param expects key=value"));

  const CliResult bad_certify_param =
      run({"certify", "thm9", "--t", "9/5", "--M", "100", "--eps", "1/2"});
  CHECK(bad_certify_param.code == 2);
  CHECK(contains(bad_certify_param.err, "unknown parameter eps"));
}

TEST_CASE("help is printed on request") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "knapmech"));
  CHECK(contains(r.out, "certify"));
  const CliResult sub = run({"audit", "--help"});
  CHECK(sub.code == 0);
  CHECK(contains(sub.out, "--max-fakes"));
}
