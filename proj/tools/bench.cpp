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

// Compares the OpenMP kernels against their serial reference
// implementations on identical inputs: same results required, wall time
// reported. Speedups need more than one core; on a single core the two
// columns should roughly match.

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "knapmech/catalog.hpp"
#include "knapmech/gamelab.hpp"
#include "knapmech/mechanisms.hpp"
#include "knapmech/program.hpp"

namespace {

using knapmech::Instance;
using knapmech::ItemSet;
using knapmech::Rational;

double seconds(const std::function<void()>& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-10s %9.3fs %9.3fs %6.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

void bench_audit() {
  // Equal-utility audits are the heavy case: every deviation replays the
  // equalizing program.
  const Instance instance =
      knapmech::random_instance(7, 2, 7, knapmech::default_value_grid(),
                                knapmech::default_size_grid());
  const auto mechanism =
      knapmech::make_mechanism(knapmech::MechanismId::of(knapmech::MechanismKind::kEqualUtility));
  knapmech::AuditVerdict serial_verdict, parallel_verdict;
  const double serial =
      seconds([&] { serial_verdict = knapmech::audit_strategyproofness_serial(mechanism, instance); });
  const double parallel =
      seconds([&] { parallel_verdict = knapmech::audit_strategyproofness(mechanism, instance); });
  if (serial_verdict.violation != parallel_verdict.violation ||
      serial_verdict.deviations_checked != parallel_verdict.deviations_checked) {
    throw std::logic_error("audit kernels disagree");
  }
  report("audit", serial, parallel);
}

void bench_program() {
  const Instance instance =
      knapmech::random_instance(11, 2, 8, knapmech::default_value_grid(),
                                {Rational(1, 6), Rational(1, 5), Rational(1, 4)});
  knapmech::ProgramInstance program;
  program.x1 = instance.true_sets[0];
  program.x2 = instance.true_sets[1];
  knapmech::ProgramLimits limits;
  limits.max_items = 20;
  knapmech::ProgramSolution serial_solution, parallel_solution;
  const double serial =
      seconds([&] { serial_solution = knapmech::solve_program_serial(program, limits); });
  const double parallel =
      seconds([&] { parallel_solution = knapmech::solve_program(program, limits); });
  if (serial_solution.objective != parallel_solution.objective) {
    throw std::logic_error("program kernels disagree");
  }
  report("program", serial, parallel);
}

void bench_nash() {
  const Instance instance =
      knapmech::random_instance(3, 2, 6, knapmech::default_value_grid(),
                                knapmech::default_size_grid());
  const auto mechanism =
      knapmech::make_mechanism(knapmech::MechanismId::of(knapmech::MechanismKind::kHalfGreedy));
  knapmech::NashReport serial_report, parallel_report;
  const double serial =
      seconds([&] { serial_report = knapmech::enumerate_pure_nash_serial(mechanism, instance); });
  const double parallel =
      seconds([&] { parallel_report = knapmech::enumerate_pure_nash(mechanism, instance); });
  if (serial_report.equilibria.size() != parallel_report.equilibria.size() ||
      serial_report.profiles_checked != parallel_report.profiles_checked) {
    throw std::logic_error("nash kernels disagree");
  }
  report("nash", serial, parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-10s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");
  bench_audit();
  bench_program();
  bench_nash();
  return 0;
}
