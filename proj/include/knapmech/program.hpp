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

#ifndef KNAPMECH_PROGRAM_HPP_
#define KNAPMECH_PROGRAM_HPP_

#include <vector>

#include "knapmech/knapsack.hpp"
#include "knapmech/model.hpp"

namespace knapmech {

// The equalizing linear program for two agents: over distributions on
// feasible subsets of the two reports' union, maximize expected welfare
// subject to both agents receiving exactly equal expected utility.
struct ProgramInstance {
  ItemSet x1;
  ItemSet x2;
  Rational capacity = Rational(1);
};

struct ProgramSolution {
  OutcomeDistribution distribution;
  Rational objective;
  bool feasible = true;  // the program always is; kept for the record output
};

struct ProgramLimits {
  int max_items = 20;
};

// All subsets of the pool that fit in the capacity, in canonical set order.
std::vector<ItemSet> enumerate_feasible_sets(const ItemSet& pool, const Rational& capacity,
                                             const ProgramLimits& limits = {});

// Solves the program exactly. The LP has two equality rows, so some optimal
// basic solution has support size at most two; the solver scans all
// singleton and pair supports and keeps the best, preferring smaller
// supports and canonically smaller ones among optima. The empty set is
// always feasible, so the program is always solvable.
ProgramSolution solve_program(const ProgramInstance& program, const ProgramLimits& limits = {});

// Single-threaded reference implementation with identical output.
ProgramSolution solve_program_serial(const ProgramInstance& program,
                                     const ProgramLimits& limits = {});

// Maps a knapsack instance (capacity normalized to 1/2, all sizes at most
// 1/2) to a program instance whose optimum equals 2k exactly when the
// knapsack can reach value k. Agent 1 reports the knapsack items; agent 2
// reports one fresh item of value k and size 1/2; the program capacity is 1.
ProgramInstance reduce_knapsack_to_program(const ItemSet& items, const Rational& k);

struct ReductionCheck {
  ProgramInstance program;
  Rational program_objective;
  Rational knapsack_opt;
  bool opt_at_least_k = false;
  bool objective_is_2k = false;
  bool agree = false;  // the two sides of the equivalence match
};

// Runs the reduction end to end and verifies the equivalence on this input.
ReductionCheck run_reduction(const ItemSet& items, const Rational& k,
                             const ProgramLimits& limits = {});

}  // namespace knapmech

#endif  // KNAPMECH_PROGRAM_HPP_
