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

// Test-only oracle: a two-phase simplex over exact rationals with Bland's
// rule, independent of the library's support-enumeration solver. Dense and
// slow by design; only suitable for the small programs the tests build.

#ifndef KNAPMECH_TESTS_LP_ORACLE_HPP_
#define KNAPMECH_TESTS_LP_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knapmech/program.hpp"
#include "knapmech/rational.hpp"

namespace knapmech::testing {

// maximize c.x subject to A x = b, x >= 0. Empty optional means infeasible;
// unbounded programs throw (the callers' programs are all bounded).
inline std::optional<Rational> lp_max(std::vector<std::vector<Rational>> a,
                                      std::vector<Rational> b, const std::vector<Rational>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("lp_max: ragged matrix");
  }
  if (b.size() != rows) throw std::invalid_argument("lp_max: bad rhs");

  for (std::size_t i = 0; i < rows; ++i) {
    if (b[i].sign() < 0) {
      b[i] = -b[i];
      for (auto& entry : a[i]) entry = -entry;
    }
  }

  // Tableau over columns [real | artificial | rhs]; objective row last.
  const std::size_t total = cols + rows;
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = Rational(1);
    t[i][total] = b[i];
    basis[i] = cols + i;
  }

  const auto pivot = [&](std::size_t row, std::size_t col) {
    const Rational head = t[row][col];
    for (auto& entry : t[row]) entry = entry / head;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == row || t[i][col].is_zero()) continue;
      const Rational factor = t[i][col];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] = t[i][j] - factor * t[row][j];
    }
    basis[row] = col;
  };

  // Bland's rule: first improving column, then the smallest-ratio row with
  // the smallest basic index. Terminates without anti-cycling heuristics.
  const auto iterate = [&](std::size_t active_cols) {
    for (;;) {
      std::size_t entering = total + 1;
      for (std::size_t j = 0; j < active_cols; ++j) {
        if (t[rows][j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering > total) return;
      std::size_t leaving = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][entering].sign() <= 0) continue;
        const Rational ratio = t[i][total] / t[i][entering];
        if (leaving == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == rows) throw std::runtime_error("lp_max: unbounded");
      pivot(leaving, entering);
    }
  };

  // Phase one: drive the artificial variables to zero.
  for (std::size_t j = cols; j < total; ++j) t[rows][j] = Rational(1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= total; ++j) t[rows][j] = t[rows][j] - t[i][j];
  }
  iterate(total);
  if (t[rows][total].sign() != 0) return std::nullopt;
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) continue;
    // A basic artificial at value zero: swap in any usable real column.
    for (std::size_t j = 0; j < cols; ++j) {
      if (!t[i][j].is_zero()) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase two on the real objective.
  for (std::size_t j = 0; j <= total; ++j) t[rows][j] = Rational(0);
  for (std::size_t j = 0; j < cols; ++j) t[rows][j] = -c[j];
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= cols) continue;
    const Rational factor = t[rows][basis[i]];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= total; ++j) t[rows][j] = t[rows][j] - factor * t[i][j];
  }
  iterate(cols);
  return t[rows][total];
}

// The equalizing program as an explicit LP over every feasible set: used to
// cross-check the library's two-support enumeration.
inline Rational program_oracle(const ProgramInstance& program, const ProgramLimits& limits = {}) {
  const ItemSet pool = program.x1.union_with(program.x2);
  const std::vector<ItemSet> sets = enumerate_feasible_sets(pool, program.capacity, limits);
  std::vector<Rational> delta;
  std::vector<Rational> value;
  for (const ItemSet& set : sets) {
    const Rational v1 = set.intersect(program.x1).total_value();
    const Rational v2 = set.intersect(program.x2).total_value();
    delta.push_back(v1 - v2);
    value.push_back(set.total_value());
  }
  std::vector<std::vector<Rational>> a(2, std::vector<Rational>(sets.size()));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    a[0][j] = delta[j];
    a[1][j] = Rational(1);
  }
  const auto best = lp_max(a, {Rational(0), Rational(1)}, value);
  if (!best) throw std::runtime_error("program_oracle: infeasible program");
  return *best;
}

}  // namespace knapmech::testing

#endif  // KNAPMECH_TESTS_LP_ORACLE_HPP_
