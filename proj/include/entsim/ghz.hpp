// Copyright 2026 The entsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace entsim {

/// A joint pre-assignment of all six three-particle spin values: sx[k] and
/// sy[k] in {-1, +1} for particles k = 1..3 (0-indexed storage).
struct AssignmentTable {
  std::array<int, 3> sx;
  std::array<int, 3> sy;
};

/// Which of the four parity constraints a table satisfies. eplus[i] is true
/// iff the triple product with the x measurement on particle i+1 equals +1;
/// eminus is true iff sx(1)*sx(2)*sx(3) = -1.
struct ConstraintReport {
  std::array<bool, 3> eplus;
  bool eminus;

  bool all() const { return eplus[0] && eplus[1] && eplus[2] && eminus; }
};

/// All 64 tables, in lexicographic order over (sx, sy) with -1 < +1. The
/// first table is all -1.
std::vector<AssignmentTable> enumerate_assignments();

ConstraintReport check_constraints(const AssignmentTable &table);

/// Tables satisfying the selected constraint groups. Exhaustive over all 64.
int count_satisfying(bool require_eplus, bool require_eminus);

/// Tables satisfying all four constraints. The headline check: this is 0.
int count_satisfying_all();

/// Exhaustive verification of the two no-pre-assigned-values arguments.
///
/// First form: every choice of the three y values admits zero completing
/// x triples under all four constraints (the three +1 parities force
/// sx(1)sx(2)sx(3) = +1, clashing with the -1 parity).
///
/// Second form: every x triple with product -1, combined with any first
/// measured y value, propagates through the +1 parities to a contradiction,
/// so zero consistent y completions exist in any branch.
struct LemmaReport {
  int sy_triples_checked = 0;       // 8
  int sy_triples_with_completion = 0;  // must be 0
  int x_branches_checked = 0;       // 4 x triples * 3 positions * 2 values = 24
  int x_branches_consistent = 0;    // must be 0
  bool first_form_holds = false;
  bool second_form_holds = false;
};

LemmaReport lemma_checks();

/// Eigenvalue verification of the four triple-spin observables against the
/// exact state engine: XYY, YXY, YYX carry +1 and XXX carries -1.
struct GhzEigenCheck {
  std::string observable;  // e.g. "XYY"
  double expected;
  double eigenvalue;  // from the state engine, NaN if not an eigenvector
  double residual;    // ||A psi - <A> psi||
  bool ok;
};

std::array<GhzEigenCheck, 4> verify_ghz_eigenvalues();

}  // namespace entsim
