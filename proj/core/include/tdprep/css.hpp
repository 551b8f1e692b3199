// Copyright 2026 The tdprep Authors
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

#ifndef TDPREP_CSS_HPP
#define TDPREP_CSS_HPP

#include <optional>
#include <vector>

#include "tdprep/circuit.hpp"
#include "tdprep/gf2.hpp"
#include "tdprep/model.hpp"

// Generic CSS codes and seed finding. A code is given by X- and Z-type
// generator matrices over GF(2); the machinery below synthesizes a
// Hadamard+CNOT preparation circuit for the +1 eigenstate of all generators
// and Z-type logicals, then locates seed qubits: one qubit per logical
// whose X, grown by a commuting CNOT fan applied before the preparation
// circuit, becomes that logical X.

namespace tdprep {

struct CssCode {
    int n = 0;          // physical qubits
    gf2::BitMat gx, gz; // generator rows, independent within each matrix
    int k = 0;          // logical qubits, n - rows(gx) - rows(gz)
};

// Checks column counts, pairwise commutation (NotCss), and row independence
// within each matrix (DependentGenerators).
CssCode load_css(const gf2::BitMat& gx, const gf2::BitMat& gz);

// How to prepare prod_i (1 + G_i)|0...0>: put one representative qubit per
// X generator into |+>, then fan each row out of its representative, rows
// applied in `order`. Valid iff representatives are distinct, each row
// contains its own representative, and no row contains the representative
// of a row applied later.
struct PrepPlan {
    std::vector<int> representatives;  // per gx row
    std::vector<int> order;            // row indices, first applied first
};

// False on a plan that breaks the conditions above; InvalidPlan on one that
// is structurally malformed (wrong sizes, order not a permutation,
// representative out of range).
bool validate_plan(const CssCode& code, const PrepPlan& plan);

// Repeatedly finds a row owning a column private to it among the remaining
// rows and schedules that row last. Empty result when the greedy search
// gets stuck.
std::optional<PrepPlan> greedy_plan(const CssCode& code);

struct PrepSynthesis {
    Circuit circuit;
    CssCode code;  // gx may be replaced by an equivalent row basis
    PrepPlan plan;
};

// With an explicit plan: InvalidPlan unless validate_plan passes. Without:
// greedy first, then a reduced-row-echelon fallback whose pivots serve as
// representatives (this rewrites gx to the echelon basis).
PrepSynthesis synth_prep(const CssCode& code);
PrepSynthesis synth_prep(const CssCode& code, const PrepPlan& plan);

// A basis of X-type logical operators: rows commuting with every Z
// generator, independent modulo the X row space. k rows.
gf2::BitMat logical_x_basis(const CssCode& code);

// True iff the representative columns of gx form a full-rank square
// submatrix, i.e. every logical class has exactly one member supported
// away from all representatives.
bool uniqueness_check(const CssCode& code,
                      const std::vector<int>& representatives);

struct SeedReport {
    std::vector<int> seed_qubits;  // one per logical, ascending
    gf2::BitMat logical_x;         // row per seed, zero on representatives
    Circuit u_g_prime;             // commuting CNOT fans seed -> support
    bool unique = false;
};

// The seed-finding pass for a planned code: rewrite each logical X off the
// representative columns, echelonize, and read seeds off the pivots.
SeedReport find_seeds(const CssCode& code, const PrepPlan& plan);

struct TdCss {
    CssCode code;
    PrepPlan plan;
};

// View a lattice model through the generic interface: X rows are the
// represented terms in circuit application order, Z rows an independent
// subset of the Z terms, the plan mirrors the synthesized sweep.
TdCss from_td(const TdModel& model, const UcSynthesis& uc);

}  // namespace tdprep

#endif
