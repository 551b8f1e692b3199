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

#ifndef TDPREP_MODEL_HPP
#define TDPREP_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdprep/gf2.hpp"
#include "tdprep/lattice.hpp"
#include "tdprep/pauli.hpp"

// Stabilizer models with one qubit per d_s-cell of a hypercubic lattice.
// An A term acts as X on every d_s-face of a D-cube; a B term acts as Z on
// the d_s-cells adjacent to a d_n-cell inside one of its dimension-d_l
// leaves. At an open boundary a B term keeps whatever part of its support
// exists and is dropped only when no support cell remains.

namespace tdprep {

struct TdParams {
    int d_n, d_s, d_l, D;

    bool operator==(const TdParams& o) const = default;
};

// Throws InvalidDimension unless 0 <= d_n < d_s <= d_l <= D and d_s <= D.
void validate(const TdParams& params);

// True when every A term commutes with every B term, for any lattice:
// adjacent supports always overlap in an even number of cells.
bool is_stabilizer_code(const TdParams& params);

struct ATerm {
    Cube cube;    // the D-cell
    PauliOp op;
};

struct BTerm {
    Cube node;    // the d_n-cell
    Leaf leaf;
    PauliOp op;
};

class TdModel {
  public:
    TdModel(Lattice lattice, TdParams params, std::vector<ATerm> a,
            std::vector<BTerm> b)
        : lattice_(std::move(lattice)),
          params_(params),
          a_terms_(std::move(a)),
          b_terms_(std::move(b)) {}

    const Lattice& lattice() const { return lattice_; }
    const TdParams& params() const { return params_; }
    int n_qubits() const {
        return static_cast<int>(lattice_.cell_count(params_.d_s));
    }
    const std::vector<ATerm>& a_terms() const { return a_terms_; }
    const std::vector<BTerm>& b_terms() const { return b_terms_; }

    // Canonical qubit numbering: the lexicographic d_s-cell index.
    int qubit(const Cube& cell) const;
    const Cube& qubit_cell(int q) const;

    gf2::BitMat gx() const;  // one row per A term
    gf2::BitMat gz() const;  // one row per B term
    bool fully_periodic() const;

  private:
    Lattice lattice_;
    TdParams params_;
    std::vector<ATerm> a_terms_;
    std::vector<BTerm> b_terms_;
};

TdModel build_model(const Lattice& lattice, const TdParams& params);

struct CommutationReport {
    bool commuting = true;
    std::vector<std::pair<int, int>> violations;  // (A index, B index)
};

CommutationReport check_commutation(const TdModel& model);

// log2 of the ground-space degeneracy, n - rank(Gx) - rank(Gz).
// Throws NotAStabilizerCode when some terms anticommute.
int log2_gsd(const TdModel& model);

// Number of independent relations among the A terms of a fully periodic
// [d-1, d, d+1, D] model, via the closed form summed over direction subsets;
// cross-checked against #A - rank(Gx), mismatch raises
// InternalConsistencyError.
long long a_redundancy_count(const TdModel& model);

// One generating relation class per choice of D - d_s - 1 directions held at
// a fixed half-integer coordinate: the A terms matching the pattern multiply
// to the identity. Verified during enumeration; a nonzero product raises
// RedundancyCheckFailed.
struct ReClass {
    std::vector<std::optional<int>> pattern;  // doubled coords; nullopt = free
    std::vector<int> a_indices;
};

std::vector<ReClass> enumerate_re_classes(const TdModel& model);

// Closed-form seed count of a periodic [d-1, d, d+1, D] model; equals the
// log2 ground-space degeneracy.
long long seed_count(const TdParams& params, const std::vector<int>& dims);

// For each d_s-cell of `sub`, its qubit index in `super` (cells matched by
// doubled coordinates). Throws InvalidLattice when a cell is missing.
std::vector<int> qubit_embedding(const TdModel& sub, const TdModel& super);

// Writes <prefix>.gx.txt, <prefix>.gz.txt and a JSON sidecar <prefix>.json
// holding parameters, extents, boundary kinds, and the cell legend for every
// qubit index.
void write_model(const TdModel& model, const std::string& prefix);

}  // namespace tdprep

#endif
