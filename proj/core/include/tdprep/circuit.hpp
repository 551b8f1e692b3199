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

#ifndef TDPREP_CIRCUIT_HPP
#define TDPREP_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdprep/model.hpp"

// Layered Clifford circuits for code-state preparation.
//
// The preparation circuit works outward from one representative qubit per
// top-dimensional cell: a Hadamard layer puts every representative into |+>,
// then sweeps of CNOT fans copy each cell's X support onto its faces. Gates
// within a layer act on such supports in parallel; layers run sequentially.

namespace tdprep {

struct Gate {
    enum class Kind : uint8_t { H, CX, X, Z };
    Kind kind;
    int q0 = -1;  // the qubit; control for CX
    int q1 = -1;  // CX target

    bool operator==(const Gate& o) const = default;
};

// The gates a layer owes to one synthesis unit. Sweep layers carry the
// direction subset ("part") they serve; growth layers carry the owning seed.
struct Segment {
    std::vector<int> part;  // 0-based directions; meaningful when tagged
    int seed = -1;          // seed qubit for growth segments
    std::vector<Gate> gates;

    bool operator==(const Segment& o) const = default;
};

struct Layer {
    enum class Kind : uint8_t { plain, uc, growth, entangler };
    Kind kind = Kind::plain;
    int step = -1;   // uc: 0 for the Hadamard layer, then 1..d+1
    int index = -1;  // uc/growth: 1-based position within the step
    std::vector<Segment> segments;

    bool operator==(const Layer& o) const = default;
};

struct CircuitMeta {
    std::optional<TdParams> td;
    std::vector<int> dims;
    std::vector<Boundary> boundary;

    bool operator==(const CircuitMeta& o) const = default;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Layer> layers;
    CircuitMeta meta;

    std::size_t gate_count() const;
    std::size_t count_layers_with(Gate::Kind kind) const;

    bool operator==(const Circuit& o) const = default;
};

// Concatenation; both operands must act on the same register.
Circuit concat(const Circuit& a, const Circuit& b);

// Heisenberg propagation U P U^dagger through the whole circuit.
PauliOp conjugate_through(const Circuit& circuit, PauliOp p);

// The cell obtained by lowering `cube` half a step along the first
// D - d_s directions of the complement of `dirs`; `dirs` must be half-step
// boundary directions of the cube (doubled coordinate 2L-1). This maps each
// top cell to the qubit that will source its X support.
Cube representative(const Lattice& lat, const Cube& cube,
                    const std::vector<int>& dirs, int d_s);

struct UcSynthesis {
    Circuit circuit;
    // A-term index -> representative qubit; -1 for cells that get none.
    std::vector<int> representative_of;
    // Represented A-term indices in gate application order.
    std::vector<int> order;
};

// Preparation circuit for the code state of a stabilizer model on a fully
// periodic lattice. Throws UnsupportedModel otherwise.
UcSynthesis synth_uc(const TdModel& model);

// Removes every sweep part meeting an open direction, along with the
// Hadamards of the removed parts, and marks those directions open in the
// metadata. Cut cells keep their qubits but are never touched. `open_dirs`
// is 0-based. Throws MissingTags when the circuit lacks sweep tags.
Circuit truncate_uc(const Circuit& circuit, const std::vector<int>& open_dirs);

// Seed machinery; all of it requires a fully periodic [d-1, d, d+1, D] model.

// The d_s-cells whose X grows into a logical representative: all spanned
// coordinates at -1/2 and at least one transverse coordinate at -1.
std::vector<Cube> seed_set(const TdModel& model);

// Pure X on every d_s-cell of the seed's axis-aligned leaf.
PauliOp logical_x(const TdModel& model, const Cube& seed);

// Growth circuit: per seed, CNOT sweeps extend the seed X along its spanned
// axes until it covers the whole leaf. Distinct seeds act on disjoint
// qubits and share layers by position. Defaults to the full seed set;
// a subset must consist of seed cells (InvalidSeeds otherwise).
Circuit synth_ug(const TdModel& model);
Circuit synth_ug(const TdModel& model, const std::vector<Cube>& seeds);

struct SeedPlan {
    std::vector<Cube> seed_cells;    // canonical order
    std::vector<int> seed_qubits;
    std::vector<PauliOp> logical_ops;
    Circuit growth;
};

SeedPlan make_seed_plan(const TdModel& model);

struct EntanglerSpec {
    enum class Kind : uint8_t { basis_pattern, ghz, custom };
    Kind kind = Kind::basis_pattern;
    std::vector<bool> pattern;  // basis_pattern: one bit per seed
    Circuit custom;             // custom: gates restricted to seed qubits

    static EntanglerSpec basis(std::vector<bool> bits);
    static EntanglerSpec ghz();
    static EntanglerSpec clifford(Circuit c);
};

// Logical-register initialization acting on seed qubits only.
//   basis_pattern: X on the selected seeds.
//   ghz: Hadamard on the first seed, then a CNOT chain down the seed list.
//   custom: any circuit on the seed qubits (SeedSetViolation otherwise).
Circuit seed_entangler(const EntanglerSpec& spec,
                       const std::vector<int>& seed_qubits, int n_qubits);

// Text round trip. The format is line based: a "qubits N" header, layers
// separated by "==" lines, one gate per line ("H 3", "CX 0 7", "X 1", "Z 2"),
// with '#' comment lines carrying layer and segment tags.
std::string to_text(const Circuit& circuit);
Circuit parse_circuit(const std::string& text);

}  // namespace tdprep

#endif
