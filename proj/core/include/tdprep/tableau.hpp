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

#ifndef TDPREP_TABLEAU_HPP
#define TDPREP_TABLEAU_HPP

#include <vector>

#include "tdprep/circuit.hpp"
#include "tdprep/gf2.hpp"
#include "tdprep/model.hpp"
#include "tdprep/pauli.hpp"

// Exact simulation of Clifford circuits on stabilizer states. The state is
// the full stabilizer group of a pure state: n generators on n qubits.
//
// Storage is transposed relative to the usual presentation: one bit vector
// per qubit, indexed by generator, so a gate touches two or four machine
// words per 64 generators.

namespace tdprep {

class Tableau {
  public:
    // The all-zeros computational basis state, stabilized by Z on each qubit.
    static Tableau zero_state(int n_qubits);

    int n_qubits() const { return n_; }

    void apply_h(int q);
    void apply_cx(int control, int target);
    void apply_x(int q);
    void apply_z(int q);
    void apply(const Gate& g);
    void run(const Circuit& circuit);

    // The g-th stabilizer generator as a signed Pauli operator.
    PauliOp generator(int g) const;

    // <P> for a signed Pauli: +1 or -1 when +-P is in the stabilizer group,
    // 0 when P anticommutes with some generator.
    int pauli_expectation(const PauliOp& p) const;

    // Unique generating set: Gauss-Jordan over the symplectic columns
    // X_0..X_{n-1}, Z_0..Z_{n-1} with exact sign tracking. Two tableaus
    // describe the same state iff their canonical lists match.
    std::vector<PauliOp> canonical() const;

  private:
    Tableau() = default;
    void check_qubit(int q) const;

    int n_ = 0;
    std::vector<gf2::BitVec> x_, z_;  // [qubit] -> bits over generators
    gf2::BitVec sign_;                // bit g set: generator g carries -1
};

bool states_equal(const Tableau& a, const Tableau& b);

struct StateCheck {
    std::vector<int> a_violations;  // A terms with expectation != +1
    std::vector<int> b_violations;  // B terms with expectation != +1
    std::size_t a_checked = 0;
    std::size_t b_checked = 0;

    bool pass() const { return a_violations.empty() && b_violations.empty(); }
};

// Expectation of every model term in the given state.
StateCheck check_code_state(const Tableau& t, const TdModel& model);

}  // namespace tdprep

#endif
