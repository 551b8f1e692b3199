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

#ifndef TDPREP_ORACLE_HPP
#define TDPREP_ORACLE_HPP

#include <array>
#include <complex>
#include <vector>

#include "tdprep/circuit.hpp"
#include "tdprep/model.hpp"
#include "tdprep/pauli.hpp"
#include "tdprep/tableau.hpp"

// Brute-force state vectors for cross-checking the bit-level machinery on
// small registers. Everything here is O(2^n) and guarded by a qubit cap.

namespace tdprep {

class DenseState {
  public:
    // The all-zeros state on n qubits. Basis index bit q is qubit q.
    explicit DenseState(int n_qubits, int max_qubits = 22);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    std::vector<std::complex<double>>& data() { return amps_; }
    const std::vector<std::complex<double>>& data() const { return amps_; }

    double norm() const;
    void normalize();  // InvalidSize on the zero vector

    void apply_h(int q);
    void apply_cx(int control, int target);
    void apply_x(int q);
    void apply_z(int q);
    // Arbitrary single-qubit unitary, row-major {u00, u01, u10, u11}.
    void apply_unitary1(int q, const std::array<std::complex<double>, 4>& u);
    void apply(const Gate& g);
    void run(const Circuit& circuit);

  private:
    void check_qubit(int q) const;

    int n_ = 0;
    std::vector<std::complex<double>> amps_;
};

// |psi> <- P|psi> and |psi> <- (1 + P)|psi>; the latter is unnormalized.
void apply_pauli(DenseState& state, const PauliOp& p);
void apply_one_plus(DenseState& state, const PauliOp& p);

// <psi|P|psi> (complex; real for Hermitian P and normalized psi).
std::complex<double> expectation(const DenseState& state, const PauliOp& p);

// |<a|b>|, insensitive to global phase.
double fidelity(const DenseState& a, const DenseState& b);

// Run a circuit from |0...0>.
DenseState dense_run(const Circuit& circuit, int max_qubits = 22);

// Normalized product prod_{i in omega} (1 + A_i) |0...0> over the listed
// X-type terms. The full-product overload additionally checks the exact
// norm identity ||prod (1+A)|0>|| = 2^((#A + redundancy)/2) and throws
// InternalConsistencyError if the computed state misses it.
DenseState dense_ewsc(const TdModel& model, const std::vector<int>& omega,
                      int max_qubits = 22);
DenseState dense_ewsc(const TdModel& model, int max_qubits = 22);

// True when every canonical stabilizer of `t` has dense expectation within
// tol of +1, i.e. the two simulations agree on the state.
bool tableau_crosscheck(const Tableau& t, const DenseState& state,
                        double tol = 1e-10);

}  // namespace tdprep

#endif
