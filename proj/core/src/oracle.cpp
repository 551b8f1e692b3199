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

#include "tdprep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace tdprep {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

DenseState::DenseState(int n_qubits, int max_qubits) : n_(n_qubits) {
    if (n_qubits <= 0) {
        throw InvalidSize("dense state needs a positive qubit count");
    }
    if (n_qubits > max_qubits) {
        throw TooManyQubits("dense state on " + std::to_string(n_qubits) +
                            " qubits exceeds the cap of " +
                            std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, 0.0);
    amps_[0] = 1.0;
}

void DenseState::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(n_) + " qubits");
    }
}

double DenseState::norm() const {
    double s = 0.0;
    for (const std::complex<double>& a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void DenseState::normalize() {
    double s = norm();
    if (s == 0.0) {
        throw InvalidSize("cannot normalize the zero vector");
    }
    for (std::complex<double>& a : amps_) {
        a /= s;
    }
}

void DenseState::apply_h(int q) {
    check_qubit(q);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
        if (s & bit) {
            continue;
        }
        std::complex<double> a = amps_[s];
        std::complex<double> b = amps_[s | bit];
        amps_[s] = (a + b) * kSqrtHalf;
        amps_[s | bit] = (a - b) * kSqrtHalf;
    }
}

void DenseState::apply_cx(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw IndexError("CX control equals target");
    }
    std::size_t cbit = std::size_t{1} << control;
    std::size_t tbit = std::size_t{1} << target;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
        if ((s & cbit) && !(s & tbit)) {
            std::swap(amps_[s], amps_[s | tbit]);
        }
    }
}

void DenseState::apply_x(int q) {
    check_qubit(q);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
        if (!(s & bit)) {
            std::swap(amps_[s], amps_[s | bit]);
        }
    }
}

void DenseState::apply_z(int q) {
    check_qubit(q);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
        if (s & bit) {
            amps_[s] = -amps_[s];
        }
    }
}

void DenseState::apply_unitary1(int q,
                                const std::array<std::complex<double>, 4>& u) {
    check_qubit(q);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t s = 0; s < amps_.size(); ++s) {
        if (s & bit) {
            continue;
        }
        std::complex<double> a = amps_[s];
        std::complex<double> b = amps_[s | bit];
        amps_[s] = u[0] * a + u[1] * b;
        amps_[s | bit] = u[2] * a + u[3] * b;
    }
}

void DenseState::apply(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::H:
            apply_h(g.q0);
            break;
        case Gate::Kind::CX:
            apply_cx(g.q0, g.q1);
            break;
        case Gate::Kind::X:
            apply_x(g.q0);
            break;
        case Gate::Kind::Z:
            apply_z(g.q0);
            break;
    }
}

void DenseState::run(const Circuit& circuit) {
    if (circuit.n_qubits != n_) {
        throw DimensionMismatch("circuit register " +
                                std::to_string(circuit.n_qubits) +
                                " vs state on " + std::to_string(n_) +
                                " qubits");
    }
    for (const Layer& layer : circuit.layers) {
        for (const Segment& seg : layer.segments) {
            for (const Gate& g : seg.gates) {
                apply(g);
            }
        }
    }
}

void apply_pauli(DenseState& state, const PauliOp& p) {
    if (static_cast<int>(p.size()) != state.n_qubits()) {
        throw DimensionMismatch("operator size " + std::to_string(p.size()) +
                                " vs state on " +
                                std::to_string(state.n_qubits()) + " qubits");
    }
    int n = state.n_qubits();
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    int y_count = 0;
    for (int q = 0; q < n; ++q) {
        bool xb = p.x.get(q);
        bool zb = p.z.get(q);
        if (xb) {
            xmask |= std::size_t{1} << q;
        }
        if (zb) {
            zmask |= std::size_t{1} << q;
        }
        y_count += xb && zb;
    }
    // sigma_x|b> = |b^1>, sigma_z|b> = (-1)^b|b>, sigma_y|b> = i(-1)^b|b^1>.
    std::complex<double> front(p.sign, 0.0);
    switch (y_count & 3) {
        case 1:
            front *= std::complex<double>(0.0, 1.0);
            break;
        case 2:
            front = -front;
            break;
        case 3:
            front *= std::complex<double>(0.0, -1.0);
            break;
        default:
            break;
    }
    std::vector<std::complex<double>>& amps = state.data();
    std::vector<std::complex<double>> out(amps.size());
    for (std::size_t s = 0; s < amps.size(); ++s) {
        std::complex<double> v = front * amps[s];
        if (std::popcount(s & zmask) & 1) {
            v = -v;
        }
        out[s ^ xmask] = v;
    }
    amps.swap(out);
}

void apply_one_plus(DenseState& state, const PauliOp& p) {
    DenseState moved = state;
    apply_pauli(moved, p);
    std::vector<std::complex<double>>& amps = state.data();
    const std::vector<std::complex<double>>& add = moved.data();
    for (std::size_t s = 0; s < amps.size(); ++s) {
        amps[s] += add[s];
    }
}

std::complex<double> expectation(const DenseState& state, const PauliOp& p) {
    DenseState moved = state;
    apply_pauli(moved, p);
    std::complex<double> acc = 0.0;
    const std::vector<std::complex<double>>& a = state.data();
    const std::vector<std::complex<double>>& b = moved.data();
    for (std::size_t s = 0; s < a.size(); ++s) {
        acc += std::conj(a[s]) * b[s];
    }
    return acc;
}

double fidelity(const DenseState& a, const DenseState& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionMismatch("states on " + std::to_string(a.n_qubits()) +
                                " vs " + std::to_string(b.n_qubits()) +
                                " qubits");
    }
    std::complex<double> acc = 0.0;
    for (std::size_t s = 0; s < a.dim(); ++s) {
        acc += std::conj(a.data()[s]) * b.data()[s];
    }
    return std::abs(acc);
}

DenseState dense_run(const Circuit& circuit, int max_qubits) {
    DenseState state(circuit.n_qubits, max_qubits);
    state.run(circuit);
    return state;
}

DenseState dense_ewsc(const TdModel& model, const std::vector<int>& omega,
                      int max_qubits) {
    DenseState state(model.n_qubits(), max_qubits);
    std::vector<bool> seen(model.a_terms().size(), false);
    for (int i : omega) {
        if (i < 0 || i >= static_cast<int>(model.a_terms().size())) {
            throw IndexError("term index " + std::to_string(i) +
                             " out of range");
        }
        if (seen[i]) {
            throw IndexError("term index " + std::to_string(i) + " repeated");
        }
        seen[i] = true;
        apply_one_plus(state, model.a_terms()[i].op);
    }
    state.normalize();
    return state;
}

DenseState dense_ewsc(const TdModel& model, int max_qubits) {
    DenseState state(model.n_qubits(), max_qubits);
    for (const ATerm& a : model.a_terms()) {
        apply_one_plus(state, a.op);
    }
    std::size_t n_a = model.a_terms().size();
    std::size_t redundancy = n_a - gf2::rank(model.gx());
    double expected =
        std::pow(2.0, 0.5 * static_cast<double>(n_a + redundancy));
    if (std::abs(state.norm() - expected) > 1e-10 * expected) {
        throw InternalConsistencyError(
            "entangled-state norm does not match the counting identity");
    }
    state.normalize();
    return state;
}

bool tableau_crosscheck(const Tableau& t, const DenseState& state, double tol) {
    if (t.n_qubits() != state.n_qubits()) {
        throw DimensionMismatch("tableau on " + std::to_string(t.n_qubits()) +
                                " qubits, state on " +
                                std::to_string(state.n_qubits()));
    }
    for (const PauliOp& g : t.canonical()) {
        std::complex<double> e = expectation(state, g);
        if (std::abs(e - std::complex<double>(1.0, 0.0)) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace tdprep
