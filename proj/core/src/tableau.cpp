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

#include "tdprep/tableau.hpp"

#include <string>
#include <utility>

namespace tdprep {

Tableau Tableau::zero_state(int n_qubits) {
    if (n_qubits <= 0) {
        throw InvalidSize("tableau needs a positive qubit count");
    }
    Tableau t;
    t.n_ = n_qubits;
    t.x_.assign(n_qubits, gf2::BitVec(n_qubits));
    t.z_.assign(n_qubits, gf2::BitVec(n_qubits));
    t.sign_ = gf2::BitVec(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        t.z_[q].set(q, true);  // generator q is Z_q
    }
    return t;
}

void Tableau::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(n_) + " qubits");
    }
}

void Tableau::apply_h(int q) {
    check_qubit(q);
    gf2::BitVec& x = x_[q];
    gf2::BitVec& z = z_[q];
    for (std::size_t w = 0; w < sign_.word_count(); ++w) {
        uint64_t xw = x.word(w);
        uint64_t zw = z.word(w);
        sign_.word(w) ^= xw & zw;
        x.word(w) = zw;
        z.word(w) = xw;
    }
}

void Tableau::apply_cx(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw IndexError("CX control equals target");
    }
    gf2::BitVec& xc = x_[control];
    gf2::BitVec& zc = z_[control];
    gf2::BitVec& xt = x_[target];
    gf2::BitVec& zt = z_[target];
    for (std::size_t w = 0; w < sign_.word_count(); ++w) {
        uint64_t a = xc.word(w);
        uint64_t b = zc.word(w);
        uint64_t c = xt.word(w);
        uint64_t d = zt.word(w);
        sign_.word(w) ^= a & d & ~(c ^ b);
        xt.word(w) = c ^ a;
        zc.word(w) = b ^ d;
    }
}

void Tableau::apply_x(int q) {
    check_qubit(q);
    sign_.xor_in(z_[q]);
}

void Tableau::apply_z(int q) {
    check_qubit(q);
    sign_.xor_in(x_[q]);
}

void Tableau::apply(const Gate& g) {
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

void Tableau::run(const Circuit& circuit) {
    if (circuit.n_qubits != n_) {
        throw DimensionMismatch("circuit register " +
                                std::to_string(circuit.n_qubits) + " vs tableau " +
                                std::to_string(n_));
    }
    for (const Layer& layer : circuit.layers) {
        for (const Segment& seg : layer.segments) {
            for (const Gate& g : seg.gates) {
                apply(g);
            }
        }
    }
}

PauliOp Tableau::generator(int g) const {
    if (g < 0 || g >= n_) {
        throw IndexError("generator " + std::to_string(g) + " out of range");
    }
    PauliOp p(static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) {
        if (x_[q].get(g)) {
            p.x.set(q, true);
        }
        if (z_[q].get(g)) {
            p.z.set(q, true);
        }
    }
    p.sign = sign_.get(g) ? -1 : +1;
    return p;
}

int Tableau::pauli_expectation(const PauliOp& p) const {
    if (static_cast<int>(p.size()) != n_) {
        throw DimensionMismatch("operator size " + std::to_string(p.size()) +
                                " vs tableau " + std::to_string(n_));
    }
    // Generator g anticommutes with p iff bit g of acc ends up set.
    gf2::BitVec acc(n_);
    for (int q = 0; q < n_; ++q) {
        if (p.z.get(q)) {
            acc.xor_in(x_[q]);
        }
        if (p.x.get(q)) {
            acc.xor_in(z_[q]);
        }
    }
    if (!acc.none()) {
        return 0;
    }
    // p commutes with the whole group, so its word is a product of
    // generators. Recover the combination and track the sign.
    gf2::BitMat rows(n_, 2 * static_cast<std::size_t>(n_));
    for (int g = 0; g < n_; ++g) {
        for (int q = 0; q < n_; ++q) {
            rows.set(g, q, x_[q].get(g));
            rows.set(g, static_cast<std::size_t>(n_) + q, z_[q].get(g));
        }
    }
    gf2::BitVec v(2 * static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) {
        v.set(q, p.x.get(q));
        v.set(static_cast<std::size_t>(n_) + q, p.z.get(q));
    }
    std::optional<gf2::BitVec> combo = gf2::solve_membership(rows, v);
    if (!combo) {
        throw InternalConsistencyError(
            "commuting Pauli is not in the stabilizer row space");
    }
    PauliOp product(static_cast<std::size_t>(n_));  // identity, sign +1
    for (int g = 0; g < n_; ++g) {
        if (combo->get(g)) {
            product = mul(product, generator(g));
        }
    }
    if (!(product.x == p.x) || !(product.z == p.z)) {
        throw InternalConsistencyError("membership solve gave the wrong word");
    }
    return product.sign == p.sign ? +1 : -1;
}

std::vector<PauliOp> Tableau::canonical() const {
    std::vector<PauliOp> gens;
    gens.reserve(n_);
    for (int g = 0; g < n_; ++g) {
        gens.push_back(generator(g));
    }
    std::size_t n = static_cast<std::size_t>(n_);
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * n && r < n; ++col) {
        bool is_x = col < n;
        std::size_t q = is_x ? col : col - n;
        auto bit = [&](const PauliOp& p) {
            return is_x ? p.x.get(q) : p.z.get(q);
        };
        std::size_t piv = r;
        while (piv < n && !bit(gens[piv])) {
            ++piv;
        }
        if (piv == n) {
            continue;
        }
        std::swap(gens[r], gens[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != r && bit(gens[i])) {
                gens[i] = mul(gens[i], gens[r]);
            }
        }
        ++r;
    }
    if (r != n) {
        throw InternalConsistencyError("stabilizer generators are dependent");
    }
    return gens;
}

bool states_equal(const Tableau& a, const Tableau& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionMismatch("states on " + std::to_string(a.n_qubits()) +
                                " vs " + std::to_string(b.n_qubits()) +
                                " qubits");
    }
    std::vector<PauliOp> ca = a.canonical();
    std::vector<PauliOp> cb = b.canonical();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!(ca[i] == cb[i])) {
            return false;
        }
    }
    return true;
}

StateCheck check_code_state(const Tableau& t, const TdModel& model) {
    if (t.n_qubits() != model.n_qubits()) {
        throw DimensionMismatch("state on " + std::to_string(t.n_qubits()) +
                                " qubits, model has " +
                                std::to_string(model.n_qubits()));
    }
    StateCheck out;
    const std::vector<ATerm>& as = model.a_terms();
    const std::vector<BTerm>& bs = model.b_terms();
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (t.pauli_expectation(as[i].op) != 1) {
            out.a_violations.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (t.pauli_expectation(bs[i].op) != 1) {
            out.b_violations.push_back(static_cast<int>(i));
        }
    }
    out.a_checked = as.size();
    out.b_checked = bs.size();
    return out;
}

}  // namespace tdprep
