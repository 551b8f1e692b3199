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

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace tdprep {
namespace {

PauliOp op(int n, const char* s, int sign = +1) {
    PauliOp p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (s[i] == 'X' || s[i] == 'Y') p.x.set(i, true);
        if (s[i] == 'Z' || s[i] == 'Y') p.z.set(i, true);
    }
    p.sign = sign;
    return p;
}

TEST(TableauTest, ZeroState) {
    Tableau t = Tableau::zero_state(3);
    EXPECT_EQ(t.n_qubits(), 3);
    EXPECT_EQ(t.generator(0), op(3, "ZII"));
    EXPECT_EQ(t.generator(2), op(3, "IIZ"));
    EXPECT_EQ(t.pauli_expectation(op(3, "ZZI")), 1);
    EXPECT_EQ(t.pauli_expectation(op(3, "ZZI", -1)), -1);
    EXPECT_EQ(t.pauli_expectation(op(3, "XII")), 0);
    EXPECT_EQ(t.pauli_expectation(op(3, "III")), 1);
    EXPECT_THROW(Tableau::zero_state(0), InvalidSize);
    EXPECT_THROW(t.generator(3), IndexError);
    EXPECT_THROW(t.pauli_expectation(op(2, "ZZ")), DimensionMismatch);
}

TEST(TableauTest, PlusStateAndBell) {
    Tableau t = Tableau::zero_state(2);
    t.apply_h(0);
    EXPECT_EQ(t.pauli_expectation(op(2, "XI")), 1);
    EXPECT_EQ(t.pauli_expectation(op(2, "ZI")), 0);
    t.apply_cx(0, 1);
    // Bell pair: XX and ZZ stabilize, YY = -1.
    EXPECT_EQ(t.pauli_expectation(op(2, "XX")), 1);
    EXPECT_EQ(t.pauli_expectation(op(2, "ZZ")), 1);
    EXPECT_EQ(t.pauli_expectation(op(2, "YY")), -1);
    EXPECT_EQ(t.pauli_expectation(op(2, "XZ")), 0);
}

TEST(TableauTest, PauliGatesFlipSigns) {
    Tableau t = Tableau::zero_state(1);
    t.apply_x(0);  // |1>
    EXPECT_EQ(t.pauli_expectation(op(1, "Z")), -1);
    t.apply_h(0);  // |->
    EXPECT_EQ(t.pauli_expectation(op(1, "X")), -1);
    t.apply_z(0);  // |+>
    EXPECT_EQ(t.pauli_expectation(op(1, "X")), 1);
    EXPECT_THROW(t.apply_h(1), IndexError);
    EXPECT_THROW(t.apply_cx(0, 0), IndexError);
}

TEST(TableauTest, RunMatchesManualApplication) {
    Circuit c = parse_circuit("qubits 3\nH 0\n==\nCX 0 1\nX 2\n==\nZ 0\n");
    Tableau a = Tableau::zero_state(3);
    a.run(c);
    Tableau b = Tableau::zero_state(3);
    b.apply_h(0);
    b.apply_cx(0, 1);
    b.apply_x(2);
    b.apply_z(0);
    EXPECT_TRUE(states_equal(a, b));
    Circuit wrong;
    wrong.n_qubits = 2;
    EXPECT_THROW(a.run(wrong), DimensionMismatch);
}

TEST(TableauTest, HeisenbergConsistency) {
    // <0| P |0> = <U0| U P U^dag |U0>: propagating Paulis forward through
    // the circuit must agree with evolving the state.
    TdModel m = build_model(make_lattice(LatticeSpec::periodic({3, 3})),
                            TdParams{0, 1, 2, 2});
    UcSynthesis uc = synth_uc(m);
    Tableau prepared = Tableau::zero_state(m.n_qubits());
    prepared.run(uc.circuit);
    Tableau zero = Tableau::zero_state(m.n_qubits());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        PauliOp p(static_cast<std::size_t>(m.n_qubits()));
        for (int q = 0; q < m.n_qubits(); ++q) {
            p.x.set(q, rng() & 1);
            p.z.set(q, rng() & 1);
        }
        EXPECT_EQ(prepared.pauli_expectation(conjugate_through(uc.circuit, p)),
                  zero.pauli_expectation(p));
    }
}

TEST(TableauTest, CanonicalIsOrderIndependent) {
    // The same state reached two ways yields identical canonical generators.
    Tableau a = Tableau::zero_state(2);
    a.apply_h(0);
    a.apply_cx(0, 1);
    Tableau b = Tableau::zero_state(2);
    b.apply_h(1);
    b.apply_cx(1, 0);
    EXPECT_EQ(a.canonical(), b.canonical());
    EXPECT_TRUE(states_equal(a, b));

    // Orthogonal states differ.
    Tableau c = Tableau::zero_state(2);
    c.apply_x(0);
    EXPECT_FALSE(states_equal(a, c));
    // |01> vs |10>: same up to signs, still different states.
    Tableau d = Tableau::zero_state(2);
    d.apply_x(1);
    EXPECT_FALSE(states_equal(c, d));
    EXPECT_THROW(states_equal(a, Tableau::zero_state(3)), DimensionMismatch);
}

TEST(TableauTest, EquivalenceSurvivesGaugeChange) {
    // Multiplying the generating set through (CX between stabilized qubits
    // of a product state) must not change the canonical form.
    Tableau a = Tableau::zero_state(4);
    a.apply_h(1);
    a.apply_cx(1, 2);
    std::vector<PauliOp> canon = a.canonical();
    ASSERT_EQ(canon.size(), 4u);
    // Re-run with shuffled gate order reaching the same state.
    Tableau b = Tableau::zero_state(4);
    b.apply_h(1);
    b.apply_cx(1, 2);
    b.apply_cx(1, 2);
    b.apply_cx(1, 2);
    EXPECT_EQ(b.canonical(), canon);
}

TEST(CodeStateTest, PreparationFixesEveryTerm) {
    for (auto [params, dims] :
         {std::pair<TdParams, std::vector<int>>{{0, 1, 2, 2}, {4, 4}},
          {{0, 1, 2, 2}, {5, 3}},
          {{0, 1, 2, 3}, {2, 3, 3}},
          {{1, 2, 3, 3}, {3, 3, 2}},
          {{2, 3, 4, 4}, {2, 2, 2, 2}}}) {
        TdModel m = build_model(
            make_lattice(LatticeSpec::periodic(dims)), params);
        Tableau t = Tableau::zero_state(m.n_qubits());
        t.run(synth_uc(m).circuit);
        StateCheck check = check_code_state(t, m);
        EXPECT_TRUE(check.pass());
        EXPECT_EQ(check.a_checked, m.a_terms().size());
        EXPECT_EQ(check.b_checked, m.b_terms().size());
    }
}

TEST(CodeStateTest, ViolationsAreReported) {
    TdModel m = build_model(make_lattice(LatticeSpec::periodic({3, 3})),
                            TdParams{0, 1, 2, 2});
    Tableau t = Tableau::zero_state(m.n_qubits());
    StateCheck check = check_code_state(t, m);
    // |0...0> satisfies every Z term and no X term has a definite value.
    EXPECT_TRUE(check.b_violations.empty());
    EXPECT_EQ(check.a_violations.size(), m.a_terms().size());

    t.run(synth_uc(m).circuit);
    t.apply_z(0);  // inject an error on one edge
    StateCheck after = check_code_state(t, m);
    EXPECT_FALSE(after.pass());
    EXPECT_FALSE(after.a_violations.empty());
    EXPECT_TRUE(after.b_violations.empty());  // Z errors hide from Z terms
    EXPECT_THROW(check_code_state(Tableau::zero_state(2), m),
                 DimensionMismatch);
}

TEST(CodeStateTest, LogicalSectorAfterGrowth) {
    // Seeding before growth and preparation lands in a different logical
    // sector of the same code.
    TdModel m = build_model(make_lattice(LatticeSpec::periodic({3, 3})),
                            TdParams{0, 1, 2, 2});
    SeedPlan plan = make_seed_plan(m);
    Circuit uc = synth_uc(m).circuit;

    Tableau plainest = Tableau::zero_state(m.n_qubits());
    plainest.run(uc);

    Circuit ent = seed_entangler(EntanglerSpec::basis({true, false}),
                                 plan.seed_qubits, m.n_qubits());
    Circuit full = concat(concat(ent, plan.growth), uc);
    Tableau seeded = Tableau::zero_state(m.n_qubits());
    seeded.run(full);

    EXPECT_TRUE(check_code_state(plainest, m).pass());
    EXPECT_TRUE(check_code_state(seeded, m).pass());
    EXPECT_FALSE(states_equal(plainest, seeded));
}

TEST(CodeStateTest, GhzFixesTheLogicalProduct) {
    TdModel m = build_model(make_lattice(LatticeSpec::periodic({3, 3})),
                            TdParams{0, 1, 2, 2});
    SeedPlan plan = make_seed_plan(m);
    Circuit ent = seed_entangler(EntanglerSpec::ghz(), plan.seed_qubits,
                                 m.n_qubits());
    Circuit full = concat(concat(ent, plan.growth), synth_uc(m).circuit);
    Tableau t = Tableau::zero_state(m.n_qubits());
    t.run(full);
    EXPECT_TRUE(check_code_state(t, m).pass());
    // Entangled logical register: single logicals are undetermined, the
    // product over all of them is fixed.
    PauliOp product(static_cast<std::size_t>(m.n_qubits()));
    for (const PauliOp& lx : plan.logical_ops) {
        EXPECT_EQ(t.pauli_expectation(lx), 0);
        product = mul(product, lx);
    }
    EXPECT_EQ(t.pauli_expectation(product), 1);
}

}  // namespace
}  // namespace tdprep
