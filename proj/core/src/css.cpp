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

#include "tdprep/css.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace tdprep {

namespace {

// Incremental independence filter: keeps the original rows whose reduction
// against everything kept so far is nonzero.
class RankFilter {
  public:
    bool offer(const gf2::BitVec& row) {
        gf2::BitVec v = row;
        for (const auto& [pivot, basis] : basis_) {
            if (v.get(pivot)) {
                v.xor_in(basis);
            }
        }
        std::size_t pivot = v.lowest_set();
        if (pivot == v.size()) {
            return false;
        }
        basis_.emplace_back(pivot, std::move(v));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }

    // Reduce an arbitrary vector against the kept basis.
    gf2::BitVec reduce(gf2::BitVec v) const {
        for (const auto& [pivot, basis] : basis_) {
            if (v.get(pivot)) {
                v.xor_in(basis);
            }
        }
        return v;
    }

  private:
    std::vector<std::pair<std::size_t, gf2::BitVec>> basis_;
};

std::vector<int> row_support(const gf2::BitMat& m, std::size_t r) {
    std::vector<int> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.get(r, c)) {
            out.push_back(static_cast<int>(c));
        }
    }
    return out;
}

}  // namespace

CssCode load_css(const gf2::BitMat& gx, const gf2::BitMat& gz) {
    if (gx.cols() != gz.cols()) {
        throw DimensionMismatch("X rows have " + std::to_string(gx.cols()) +
                                " columns, Z rows have " +
                                std::to_string(gz.cols()));
    }
    std::size_t n = gx.cols();
    if (n == 0) {
        throw InvalidSize("code needs at least one qubit");
    }
    for (std::size_t i = 0; i < gx.rows(); ++i) {
        for (std::size_t j = 0; j < gz.rows(); ++j) {
            if (gf2::dot(gx.row(i), gz.row(j))) {
                throw NotCss("X row " + std::to_string(i) +
                             " anticommutes with Z row " + std::to_string(j));
            }
        }
    }
    if (gf2::rank(gx) != gx.rows()) {
        throw DependentGenerators("X generator rows are dependent");
    }
    if (gf2::rank(gz) != gz.rows()) {
        throw DependentGenerators("Z generator rows are dependent");
    }
    CssCode code;
    code.n = static_cast<int>(n);
    code.gx = gx;
    code.gz = gz;
    code.k = static_cast<int>(n - gx.rows() - gz.rows());
    return code;
}

bool validate_plan(const CssCode& code, const PrepPlan& plan) {
    std::size_t m = code.gx.rows();
    if (plan.representatives.size() != m || plan.order.size() != m) {
        throw InvalidPlan("plan size does not match the X generator count");
    }
    std::vector<bool> seen(m, false);
    for (int r : plan.order) {
        if (r < 0 || r >= static_cast<int>(m) || seen[r]) {
            throw InvalidPlan("order is not a permutation of the rows");
        }
        seen[r] = true;
    }
    for (int q : plan.representatives) {
        if (q < 0 || q >= code.n) {
            throw InvalidPlan("representative qubit out of range");
        }
    }
    std::vector<int> sorted = plan.representatives;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (std::size_t t = 0; t < m; ++t) {
        std::size_t row = static_cast<std::size_t>(plan.order[t]);
        if (!code.gx.get(row, plan.representatives[row])) {
            return false;
        }
        // No row may contain the representative of a later row.
        for (std::size_t s = t + 1; s < m; ++s) {
            int later_rep = plan.representatives[plan.order[s]];
            if (code.gx.get(row, later_rep)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<PrepPlan> greedy_plan(const CssCode& code) {
    std::size_t m = code.gx.rows();
    PrepPlan plan;
    plan.representatives.assign(m, -1);
    plan.order.assign(m, -1);

    std::vector<bool> remaining(m, true);
    std::vector<int> col_count(code.n, 0);
    std::vector<std::vector<int>> support(m);
    for (std::size_t i = 0; i < m; ++i) {
        support[i] = row_support(code.gx, i);
        for (int c : support[i]) {
            ++col_count[c];
        }
    }
    for (std::size_t filled = 0; filled < m; ++filled) {
        int pick = -1;
        int rep = -1;
        for (std::size_t i = 0; i < m && pick < 0; ++i) {
            if (!remaining[i]) {
                continue;
            }
            for (int c : support[i]) {
                if (col_count[c] == 1) {
                    pick = static_cast<int>(i);
                    rep = c;
                    break;
                }
            }
        }
        if (pick < 0) {
            return std::nullopt;
        }
        plan.order[m - 1 - filled] = pick;
        plan.representatives[pick] = rep;
        remaining[pick] = false;
        for (int c : support[pick]) {
            --col_count[c];
        }
    }
    return plan;
}

PrepSynthesis synth_prep(const CssCode& code, const PrepPlan& plan) {
    if (!validate_plan(code, plan)) {
        throw InvalidPlan("plan does not prepare the generator product");
    }
    PrepSynthesis out;
    out.code = code;
    out.plan = plan;
    Circuit& circuit = out.circuit;
    circuit.n_qubits = code.n;

    std::size_t m = code.gx.rows();
    if (m > 0) {
        Layer h;
        std::vector<int> reps = plan.representatives;
        std::sort(reps.begin(), reps.end());
        Segment seg;
        for (int q : reps) {
            seg.gates.push_back({Gate::Kind::H, q, -1});
        }
        h.segments.push_back(std::move(seg));
        circuit.layers.push_back(std::move(h));
    }
    for (std::size_t t = 0; t < m; ++t) {
        std::size_t row = static_cast<std::size_t>(plan.order[t]);
        int rep = plan.representatives[row];
        Layer layer;
        Segment seg;
        for (int c : row_support(code.gx, row)) {
            if (c != rep) {
                seg.gates.push_back({Gate::Kind::CX, rep, c});
            }
        }
        if (!seg.gates.empty()) {
            layer.segments.push_back(std::move(seg));
            circuit.layers.push_back(std::move(layer));
        }
    }
    return out;
}

PrepSynthesis synth_prep(const CssCode& code) {
    if (std::optional<PrepPlan> plan = greedy_plan(code)) {
        return synth_prep(code, *plan);
    }
    // Echelon fallback: swap in an equivalent basis whose pivots are
    // private by construction.
    gf2::RrefResult rr = gf2::rref(code.gx);
    CssCode rebased = code;
    std::vector<gf2::BitVec> rows;
    PrepPlan plan;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        rows.push_back(rr.r.row(i));
        plan.representatives.push_back(static_cast<int>(rr.pivots[i]));
        plan.order.push_back(static_cast<int>(i));
    }
    rebased.gx = gf2::BitMat::from_rows(rows);
    if (rows.empty()) {
        rebased.gx = gf2::BitMat(0, code.gx.cols());
    }
    return synth_prep(rebased, plan);
}

gf2::BitMat logical_x_basis(const CssCode& code) {
    gf2::BitMat kernel = gf2::right_kernel_basis(code.gz);
    RankFilter filter;
    for (std::size_t i = 0; i < code.gx.rows(); ++i) {
        filter.offer(code.gx.row(i));
    }
    std::vector<gf2::BitVec> logicals;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        if (filter.offer(kernel.row(i))) {
            logicals.push_back(kernel.row(i));
        }
    }
    if (static_cast<int>(logicals.size()) != code.k) {
        throw InternalConsistencyError("logical X count " +
                                       std::to_string(logicals.size()) +
                                       " does not match k = " +
                                       std::to_string(code.k));
    }
    if (logicals.empty()) {
        return gf2::BitMat(0, code.n);
    }
    return gf2::BitMat::from_rows(logicals);
}

bool uniqueness_check(const CssCode& code,
                      const std::vector<int>& representatives) {
    std::size_t m = code.gx.rows();
    if (representatives.size() != m) {
        throw InvalidPlan("plan size does not match the X generator count");
    }
    for (int q : representatives) {
        if (q < 0 || q >= code.n) {
            throw InvalidPlan("representative qubit out of range");
        }
    }
    gf2::BitMat sub(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            sub.set(i, j, code.gx.get(i, representatives[j]));
        }
    }
    return gf2::rank(sub) == m;
}

SeedReport find_seeds(const CssCode& code, const PrepPlan& plan) {
    if (!validate_plan(code, plan)) {
        throw InvalidPlan("plan does not prepare the generator product");
    }
    std::vector<std::size_t> preferred;
    for (int q : plan.representatives) {
        preferred.push_back(static_cast<std::size_t>(q));
    }
    gf2::RrefResult rr = gf2::rref(code.gx, preferred);
    std::vector<std::size_t> sorted_pivots = rr.pivots;
    std::sort(sorted_pivots.begin(), sorted_pivots.end());
    std::vector<std::size_t> sorted_reps = preferred;
    std::sort(sorted_reps.begin(), sorted_reps.end());
    if (sorted_pivots != sorted_reps) {
        throw InvalidPlan(
            "representative columns do not pin the X generators");
    }

    // Rewrite every logical off the representative columns. Reduction
    // against all pivot rows zeroes exactly those columns.
    gf2::BitMat logicals = logical_x_basis(code);
    std::vector<gf2::BitVec> reduced;
    for (std::size_t i = 0; i < logicals.rows(); ++i) {
        gf2::BitVec v = logicals.row(i);
        for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
            if (v.get(rr.pivots[j])) {
                v.xor_in(rr.r.row(j));
            }
        }
        reduced.push_back(std::move(v));
    }

    SeedReport report;
    report.unique = true;
    if (reduced.empty()) {
        report.logical_x = gf2::BitMat(0, code.n);
        report.u_g_prime.n_qubits = code.n;
        return report;
    }
    gf2::RrefResult canon = gf2::rref(gf2::BitMat::from_rows(reduced));
    if (canon.pivots.size() != reduced.size()) {
        throw InternalConsistencyError("logical X rows collapsed under rewriting");
    }
    std::vector<gf2::BitVec> rows;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        rows.push_back(canon.r.row(i));
        report.seed_qubits.push_back(static_cast<int>(canon.pivots[i]));
    }
    report.logical_x = gf2::BitMat::from_rows(rows);

    Circuit& ug = report.u_g_prime;
    ug.n_qubits = code.n;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Layer layer;
        layer.kind = Layer::Kind::growth;
        layer.index = static_cast<int>(i) + 1;
        Segment seg;
        seg.seed = report.seed_qubits[i];
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            if (rows[i].get(c) && static_cast<int>(c) != seg.seed) {
                seg.gates.push_back({Gate::Kind::CX, seg.seed, static_cast<int>(c)});
            }
        }
        layer.segments.push_back(std::move(seg));
        ug.layers.push_back(std::move(layer));
    }
    return report;
}

TdCss from_td(const TdModel& model, const UcSynthesis& uc) {
    TdCss out;
    std::vector<gf2::BitVec> x_rows;
    PrepPlan& plan = out.plan;
    for (int a : uc.order) {
        if (a < 0 || a >= static_cast<int>(model.a_terms().size()) ||
            uc.representative_of[a] < 0) {
            throw InvalidPlan("synthesis order names an unrepresented term");
        }
        x_rows.push_back(model.a_terms()[a].op.x);
        plan.representatives.push_back(uc.representative_of[a]);
        plan.order.push_back(static_cast<int>(plan.order.size()));
    }
    CssCode& code = out.code;
    code.n = model.n_qubits();
    code.gx = x_rows.empty() ? gf2::BitMat(0, model.n_qubits())
                             : gf2::BitMat::from_rows(x_rows);
    if (gf2::rank(code.gx) != code.gx.rows()) {
        throw InternalConsistencyError("represented X terms are dependent");
    }
    RankFilter filter;
    std::vector<gf2::BitVec> z_rows;
    for (const BTerm& b : model.b_terms()) {
        if (filter.offer(b.op.z)) {
            z_rows.push_back(b.op.z);
        }
    }
    code.gz = z_rows.empty() ? gf2::BitMat(0, model.n_qubits())
                             : gf2::BitMat::from_rows(z_rows);
    code.k = code.n - static_cast<int>(code.gx.rows() + code.gz.rows());
    return out;
}

}  // namespace tdprep
