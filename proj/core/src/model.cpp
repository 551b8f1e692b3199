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

#include "tdprep/model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

namespace tdprep {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

bool is_seed_family(const TdParams& p) {
    return p.d_n == p.d_s - 1 && p.d_l == p.d_s + 1;
}

void require_seed_family(const TdModel& model, const char* op) {
    const TdParams& p = model.params();
    if (!is_seed_family(p)) {
        throw UnsupportedModel(std::string(op) +
                               ": defined for [d-1, d, d+1, D] models only");
    }
    if (!model.fully_periodic()) {
        throw UnsupportedModel(std::string(op) +
                               ": defined for fully periodic lattices only");
    }
}

// Sum over all `size`-subsets S of {0..D-1} of prod_{i in S} (L_i - 1),
// i.e. the elementary symmetric polynomial in the (L_i - 1).
long long subset_products(const std::vector<int>& dims, int size) {
    int D = static_cast<int>(dims.size());
    std::vector<long long> e(size + 1, 0);
    e[0] = 1;
    for (int i = 0; i < D; ++i) {
        for (int k = std::min(size, i + 1); k >= 1; --k) {
            e[k] += e[k - 1] * (dims[i] - 1);
        }
    }
    return e[size];
}

}  // namespace

void validate(const TdParams& p) {
    if (!(0 <= p.d_n && p.d_n < p.d_s && p.d_s <= p.d_l && p.d_l <= p.D)) {
        throw InvalidDimension(
            "model parameters must satisfy 0 <= d_n < d_s <= d_l <= D, got [" +
            std::to_string(p.d_n) + "," + std::to_string(p.d_s) + "," +
            std::to_string(p.d_l) + "," + std::to_string(p.D) + "]");
    }
}

bool is_stabilizer_code(const TdParams& p) {
    validate(p);
    // An A and B term overlap on C(d_l - d_n, d_s - d_n) cells when the B
    // node touches the A cube inside a shared leaf; even overlap <=>
    // commuting.
    return binomial(p.d_l - p.d_n, p.d_s - p.d_n) % 2 == 0;
}

int TdModel::qubit(const Cube& cell) const {
    if (cell.dim() != params_.d_s) {
        throw InvalidDimension("qubit cells have dimension " +
                               std::to_string(params_.d_s) + ", got " +
                               std::to_string(cell.dim()));
    }
    return lattice_.index_of(cell);
}

const Cube& TdModel::qubit_cell(int q) const {
    if (q < 0 || q >= n_qubits()) {
        throw IndexError("qubit " + std::to_string(q) + " out of range");
    }
    return lattice_.cells(params_.d_s)[q];
}

gf2::BitMat TdModel::gx() const {
    gf2::BitMat m(a_terms_.size(), n_qubits());
    for (std::size_t i = 0; i < a_terms_.size(); ++i) {
        m.set_row(i, a_terms_[i].op.x);
    }
    return m;
}

gf2::BitMat TdModel::gz() const {
    gf2::BitMat m(b_terms_.size(), n_qubits());
    for (std::size_t i = 0; i < b_terms_.size(); ++i) {
        m.set_row(i, b_terms_[i].op.z);
    }
    return m;
}

bool TdModel::fully_periodic() const {
    for (int i = 0; i < lattice_.dim(); ++i) {
        if (!lattice_.periodic(i)) {
            return false;
        }
    }
    return true;
}

TdModel build_model(const Lattice& lattice, const TdParams& params) {
    validate(params);
    if (lattice.dim() != params.D) {
        throw InvalidDimension("model dimension " + std::to_string(params.D) +
                               " does not match lattice dimension " +
                               std::to_string(lattice.dim()));
    }
    std::size_t n = lattice.cell_count(params.d_s);

    std::vector<ATerm> a_terms;
    for (const Cube& cube : lattice.cells(params.D)) {
        gf2::BitVec support(n);
        for (const Cube& f : faces(lattice, cube, params.d_s)) {
            support.set(lattice.index_of(f), true);
        }
        a_terms.push_back({cube, pure_x(n, support)});
    }

    std::vector<BTerm> b_terms;
    for (const Cube& node : lattice.cells(params.d_n)) {
        for (const Leaf& leaf : leaves_through(lattice, node, params.d_l)) {
            gf2::BitVec support(n);
            for (const Cube& g : cofaces_in_leaf(lattice, node, params.d_s, leaf)) {
                support.set(lattice.index_of(g), true);
            }
            if (support.none()) {
                continue;  // support lies entirely off an open boundary
            }
            b_terms.push_back({node, leaf, pure_z(n, support)});
        }
    }

    return TdModel(lattice, params, std::move(a_terms), std::move(b_terms));
}

CommutationReport check_commutation(const TdModel& model) {
    CommutationReport report;
    const auto& as = model.a_terms();
    const auto& bs = model.b_terms();
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (!commutes(as[i].op, bs[j].op)) {
                report.commuting = false;
                report.violations.emplace_back(static_cast<int>(i),
                                               static_cast<int>(j));
            }
        }
    }
    return report;
}

int log2_gsd(const TdModel& model) {
    if (!check_commutation(model).commuting) {
        throw NotAStabilizerCode("some A and B terms anticommute");
    }
    std::size_t rx = gf2::rank(model.gx());
    std::size_t rz = gf2::rank(model.gz());
    return model.n_qubits() - static_cast<int>(rx) - static_cast<int>(rz);
}

long long a_redundancy_count(const TdModel& model) {
    require_seed_family(model, "a_redundancy_count");
    const auto& dims = model.lattice().spec().extents;
    int d_star = model.params().D - model.params().d_s;
    long long count = 0;
    for (int p = 0; p < d_star; ++p) {
        count += subset_products(dims, p);
    }
    std::size_t rx = gf2::rank(model.gx());
    long long by_rank = static_cast<long long>(model.a_terms().size()) -
                        static_cast<long long>(rx);
    if (by_rank != count) {
        throw InternalConsistencyError(
            "A-term redundancy mismatch: closed form " + std::to_string(count) +
            ", rank deficit " + std::to_string(by_rank));
    }
    return count;
}

std::vector<ReClass> enumerate_re_classes(const TdModel& model) {
    require_seed_family(model, "enumerate_re_classes");
    const Lattice& lat = model.lattice();
    int D = lat.dim();
    int fixed = D - model.params().d_s - 1;

    // Choose the directions held fixed, then their half-integer coordinates.
    std::vector<ReClass> out;
    std::vector<int> pick(D, 0);
    std::fill(pick.begin(), pick.begin() + fixed, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        std::vector<int> dirs;
        for (int i = 0; i < D; ++i) {
            if (pick[i]) {
                dirs.push_back(i);
            }
        }
        std::vector<std::optional<int>> pattern(D);
        auto sweep = [&](auto&& self, std::size_t k) -> void {
            if (k == dirs.size()) {
                ReClass cls;
                cls.pattern = pattern;
                gf2::BitVec prod(model.n_qubits());
                for (const Cube& cube : star_expand(lat, pattern, D)) {
                    int idx = static_cast<int>(lat.index_of(cube));
                    // A terms are enumerated in cell order, so the D-cell
                    // index is the A index.
                    cls.a_indices.push_back(idx);
                    prod.xor_in(model.a_terms()[idx].op.x);
                }
                if (!prod.none()) {
                    throw RedundancyCheckFailed(
                        "A-term product over a fixed-coordinate class is not "
                        "the identity");
                }
                out.push_back(std::move(cls));
                return;
            }
            int dir = dirs[k];
            for (int x = 1; x < 2 * lat.extent(dir); x += 2) {
                pattern[dir] = x;
                self(self, k + 1);
            }
            pattern[dir] = std::nullopt;
        };
        sweep(sweep, 0);
    } while (std::prev_permutation(pick.begin(), pick.end()));

    return out;
}

long long seed_count(const TdParams& params, const std::vector<int>& dims) {
    validate(params);
    if (!is_seed_family(params)) {
        throw UnsupportedModel("seed_count: defined for [d-1, d, d+1, D] models only");
    }
    if (static_cast<int>(dims.size()) != params.D) {
        throw InvalidDimension("seed_count: got " + std::to_string(dims.size()) +
                               " extents for dimension " + std::to_string(params.D));
    }
    int D = params.D;
    int d = params.d_s;
    long long total = 0;
    // Subsets of size m > d of half-integer directions; each contributes
    // C(m, d) seed orientations times the positions of the free directions.
    std::vector<int> pick(D, 0);
    for (int m = d + 1; m <= D; ++m) {
        std::fill(pick.begin(), pick.end(), 0);
        std::fill(pick.begin(), pick.begin() + m, 1);
        std::sort(pick.begin(), pick.end(), std::greater<int>());
        do {
            long long positions = 1;
            for (int i = 0; i < D; ++i) {
                if (!pick[i]) {
                    positions *= dims[i] - 1;
                }
            }
            total += binomial(m, d) * positions;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return total;
}

std::vector<int> qubit_embedding(const TdModel& sub, const TdModel& super) {
    if (sub.params().d_s != super.params().d_s ||
        sub.lattice().dim() != super.lattice().dim()) {
        throw InvalidLattice("qubit_embedding: incompatible models");
    }
    std::vector<int> map(sub.n_qubits());
    for (int q = 0; q < sub.n_qubits(); ++q) {
        try {
            map[q] = super.lattice().index_of(sub.qubit_cell(q));
        } catch (const InvalidDimension&) {
            throw InvalidLattice("qubit_embedding: sub does not fit in super");
        }
    }
    return map;
}

void write_model(const TdModel& model, const std::string& prefix) {
    {
        std::ofstream out(prefix + ".gx.txt");
        out << gf2::to_text(model.gx());
    }
    {
        std::ofstream out(prefix + ".gz.txt");
        out << gf2::to_text(model.gz());
    }

    nlohmann::json j;
    const TdParams& p = model.params();
    j["td"] = {p.d_n, p.d_s, p.d_l, p.D};
    j["dims"] = model.lattice().spec().extents;
    std::vector<std::string> boundary;
    for (Boundary b : model.lattice().spec().boundary) {
        boundary.push_back(b == Boundary::periodic ? "periodic" : "open");
    }
    j["boundary"] = boundary;
    j["boundary_b_terms"] = "truncated";
    j["n_qubits"] = model.n_qubits();
    nlohmann::json legend = nlohmann::json::array();
    for (int q = 0; q < model.n_qubits(); ++q) {
        legend.push_back(model.qubit_cell(q).c);
    }
    j["qubits"] = legend;
    nlohmann::json aterms = nlohmann::json::array();
    for (const ATerm& t : model.a_terms()) {
        aterms.push_back(t.cube.c);
    }
    j["a_terms"] = aterms;
    nlohmann::json bterms = nlohmann::json::array();
    for (const BTerm& t : model.b_terms()) {
        nlohmann::json e;
        e["node"] = t.node.c;
        std::vector<int> axes;
        for (int a : t.leaf.axes) {
            axes.push_back(a + 1);
        }
        e["leaf_axes"] = axes;
        e["weight"] = t.op.weight();
        bterms.push_back(e);
    }
    j["b_terms"] = bterms;

    std::ofstream out(prefix + ".json");
    out << j.dump(2) << "\n";
}

}  // namespace tdprep
