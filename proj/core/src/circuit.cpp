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

#include "tdprep/circuit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tdprep {

namespace {

void require_seed_family_model(const TdModel& model, const char* op) {
    const TdParams& p = model.params();
    if (p.d_n != p.d_s - 1 || p.d_l != p.d_s + 1) {
        throw UnsupportedModel(std::string(op) +
                               ": defined for [d-1, d, d+1, D] models only");
    }
    if (!model.fully_periodic()) {
        throw UnsupportedModel(std::string(op) +
                               ": defined for fully periodic lattices only");
    }
}

// Doubled coordinate of the boundary half-step cell along direction i.
int half_coord(const Lattice& lat, int i) { return 2 * lat.extent(i) - 1; }

std::vector<int> boundary_dirs(const Lattice& lat, const Cube& cube) {
    std::vector<int> dirs;
    for (int i = 0; i < lat.dim(); ++i) {
        if (cube.c[i] == half_coord(lat, i)) {
            dirs.push_back(i);
        }
    }
    return dirs;
}

}  // namespace

std::size_t Circuit::gate_count() const {
    std::size_t c = 0;
    for (const Layer& layer : layers) {
        for (const Segment& seg : layer.segments) {
            c += seg.gates.size();
        }
    }
    return c;
}

std::size_t Circuit::count_layers_with(Gate::Kind kind) const {
    std::size_t c = 0;
    for (const Layer& layer : layers) {
        bool found = false;
        for (const Segment& seg : layer.segments) {
            for (const Gate& g : seg.gates) {
                if (g.kind == kind) {
                    found = true;
                    break;
                }
            }
            if (found) {
                break;
            }
        }
        c += found;
    }
    return c;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.n_qubits != b.n_qubits) {
        throw DimensionMismatch("concat: register sizes " +
                                std::to_string(a.n_qubits) + " vs " +
                                std::to_string(b.n_qubits));
    }
    Circuit out = a;
    out.layers.insert(out.layers.end(), b.layers.begin(), b.layers.end());
    if (!out.meta.td && b.meta.td) {
        out.meta = b.meta;
    }
    return out;
}

PauliOp conjugate_through(const Circuit& circuit, PauliOp p) {
    if (static_cast<int>(p.size()) != circuit.n_qubits) {
        throw DimensionMismatch("conjugate_through: operator size " +
                                std::to_string(p.size()) + " vs register " +
                                std::to_string(circuit.n_qubits));
    }
    for (const Layer& layer : circuit.layers) {
        for (const Segment& seg : layer.segments) {
            for (const Gate& g : seg.gates) {
                switch (g.kind) {
                    case Gate::Kind::H: {
                        bool xb = p.x.get(g.q0);
                        bool zb = p.z.get(g.q0);
                        if (xb && zb) {
                            p.sign = -p.sign;
                        }
                        p.x.set(g.q0, zb);
                        p.z.set(g.q0, xb);
                        break;
                    }
                    case Gate::Kind::CX: {
                        bool xc = p.x.get(g.q0), zc = p.z.get(g.q0);
                        bool xt = p.x.get(g.q1), zt = p.z.get(g.q1);
                        if (xc && zt && !(xt ^ zc)) {
                            p.sign = -p.sign;
                        }
                        p.x.set(g.q1, xt ^ xc);
                        p.z.set(g.q0, zc ^ zt);
                        break;
                    }
                    case Gate::Kind::X:
                        if (p.z.get(g.q0)) {
                            p.sign = -p.sign;
                        }
                        break;
                    case Gate::Kind::Z:
                        if (p.x.get(g.q0)) {
                            p.sign = -p.sign;
                        }
                        break;
                }
            }
        }
    }
    return p;
}

Cube representative(const Lattice& lat, const Cube& cube,
                    const std::vector<int>& dirs, int d_s) {
    std::optional<Cube> norm = lat.normalize(cube);
    if (!norm) {
        throw InvalidDimension("cell is outside the lattice");
    }
    int D = lat.dim();
    if (norm->dim() != D) {
        throw NotRepresentable("only top-dimensional cells have representatives");
    }
    if (static_cast<int>(dirs.size()) > d_s) {
        throw NotRepresentable("cell is anchored on " +
                               std::to_string(dirs.size()) +
                               " boundary directions, more than d_s = " +
                               std::to_string(d_s));
    }
    std::vector<int> sorted = dirs;
    std::sort(sorted.begin(), sorted.end());
    for (int i : sorted) {
        if (i < 0 || i >= D) {
            throw NotRepresentable("direction out of range");
        }
        if (norm->c[i] != half_coord(lat, i)) {
            throw NotRepresentable(
                "cell does not sit on the boundary half step in direction " +
                std::to_string(i + 1));
        }
    }
    Cube rep = *norm;
    int lowered = 0;
    for (int i = 0; i < D && lowered < D - d_s; ++i) {
        if (!std::binary_search(sorted.begin(), sorted.end(), i)) {
            rep.c[i] -= 1;
            ++lowered;
        }
    }
    return *lat.normalize(std::move(rep));
}

UcSynthesis synth_uc(const TdModel& model) {
    const Lattice& lat = model.lattice();
    const TdParams& p = model.params();
    if (!model.fully_periodic()) {
        throw UnsupportedModel("synth_uc: lattice must be fully periodic");
    }
    if (!is_stabilizer_code(p)) {
        throw UnsupportedModel("synth_uc: the terms do not commute");
    }
    int D = p.D;
    int d = p.d_s;
    const std::vector<Cube>& tops = lat.cells(D);

    UcSynthesis out;
    out.representative_of.assign(tops.size(), -1);
    std::vector<int> owner(model.n_qubits(), -1);

    // Parts keyed by (|S|, S): the direction subsets on whose boundary half
    // step a cell is anchored.
    using PartKey = std::pair<int, std::vector<int>>;
    std::map<PartKey, std::vector<int>> h_reps;           // part -> rep qubits
    std::map<PartKey, std::map<int, std::vector<std::size_t>>> buckets;
    std::map<PartKey, int> depth_of;

    for (std::size_t a = 0; a < tops.size(); ++a) {
        std::vector<int> anchored = boundary_dirs(lat, tops[a]);
        if (static_cast<int>(anchored.size()) > d) {
            continue;  // seeds and their kin: no representative
        }
        Cube rep = representative(lat, tops[a], anchored, d);
        int q = lat.index_of(rep);
        if (owner[q] != -1) {
            throw InternalConsistencyError("two cells map to one representative");
        }
        owner[q] = static_cast<int>(a);
        out.representative_of[a] = q;

        PartKey key{static_cast<int>(anchored.size()), anchored};
        h_reps[key].push_back(q);

        // Complement split: the lowered directions set the sweep position,
        // the remaining ones are free.
        std::vector<int> minset;
        for (int i = 0; i < D && static_cast<int>(minset.size()) < D - d; ++i) {
            if (!std::binary_search(anchored.begin(), anchored.end(), i)) {
                minset.push_back(i);
            }
        }
        int depth = 1;
        int pos = 0;
        for (int i : minset) {
            depth += lat.extent(i) - 2;
            pos += (tops[a].c[i] - 1) / 2;
        }
        depth_of[key] = depth;
        int alpha = depth - pos;
        buckets[key][alpha].push_back(a);
    }

    Circuit& circuit = out.circuit;
    circuit.n_qubits = model.n_qubits();
    circuit.meta.td = p;
    circuit.meta.dims = lat.spec().extents;
    circuit.meta.boundary = lat.spec().boundary;

    // Hadamard layer: every representative into |+>, grouped by part.
    Layer h_layer;
    h_layer.kind = Layer::Kind::uc;
    h_layer.step = 0;
    for (auto& [key, reps] : h_reps) {
        Segment seg;
        seg.part = key.second;
        std::sort(reps.begin(), reps.end());
        for (int q : reps) {
            seg.gates.push_back({Gate::Kind::H, q, -1});
        }
        h_layer.segments.push_back(std::move(seg));
    }
    circuit.layers.push_back(std::move(h_layer));

    // CNOT sweeps, one step per part size, parts sharing layers by position.
    for (int k = 0; k <= d; ++k) {
        int max_depth = 0;
        for (const auto& [key, depth] : depth_of) {
            if (key.first == k) {
                max_depth = std::max(max_depth, depth);
            }
        }
        for (int alpha = 1; alpha <= max_depth; ++alpha) {
            Layer layer;
            layer.kind = Layer::Kind::uc;
            layer.step = k + 1;
            layer.index = alpha;
            for (auto& [key, by_alpha] : buckets) {
                if (key.first != k) {
                    continue;
                }
                auto it = by_alpha.find(alpha);
                if (it == by_alpha.end()) {
                    continue;
                }
                Segment seg;
                seg.part = key.second;
                std::vector<std::size_t>& members = it->second;
                std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
                    return tops[x] < tops[y];
                });
                for (std::size_t a : members) {
                    int qc = out.representative_of[a];
                    for (const Cube& f : faces(lat, tops[a], d)) {
                        int qt = lat.index_of(f);
                        if (qt != qc) {
                            seg.gates.push_back({Gate::Kind::CX, qc, qt});
                        }
                    }
                    out.order.push_back(static_cast<int>(a));
                }
                layer.segments.push_back(std::move(seg));
            }
            circuit.layers.push_back(std::move(layer));
        }
    }
    return out;
}

Circuit truncate_uc(const Circuit& circuit, const std::vector<int>& open_dirs) {
    int D = static_cast<int>(circuit.meta.dims.size());
    if (!circuit.meta.td || D == 0) {
        throw MissingTags("truncate_uc: circuit carries no model metadata");
    }
    for (int dir : open_dirs) {
        if (dir < 0 || dir >= D) {
            throw InvalidDimension("open direction " + std::to_string(dir + 1) +
                                   " out of range");
        }
    }
    Circuit out;
    out.n_qubits = circuit.n_qubits;
    out.meta = circuit.meta;
    for (int dir : open_dirs) {
        out.meta.boundary[dir] = Boundary::open;
    }
    for (const Layer& layer : circuit.layers) {
        if (layer.kind != Layer::Kind::uc || layer.step < 0) {
            throw MissingTags("truncate_uc: untagged layer in circuit");
        }
        Layer kept;
        kept.kind = layer.kind;
        kept.step = layer.step;
        kept.index = layer.index;
        for (const Segment& seg : layer.segments) {
            bool cut = false;
            for (int dir : seg.part) {
                if (std::find(open_dirs.begin(), open_dirs.end(), dir) !=
                    open_dirs.end()) {
                    cut = true;
                    break;
                }
            }
            if (!cut) {
                kept.segments.push_back(seg);
            }
        }
        if (!kept.segments.empty()) {
            out.layers.push_back(std::move(kept));
        }
    }
    return out;
}

std::vector<Cube> seed_set(const TdModel& model) {
    require_seed_family_model(model, "seed_set");
    const Lattice& lat = model.lattice();
    std::vector<Cube> seeds;
    for (const Cube& cell : lat.cells(model.params().d_s)) {
        bool on_half = true;
        bool has_last = false;
        for (int i = 0; i < lat.dim(); ++i) {
            if (cell.c[i] & 1) {
                on_half &= cell.c[i] == half_coord(lat, i);
            } else {
                has_last |= cell.c[i] == 2 * lat.extent(i) - 2;
            }
        }
        if (on_half && has_last) {
            seeds.push_back(cell);
        }
    }
    return seeds;
}

namespace {

bool is_seed_cell(const TdModel& model, const Cube& cell) {
    const Lattice& lat = model.lattice();
    if (cell.dim() != model.params().d_s) {
        return false;
    }
    bool has_last = false;
    for (int i = 0; i < lat.dim(); ++i) {
        if (cell.c[i] & 1) {
            if (cell.c[i] != half_coord(lat, i)) {
                return false;
            }
        } else {
            has_last |= cell.c[i] == 2 * lat.extent(i) - 2;
        }
    }
    return has_last;
}

}  // namespace

PauliOp logical_x(const TdModel& model, const Cube& seed) {
    require_seed_family_model(model, "logical_x");
    const Lattice& lat = model.lattice();
    std::optional<Cube> norm = lat.normalize(seed);
    if (!norm || !is_seed_cell(model, *norm)) {
        throw InvalidSeeds("cell is not a seed");
    }
    std::vector<std::optional<int>> pattern(lat.dim());
    for (int i = 0; i < lat.dim(); ++i) {
        if (!(norm->c[i] & 1)) {
            pattern[i] = norm->c[i];
        }
    }
    gf2::BitVec support(model.n_qubits());
    for (const Cube& cell : star_expand(lat, pattern, model.params().d_s)) {
        support.set(lat.index_of(cell), true);
    }
    return pure_x(model.n_qubits(), support);
}

Circuit synth_ug(const TdModel& model) {
    return synth_ug(model, seed_set(model));
}

Circuit synth_ug(const TdModel& model, const std::vector<Cube>& seeds) {
    require_seed_family_model(model, "synth_ug");
    const Lattice& lat = model.lattice();

    std::vector<Cube> ordered;
    ordered.reserve(seeds.size());
    for (const Cube& s : seeds) {
        std::optional<Cube> norm = lat.normalize(s);
        if (!norm || !is_seed_cell(model, *norm)) {
            throw InvalidSeeds("cell is not a seed");
        }
        ordered.push_back(*norm);
    }
    std::sort(ordered.begin(), ordered.end());
    if (std::adjacent_find(ordered.begin(), ordered.end()) != ordered.end()) {
        throw InvalidSeeds("repeated seed");
    }

    Circuit out;
    out.n_qubits = model.n_qubits();
    out.meta.td = model.params();
    out.meta.dims = lat.spec().extents;
    out.meta.boundary = lat.spec().boundary;

    // Layer j across seeds; each seed contributes one CNOT fan per layer
    // until its leaf is covered.
    std::vector<std::vector<Segment>> by_layer;
    for (const Cube& seed : ordered) {
        int seed_q = lat.index_of(seed);
        std::vector<int> axes = seed.span();
        int j = 0;
        for (std::size_t t = 0; t < axes.size(); ++t) {
            int axis = axes[t];
            for (int x = 0; x + 1 < lat.extent(axis); ++x) {
                Segment seg;
                seg.seed = seed_q;
                // Fan over every position along the axes grown so far.
                std::vector<int> offs(t, 0);
                bool done = false;
                while (!done) {
                    Cube control = seed;
                    for (std::size_t u = 0; u < t; ++u) {
                        control.c[axes[u]] -= 2 * offs[u];
                    }
                    control.c[axis] -= 2 * x;
                    Cube target = control;
                    target.c[axis] -= 2;
                    seg.gates.push_back(
                        {Gate::Kind::CX, lat.index_of(control), lat.index_of(target)});
                    done = true;
                    for (std::size_t u = t; u-- > 0;) {
                        if (++offs[u] < lat.extent(axes[u])) {
                            done = false;
                            break;
                        }
                        offs[u] = 0;
                    }
                }
                if (static_cast<std::size_t>(j) == by_layer.size()) {
                    by_layer.emplace_back();
                }
                by_layer[static_cast<std::size_t>(j)].push_back(std::move(seg));
                ++j;
            }
        }
    }

    for (std::size_t j = 0; j < by_layer.size(); ++j) {
        Layer layer;
        layer.kind = Layer::Kind::growth;
        layer.index = static_cast<int>(j) + 1;
        layer.segments = std::move(by_layer[j]);
        out.layers.push_back(std::move(layer));
    }
    return out;
}

SeedPlan make_seed_plan(const TdModel& model) {
    SeedPlan plan;
    plan.seed_cells = seed_set(model);
    for (const Cube& s : plan.seed_cells) {
        plan.seed_qubits.push_back(model.lattice().index_of(s));
        plan.logical_ops.push_back(logical_x(model, s));
    }
    plan.growth = synth_ug(model, plan.seed_cells);
    return plan;
}

EntanglerSpec EntanglerSpec::basis(std::vector<bool> bits) {
    EntanglerSpec s;
    s.kind = Kind::basis_pattern;
    s.pattern = std::move(bits);
    return s;
}

EntanglerSpec EntanglerSpec::ghz() {
    EntanglerSpec s;
    s.kind = Kind::ghz;
    return s;
}

EntanglerSpec EntanglerSpec::clifford(Circuit c) {
    EntanglerSpec s;
    s.kind = Kind::custom;
    s.custom = std::move(c);
    return s;
}

Circuit seed_entangler(const EntanglerSpec& spec,
                       const std::vector<int>& seed_qubits, int n_qubits) {
    for (int q : seed_qubits) {
        if (q < 0 || q >= n_qubits) {
            throw InvalidSeeds("seed qubit " + std::to_string(q) +
                               " out of range");
        }
    }
    Circuit out;
    out.n_qubits = n_qubits;
    switch (spec.kind) {
        case EntanglerSpec::Kind::basis_pattern: {
            if (spec.pattern.size() != seed_qubits.size()) {
                throw InvalidSeeds("basis pattern has " +
                                   std::to_string(spec.pattern.size()) +
                                   " bits for " +
                                   std::to_string(seed_qubits.size()) + " seeds");
            }
            Segment seg;
            for (std::size_t i = 0; i < seed_qubits.size(); ++i) {
                if (spec.pattern[i]) {
                    seg.gates.push_back({Gate::Kind::X, seed_qubits[i], -1});
                }
            }
            if (!seg.gates.empty()) {
                Layer layer;
                layer.kind = Layer::Kind::entangler;
                layer.segments.push_back(std::move(seg));
                out.layers.push_back(std::move(layer));
            }
            break;
        }
        case EntanglerSpec::Kind::ghz: {
            if (seed_qubits.empty()) {
                throw InvalidSeeds("ghz entangler needs at least one seed");
            }
            Layer h;
            h.kind = Layer::Kind::entangler;
            h.segments.push_back({{}, -1, {{Gate::Kind::H, seed_qubits[0], -1}}});
            out.layers.push_back(std::move(h));
            for (std::size_t i = 0; i + 1 < seed_qubits.size(); ++i) {
                Layer l;
                l.kind = Layer::Kind::entangler;
                l.segments.push_back(
                    {{}, -1, {{Gate::Kind::CX, seed_qubits[i], seed_qubits[i + 1]}}});
                out.layers.push_back(std::move(l));
            }
            break;
        }
        case EntanglerSpec::Kind::custom: {
            if (spec.custom.n_qubits != n_qubits) {
                throw DimensionMismatch("custom entangler register size " +
                                        std::to_string(spec.custom.n_qubits) +
                                        " vs " + std::to_string(n_qubits));
            }
            for (const Layer& layer : spec.custom.layers) {
                Layer l;
                l.kind = Layer::Kind::entangler;
                Segment merged;
                for (const Segment& seg : layer.segments) {
                    for (const Gate& g : seg.gates) {
                        for (int q : {g.q0, g.q1}) {
                            if (q >= 0 && std::find(seed_qubits.begin(),
                                                    seed_qubits.end(),
                                                    q) == seed_qubits.end()) {
                                throw SeedSetViolation(
                                    "custom entangler touches qubit " +
                                    std::to_string(q) +
                                    " outside the seed set");
                            }
                        }
                        merged.gates.push_back(g);
                    }
                }
                if (!merged.gates.empty()) {
                    l.segments.push_back(std::move(merged));
                    out.layers.push_back(std::move(l));
                }
            }
            break;
        }
    }
    return out;
}

namespace {

std::string csv(const std::vector<int>& xs, int base) {
    if (xs.empty()) {
        return "-";
    }
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(xs[i] + base);
    }
    return s;
}

std::vector<int> parse_csv(const std::string& s, int base) {
    std::vector<int> out;
    if (s == "-") {
        return out;
    }
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) {
                throw FormatError("bad entry '" + tok + "' in list '" + s + "'");
            }
            out.push_back(v - base);
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception&) {
            throw FormatError("bad entry '" + tok + "' in list '" + s + "'");
        }
    }
    return out;
}

}  // namespace

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits << "\n";
    if (circuit.meta.td) {
        const TdParams& p = *circuit.meta.td;
        out << "# td " << p.d_n << ',' << p.d_s << ',' << p.d_l << ',' << p.D
            << "\n";
    }
    if (!circuit.meta.dims.empty()) {
        out << "# dims " << csv(circuit.meta.dims, 0) << "\n";
    }
    if (!circuit.meta.boundary.empty()) {
        out << "# boundary ";
        for (Boundary b : circuit.meta.boundary) {
            out << (b == Boundary::periodic ? 'p' : 'o');
        }
        out << "\n";
    }
    for (std::size_t li = 0; li < circuit.layers.size(); ++li) {
        const Layer& layer = circuit.layers[li];
        if (li) {
            out << "==\n";
        }
        switch (layer.kind) {
            case Layer::Kind::uc:
                out << "# layer uc step " << layer.step;
                if (layer.index >= 1) {
                    out << " index " << layer.index;
                }
                out << "\n";
                break;
            case Layer::Kind::growth:
                out << "# layer growth index " << layer.index << "\n";
                break;
            case Layer::Kind::entangler:
                out << "# layer entangler\n";
                break;
            case Layer::Kind::plain:
                break;
        }
        for (const Segment& seg : layer.segments) {
            if (layer.kind == Layer::Kind::uc) {
                out << "# part " << csv(seg.part, 1) << "\n";
            } else if (layer.kind == Layer::Kind::growth) {
                out << "# seed " << seg.seed << "\n";
            }
            for (const Gate& g : seg.gates) {
                switch (g.kind) {
                    case Gate::Kind::H:
                        out << "H " << g.q0 << "\n";
                        break;
                    case Gate::Kind::CX:
                        out << "CX " << g.q0 << ' ' << g.q1 << "\n";
                        break;
                    case Gate::Kind::X:
                        out << "X " << g.q0 << "\n";
                        break;
                    case Gate::Kind::Z:
                        out << "Z " << g.q0 << "\n";
                        break;
                }
            }
        }
    }
    return out.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit circuit;
    bool header_seen = false;
    bool layer_open = false;
    Layer current;
    bool segment_open = false;

    auto close_layer = [&]() {
        if (!layer_open) {
            return;
        }
        if (current.segments.empty()) {
            throw FormatError("empty circuit layer");
        }
        circuit.layers.push_back(std::move(current));
        current = Layer{};
        layer_open = false;
        segment_open = false;
    };
    auto gate_segment = [&]() -> Segment& {
        layer_open = true;
        if (!segment_open) {
            current.segments.emplace_back();
            segment_open = true;
        }
        return current.segments.back();
    };
    auto check_qubit = [&](int q) {
        if (q < 0 || q >= circuit.n_qubits) {
            throw FormatError("qubit " + std::to_string(q) + " out of range");
        }
        return q;
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) {
            continue;  // blank
        }
        if (!header_seen) {
            if (tok != "qubits") {
                throw FormatError("expected 'qubits <n>' header");
            }
            int n = 0;
            if (!(ls >> n) || n <= 0) {
                throw FormatError("invalid qubit count");
            }
            circuit.n_qubits = n;
            header_seen = true;
            continue;
        }
        if (tok == "==") {
            if (!layer_open) {
                throw FormatError("layer separator without a preceding layer");
            }
            close_layer();
            continue;
        }
        if (tok == "#") {
            std::string kind;
            if (!(ls >> kind)) {
                continue;
            }
            if (kind == "td" && !layer_open && circuit.layers.empty()) {
                std::string rest;
                ls >> rest;
                std::vector<int> v = parse_csv(rest, 0);
                if (v.size() != 4) {
                    throw FormatError("td tag needs four entries");
                }
                circuit.meta.td = TdParams{v[0], v[1], v[2], v[3]};
            } else if (kind == "dims" && !layer_open && circuit.layers.empty()) {
                std::string rest;
                ls >> rest;
                circuit.meta.dims = parse_csv(rest, 0);
            } else if (kind == "boundary" && !layer_open && circuit.layers.empty()) {
                std::string rest;
                ls >> rest;
                circuit.meta.boundary.clear();
                for (char c : rest) {
                    if (c == 'p') {
                        circuit.meta.boundary.push_back(Boundary::periodic);
                    } else if (c == 'o') {
                        circuit.meta.boundary.push_back(Boundary::open);
                    } else {
                        throw FormatError("boundary tag must be 'p'/'o' letters");
                    }
                }
            } else if (kind == "layer") {
                if (layer_open) {
                    throw FormatError("layer tag inside a layer body");
                }
                std::string what;
                ls >> what;
                layer_open = true;
                if (what == "uc") {
                    current.kind = Layer::Kind::uc;
                    std::string key;
                    while (ls >> key) {
                        int value;
                        if (!(ls >> value)) {
                            throw FormatError("layer tag key '" + key +
                                              "' missing value");
                        }
                        if (key == "step") {
                            current.step = value;
                        } else if (key == "index") {
                            current.index = value;
                        } else {
                            throw FormatError("unknown layer tag key '" + key + "'");
                        }
                    }
                } else if (what == "growth") {
                    current.kind = Layer::Kind::growth;
                    std::string key;
                    int value;
                    if (ls >> key >> value && key == "index") {
                        current.index = value;
                    }
                } else if (what == "entangler") {
                    current.kind = Layer::Kind::entangler;
                } else {
                    throw FormatError("unknown layer kind '" + what + "'");
                }
            } else if (kind == "part") {
                std::string rest;
                ls >> rest;
                layer_open = true;
                Segment seg;
                seg.part = parse_csv(rest, 1);
                current.segments.push_back(std::move(seg));
                segment_open = true;
            } else if (kind == "seed") {
                int q;
                if (!(ls >> q)) {
                    throw FormatError("seed tag missing qubit");
                }
                layer_open = true;
                Segment seg;
                seg.seed = q;
                current.segments.push_back(std::move(seg));
                segment_open = true;
            }
            // Any other comment is ignored.
            continue;
        }
        if (tok == "H" || tok == "X" || tok == "Z") {
            int q;
            if (!(ls >> q)) {
                throw FormatError("gate '" + tok + "' missing qubit");
            }
            Gate g;
            g.kind = tok == "H"   ? Gate::Kind::H
                     : tok == "X" ? Gate::Kind::X
                                  : Gate::Kind::Z;
            g.q0 = check_qubit(q);
            gate_segment().gates.push_back(g);
        } else if (tok == "CX") {
            int c, t;
            if (!(ls >> c >> t)) {
                throw FormatError("CX gate needs control and target");
            }
            if (c == t) {
                throw FormatError("CX control equals target");
            }
            gate_segment().gates.push_back(
                {Gate::Kind::CX, check_qubit(c), check_qubit(t)});
        } else {
            throw FormatError("unknown line '" + line + "'");
        }
    }
    if (!header_seen) {
        throw FormatError("expected 'qubits <n>' header");
    }
    close_layer();
    return circuit;
}

}  // namespace tdprep
