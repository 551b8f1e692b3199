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

// Command line front end.
//
// Exit codes: 0 success, 1 verification failed, 2 configuration error,
// 3 unsupported model, 4 malformed input file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tdprep/circuit.hpp"
#include "tdprep/css.hpp"
#include "tdprep/model.hpp"
#include "tdprep/oracle.hpp"
#include "tdprep/tableau.hpp"

namespace {

using nlohmann::json;
using namespace tdprep;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
}

TdParams params_from(const std::vector<int>& td) {
    if (td.size() != 4) {
        throw InvalidDimension("--td needs four entries d_n,d_s,d_l,D");
    }
    TdParams p{td[0], td[1], td[2], td[3]};
    validate(p);
    return p;
}

LatticeSpec spec_from(const std::vector<int>& dims,
                      const std::vector<int>& open_1based) {
    LatticeSpec spec = LatticeSpec::periodic(dims);
    for (int i : open_1based) {
        if (i < 1 || i > spec.dim()) {
            throw InvalidDimension("--open direction " + std::to_string(i) +
                                   " out of range");
        }
        spec.boundary[i - 1] = Boundary::open;
    }
    return spec;
}

std::string boundary_string(const std::vector<Boundary>& boundary) {
    std::string s;
    for (Boundary b : boundary) {
        s += b == Boundary::periodic ? 'p' : 'o';
    }
    return s;
}

bool seed_family(const TdParams& p) {
    return p.d_n == p.d_s - 1 && p.d_l == p.d_s + 1;
}

int cmd_model(const std::vector<int>& td, const std::vector<int>& dims,
              const std::vector<int>& open, const std::string& out_prefix) {
    TdParams p = params_from(td);
    LatticeSpec spec = spec_from(dims, open);
    TdModel model = build_model(make_lattice(spec), p);

    json j;
    j["td"] = td;
    j["dims"] = dims;
    j["boundary"] = boundary_string(spec.boundary);
    j["n_qubits"] = model.n_qubits();
    j["a_terms"] = model.a_terms().size();
    j["b_terms"] = model.b_terms().size();
    CommutationReport comm = check_commutation(model);
    j["stabilizer"] = comm.commuting;
    j["gsd_log2"] = nullptr;
    j["redundancy_count"] = nullptr;
    j["seed_count"] = nullptr;
    j["re_classes"] = nullptr;
    if (comm.commuting) {
        j["gsd_log2"] = log2_gsd(model);
    }
    if (seed_family(p) && model.fully_periodic() && comm.commuting) {
        j["redundancy_count"] = a_redundancy_count(model);
        j["seed_count"] = seed_count(p, dims);
        j["re_classes"] = enumerate_re_classes(model).size();
    }
    if (!out_prefix.empty()) {
        write_model(model, out_prefix);
        j["written"] = {out_prefix + ".gx.txt", out_prefix + ".gz.txt",
                        out_prefix + ".json"};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_synth(const std::vector<int>& td, const std::vector<int>& dims,
              const std::vector<int>& open, bool growth,
              const std::string& entangler, const std::string& out_path) {
    TdParams p = params_from(td);
    LatticeSpec spec = spec_from(dims, {});
    TdModel model = build_model(make_lattice(spec), p);
    UcSynthesis uc = synth_uc(model);

    Circuit circuit;
    if (!open.empty()) {
        if (growth || !entangler.empty()) {
            throw Error("--open cannot be combined with --growth/--entangler");
        }
        std::vector<int> open0;
        for (int i : open) {
            if (i < 1 || i > spec.dim()) {
                throw InvalidDimension("--open direction " + std::to_string(i) +
                                       " out of range");
            }
            open0.push_back(i - 1);
        }
        circuit = truncate_uc(uc.circuit, open0);
    } else if (growth || !entangler.empty()) {
        SeedPlan plan = make_seed_plan(model);
        Circuit pipeline;
        pipeline.n_qubits = model.n_qubits();
        if (!entangler.empty()) {
            EntanglerSpec es;
            if (entangler == "ghz") {
                es = EntanglerSpec::ghz();
            } else {
                std::vector<bool> bits;
                for (char c : entangler) {
                    if (c != '0' && c != '1') {
                        throw Error("--entangler takes 'ghz' or a 0/1 pattern");
                    }
                    bits.push_back(c == '1');
                }
                es = EntanglerSpec::basis(bits);
            }
            pipeline = seed_entangler(es, plan.seed_qubits, model.n_qubits());
        }
        pipeline = concat(pipeline, plan.growth);
        circuit = concat(pipeline, uc.circuit);
        circuit.meta = uc.circuit.meta;
    } else {
        circuit = uc.circuit;
    }
    spill(out_path, to_text(circuit));
    return 0;
}

int cmd_verify(const std::string& circuit_path) {
    Circuit circuit = parse_circuit(slurp(circuit_path));
    if (!circuit.meta.td || circuit.meta.dims.empty() ||
        circuit.meta.boundary.empty()) {
        throw Error("circuit carries no model metadata");
    }
    TdParams p = *circuit.meta.td;
    validate(p);
    const std::vector<int>& dims = circuit.meta.dims;
    const std::vector<Boundary>& boundary = circuit.meta.boundary;
    if (static_cast<int>(boundary.size()) != static_cast<int>(dims.size())) {
        throw Error("metadata dims and boundary disagree");
    }

    Tableau state = Tableau::zero_state(circuit.n_qubits);
    state.run(circuit);

    json j;
    j["td"] = {p.d_n, p.d_s, p.d_l, p.D};
    j["dims"] = dims;
    j["boundary"] = boundary_string(boundary);
    j["n_qubits"] = circuit.n_qubits;
    j["layers"] = circuit.layers.size();
    j["redundancy_count"] = nullptr;
    j["seed_count"] = nullptr;

    bool any_open = false;
    for (Boundary b : boundary) {
        any_open |= b == Boundary::open;
    }
    bool pass = false;
    if (!any_open) {
        TdModel model = build_model(make_lattice(LatticeSpec::periodic(dims)), p);
        if (model.n_qubits() != circuit.n_qubits) {
            throw Error("circuit register does not match the model");
        }
        StateCheck sc = check_code_state(state, model);
        j["violations"] = {{"a", sc.a_violations}, {"b", sc.b_violations}};
        j["gsd_log2"] = log2_gsd(model);
        if (seed_family(p)) {
            j["redundancy_count"] = a_redundancy_count(model);
            j["seed_count"] = seed_count(p, dims);
        }
        pass = sc.pass();
    } else {
        // The circuit acts on the fully periodic register; the device it
        // prepares is the open model embedded in it, with one cell row
        // removed along each open direction. Cut cells stay |0>, so the
        // periodic Z terms must also be satisfied.
        TdModel super =
            build_model(make_lattice(LatticeSpec::periodic(dims)), p);
        if (super.n_qubits() != circuit.n_qubits) {
            throw Error("circuit register does not match the model");
        }
        LatticeSpec open_spec;
        open_spec.extents = dims;
        open_spec.boundary = boundary;
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (boundary[i] == Boundary::open) {
                open_spec.extents[i] -= 1;
                if (open_spec.extents[i] < 1) {
                    throw Error("extent too small to open direction " +
                                std::to_string(i + 1));
                }
            }
        }
        TdModel sub = build_model(make_lattice(open_spec), p);
        std::vector<int> emb = qubit_embedding(sub, super);
        auto embed = [&](const gf2::BitVec& v) {
            gf2::BitVec out(static_cast<std::size_t>(super.n_qubits()));
            for (std::size_t q = 0; q < v.size(); ++q) {
                if (v.get(q)) {
                    out.set(emb[q], true);
                }
            }
            return out;
        };
        std::vector<int> bad_a, bad_b, bad_b_periodic;
        for (std::size_t i = 0; i < sub.a_terms().size(); ++i) {
            PauliOp op = pure_x(super.n_qubits(), embed(sub.a_terms()[i].op.x));
            if (state.pauli_expectation(op) != 1) {
                bad_a.push_back(static_cast<int>(i));
            }
        }
        for (std::size_t i = 0; i < sub.b_terms().size(); ++i) {
            PauliOp op = pure_z(super.n_qubits(), embed(sub.b_terms()[i].op.z));
            if (state.pauli_expectation(op) != 1) {
                bad_b.push_back(static_cast<int>(i));
            }
        }
        for (std::size_t i = 0; i < super.b_terms().size(); ++i) {
            if (state.pauli_expectation(super.b_terms()[i].op) != 1) {
                bad_b_periodic.push_back(static_cast<int>(i));
            }
        }
        j["violations"] = {{"a", bad_a},
                           {"b", bad_b},
                           {"b_periodic", bad_b_periodic}};
        j["gsd_log2"] = log2_gsd(sub);
        pass = bad_a.empty() && bad_b.empty() && bad_b_periodic.empty();
    }
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_css(const std::string& gx_path, const std::string& gz_path,
            const std::string& prep_out, const std::string& growth_out) {
    gf2::BitMat gx = gf2::parse_matrix(slurp(gx_path));
    gf2::BitMat gz = gf2::parse_matrix(slurp(gz_path));
    CssCode code = load_css(gx, gz);
    PrepSynthesis prep = synth_prep(code);
    SeedReport seeds = find_seeds(prep.code, prep.plan);

    json j;
    j["n"] = code.n;
    j["k"] = code.k;
    j["plan"] = {{"representatives", prep.plan.representatives},
                 {"order", prep.plan.order}};
    j["rebased"] = !(prep.code.gx == code.gx);
    j["seed_qubits"] = seeds.seed_qubits;
    std::vector<std::string> rows;
    {
        std::istringstream in(gf2::to_text(seeds.logical_x));
        std::string line;
        while (std::getline(in, line)) {
            rows.push_back(line);
        }
    }
    j["logical_x"] = rows;
    j["unique"] = seeds.unique;
    j["prep_gates"] = prep.circuit.gate_count();
    j["growth_gates"] = seeds.u_g_prime.gate_count();
    if (!prep_out.empty()) {
        spill(prep_out, to_text(prep.circuit));
    }
    if (!growth_out.empty()) {
        spill(growth_out, to_text(seeds.u_g_prime));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer code workbench for lattice models"};
    app.require_subcommand(1);

    std::vector<int> td, dims, open;
    std::string out_prefix, out_path, entangler, circuit_path;
    std::string gx_path, gz_path, prep_out, growth_out;
    bool growth = false;

    CLI::App* model_cmd =
        app.add_subcommand("model", "build a model and report its invariants");
    model_cmd->add_option("--td", td, "d_n,d_s,d_l,D")
        ->required()
        ->delimiter(',');
    model_cmd->add_option("--dims", dims, "cells per direction")
        ->required()
        ->delimiter(',');
    model_cmd->add_option("--open", open, "directions with open ends, 1-based")
        ->delimiter(',');
    model_cmd->add_option("--out", out_prefix,
                          "write generator matrices and a JSON sidecar");

    CLI::App* synth_cmd =
        app.add_subcommand("synth", "synthesize a preparation circuit");
    synth_cmd->add_option("--td", td, "d_n,d_s,d_l,D")
        ->required()
        ->delimiter(',');
    synth_cmd->add_option("--dims", dims, "cells per direction")
        ->required()
        ->delimiter(',');
    synth_cmd->add_option("--open", open,
                          "truncate the sweep for open ends, 1-based")
        ->delimiter(',');
    synth_cmd->add_flag("--growth", growth,
                        "prepend the seed growth circuit");
    synth_cmd->add_option("--entangler", entangler,
                          "seed state: 'ghz' or a 0/1 pattern");
    synth_cmd->add_option("-o,--out", out_path, "circuit file, '-' = stdout");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run a circuit and check the model terms it claims");
    verify_cmd->add_option("--circuit", circuit_path, "circuit file, '-' = stdin")
        ->required();

    CLI::App* css_cmd = app.add_subcommand(
        "css", "plan preparation and find seeds for a generic code");
    css_cmd->add_option("--gx", gx_path, "X generator matrix file")->required();
    css_cmd->add_option("--gz", gz_path, "Z generator matrix file")->required();
    css_cmd->add_option("--prep-out", prep_out, "write the preparation circuit");
    css_cmd->add_option("--growth-out", growth_out, "write the growth circuit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(model_cmd)) {
            return cmd_model(td, dims, open, out_prefix);
        }
        if (app.got_subcommand(synth_cmd)) {
            return cmd_synth(td, dims, open, growth, entangler, out_path);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(circuit_path);
        }
        if (app.got_subcommand(css_cmd)) {
            return cmd_css(gx_path, gz_path, prep_out, growth_out);
        }
    } catch (const NotCss& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DependentGenerators& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const UnsupportedModel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotAStabilizerCode& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
