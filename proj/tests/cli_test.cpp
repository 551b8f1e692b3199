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

// Drives the installed binary end to end through a shell. Exit codes:
// 0 success, 1 verification failed, 2 configuration error, 3 unsupported
// model, 4 malformed input.

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tdprep/circuit.hpp"
#include "tdprep/gf2.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("tdprep_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const {
        return (dir_ / name).string();
    }

    int run(const std::string& args) {
        std::string cmd = std::string("'") + TDPREP_CLI_PATH + "' " + args +
                          " > '" + path("stdout") + "' 2> '" + path("stderr") +
                          "'";
        int status = std::system(cmd.c_str());
        return status == -1 ? -1 : WEXITSTATUS(status);
    }

    std::string slurp(const std::string& p) const {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    json out_json() { return json::parse(slurp(path("stdout"))); }

    void write(const std::string& p, const std::string& text) const {
        std::ofstream out(p, std::ios::binary);
        out << text;
    }

    fs::path dir_;
};

TEST_F(CliTest, ModelReportsInvariants) {
    ASSERT_EQ(run("model --td 0,1,2,2 --dims 4,4"), 0);
    json j = out_json();
    EXPECT_EQ(j["n_qubits"], 32);
    EXPECT_EQ(j["a_terms"], 16);
    EXPECT_EQ(j["b_terms"], 16);
    EXPECT_EQ(j["boundary"], "pp");
    EXPECT_TRUE(j["stabilizer"].get<bool>());
    EXPECT_EQ(j["gsd_log2"], 2);
    EXPECT_EQ(j["redundancy_count"], 1);
    EXPECT_EQ(j["seed_count"], 2);
    EXPECT_EQ(j["re_classes"], 1);
}

TEST_F(CliTest, ModelOpenPatch) {
    ASSERT_EQ(run("model --td 0,1,2,2 --dims 3,3 --open 1,2"), 0);
    json j = out_json();
    EXPECT_EQ(j["n_qubits"], 24);
    EXPECT_EQ(j["a_terms"], 9);
    EXPECT_EQ(j["b_terms"], 16);
    EXPECT_EQ(j["boundary"], "oo");
    EXPECT_EQ(j["gsd_log2"], 0);
    EXPECT_TRUE(j["redundancy_count"].is_null());
    EXPECT_TRUE(j["seed_count"].is_null());
}

TEST_F(CliTest, ModelNonStabilizerStillReports) {
    ASSERT_EQ(run("model --td 0,1,1,1 --dims 4"), 0);
    json j = out_json();
    EXPECT_FALSE(j["stabilizer"].get<bool>());
    EXPECT_TRUE(j["gsd_log2"].is_null());
}

TEST_F(CliTest, ModelWritesMatrices) {
    std::string prefix = path("toric");
    ASSERT_EQ(run("model --td 0,1,2,2 --dims 3,3 --out '" + prefix + "'"), 0);
    json j = out_json();
    ASSERT_TRUE(j.contains("written"));
    tdprep::gf2::BitMat gx = tdprep::gf2::parse_matrix(slurp(prefix + ".gx.txt"));
    EXPECT_EQ(gx.rows(), 9u);
    EXPECT_EQ(gx.cols(), 18u);
    json sidecar = json::parse(slurp(prefix + ".json"));
    EXPECT_EQ(sidecar["n_qubits"], 18);
}

TEST_F(CliTest, SynthThenVerify) {
    std::string circ = path("uc.txt");
    ASSERT_EQ(run("synth --td 0,1,2,2 --dims 3,3 -o '" + circ + "'"), 0);
    tdprep::Circuit c = tdprep::parse_circuit(slurp(circ));
    EXPECT_EQ(c.n_qubits, 18);
    ASSERT_TRUE(c.meta.td.has_value());

    ASSERT_EQ(run("verify --circuit '" + circ + "'"), 0);
    json j = out_json();
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_TRUE(j["violations"]["a"].empty());
    EXPECT_TRUE(j["violations"]["b"].empty());
    EXPECT_EQ(j["gsd_log2"], 2);
    EXPECT_EQ(j["seed_count"], 2);
}

TEST_F(CliTest, SynthSeededPipelinesVerify) {
    std::string circ = path("ghz.txt");
    ASSERT_EQ(run("synth --td 0,1,2,2 --dims 3,3 --entangler ghz -o '" + circ +
                  "'"),
              0);
    tdprep::Circuit c = tdprep::parse_circuit(slurp(circ));
    EXPECT_EQ(c.layers.front().kind, tdprep::Layer::Kind::entangler);
    bool has_growth = false, has_uc = false;
    for (const auto& layer : c.layers) {
        has_growth |= layer.kind == tdprep::Layer::Kind::growth;
        has_uc |= layer.kind == tdprep::Layer::Kind::uc;
    }
    EXPECT_TRUE(has_growth);
    EXPECT_TRUE(has_uc);
    ASSERT_EQ(run("verify --circuit '" + circ + "'"), 0);
    EXPECT_TRUE(out_json()["pass"].get<bool>());

    ASSERT_EQ(run("synth --td 0,1,2,2 --dims 3,3 --entangler 10 -o '" + circ +
                  "'"),
              0);
    ASSERT_EQ(run("verify --circuit '" + circ + "'"), 0);
    EXPECT_TRUE(out_json()["pass"].get<bool>());
}

TEST_F(CliTest, SynthTruncatedVerifiesAgainstOpenModel) {
    std::string circ = path("cut.txt");
    ASSERT_EQ(run("synth --td 0,1,2,2 --dims 4,4 --open 1 -o '" + circ + "'"),
              0);
    ASSERT_EQ(run("verify --circuit '" + circ + "'"), 0);
    json j = out_json();
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_TRUE(j["violations"]["a"].empty());
    EXPECT_TRUE(j["violations"]["b"].empty());
    EXPECT_TRUE(j["violations"]["b_periodic"].empty());
    EXPECT_EQ(j["gsd_log2"], 1);
    // Truncation and seeding are different preparation modes.
    EXPECT_EQ(run("synth --td 0,1,2,2 --dims 4,4 --open 1 --growth"), 2);
}

TEST_F(CliTest, VerifyFlagsCorruptedStates) {
    std::string circ = path("bad.txt");
    ASSERT_EQ(run("synth --td 0,1,2,2 --dims 3,3 -o '" + circ + "'"), 0);
    write(circ, slurp(circ) + "==\nX 0\n");
    ASSERT_EQ(run("verify --circuit '" + circ + "'"), 1);
    json j = out_json();
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_FALSE(j["violations"]["b"].empty());
}

TEST_F(CliTest, VerifyRejectsBadFiles) {
    std::string naked = path("naked.txt");
    write(naked, "qubits 2\nH 0\n");
    EXPECT_EQ(run("verify --circuit '" + naked + "'"), 2);  // no metadata
    std::string garbage = path("garbage.txt");
    write(garbage, "not a circuit\n");
    EXPECT_EQ(run("verify --circuit '" + garbage + "'"), 4);
    EXPECT_EQ(run("verify --circuit '" + path("missing.txt") + "'"), 2);
}

TEST_F(CliTest, CssPlansAndFindsSeeds) {
    std::string gx = path("gx.txt");
    std::string gz = path("gz.txt");
    write(gx, "0001111\n0110011\n1010101\n");
    write(gz, "0001111\n0110011\n1010101\n");
    std::string prep = path("prep.txt");
    std::string grow = path("grow.txt");
    ASSERT_EQ(run("css --gx '" + gx + "' --gz '" + gz + "' --prep-out '" +
                  prep + "' --growth-out '" + grow + "'"),
              0);
    json j = out_json();
    EXPECT_EQ(j["n"], 7);
    EXPECT_EQ(j["k"], 1);
    EXPECT_EQ(j["plan"]["representatives"], json({3, 1, 0}));
    EXPECT_EQ(j["plan"]["order"], json({2, 1, 0}));
    EXPECT_FALSE(j["rebased"].get<bool>());
    EXPECT_EQ(j["seed_qubits"], json({2}));
    EXPECT_EQ(j["logical_x"], json({"0010110"}));
    EXPECT_TRUE(j["unique"].get<bool>());
    EXPECT_EQ(j["prep_gates"], 12);
    EXPECT_EQ(j["growth_gates"], 2);

    tdprep::Circuit p = tdprep::parse_circuit(slurp(prep));
    EXPECT_EQ(p.layers.size(), 4u);
    tdprep::Circuit g = tdprep::parse_circuit(slurp(grow));
    ASSERT_EQ(g.layers.size(), 1u);
    EXPECT_EQ(g.layers[0].kind, tdprep::Layer::Kind::growth);
}

TEST_F(CliTest, CssRejectsBadMatrices) {
    std::string gx = path("gx.txt");
    std::string gz = path("gz.txt");
    write(gx, "110\n");
    write(gz, "100\n");
    EXPECT_EQ(run("css --gx '" + gx + "' --gz '" + gz + "'"), 4);
    write(gx, "110\n110\n");
    write(gz, "000\n");
    EXPECT_EQ(run("css --gx '" + gx + "' --gz '" + gz + "'"), 4);
    EXPECT_EQ(run("css --gx '" + path("nope") + "' --gz '" + gz + "'"), 2);
}

TEST_F(CliTest, ConfigurationErrors) {
    EXPECT_EQ(run("model --td 1,2,3 --dims 3,3"), 2);
    EXPECT_EQ(run("model --dims 3,3"), 2);  // missing required option
    EXPECT_EQ(run("model --td 0,1,2,2 --dims 3,3 --open 3"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
}

TEST_F(CliTest, UnsupportedModelsExitThree) {
    EXPECT_EQ(run("synth --td 0,1,1,1 --dims 4"), 3);
}

}  // namespace
