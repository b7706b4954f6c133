#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qsig/io.hpp"
#include "qsig/kernels.hpp"
#include "qsig/pauli.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qsig::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QSIG_TEST_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qsig_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

int count_lines(const fs::path& p) {
    std::ifstream in(p);
    int n = 0;
    for (std::string line; std::getline(in, line);) n += !line.empty();
    return n;
}

}  // namespace

TEST(CliSig, UnitLineCoefficients) {
    const Result r = run({"sig", "--depth", "3", data("line.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto c = json::parse(r.out).at("coeffs").get<std::vector<double>>();
    ASSERT_EQ(c.size(), 4u);
    EXPECT_DOUBLE_EQ(c[0], 1.0);
    EXPECT_DOUBLE_EQ(c[1], 1.0);
    EXPECT_DOUBLE_EQ(c[2], 0.5);
    EXPECT_NEAR(c[3], 1.0 / 6, 1e-15);
    const Result zero = run({"sig", "--depth", "0", data("line.csv")});
    EXPECT_EQ(json::parse(zero.out).at("coeffs").size(), 1u);
    const Result csv = run({"sig", "--depth", "1", "--format", "csv", data("line.csv")});
    EXPECT_EQ(csv.out, "word,coeff\n,1\n1,1\n");
}

TEST(CliSig, MissingColumnIsInputError) {
    const Result r = run({"sig", data("bad_header.csv")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("x2"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("bad_header.csv"), std::string::npos) << r.err;
    EXPECT_EQ(run({"sig", data("nope.csv")}).code, 2);
}

TEST(CliKernel, SeriesMatchesLibrary) {
    const Result r = run({"kernel", "gue-series", data("a.csv"), data("b.csv"), "--depth", "16"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    qsig::KernelConfig cfg;
    cfg.method = qsig::KernelMethod::GueSeries;
    cfg.depth = 16;
    const auto v = qsig::kernel(qsig::read_path_csv(data("a.csv")), qsig::read_path_csv(data("b.csv")), cfg);
    EXPECT_EQ(j.at("value").get<double>(), v.value);
    EXPECT_EQ(j.at("tail_bound").get<double>(), v.tail_bound);
    EXPECT_EQ(j.at("params").at("depth"), 16);
}

TEST(CliKernel, QuantumAutoParameters) {
    const Result capped = run({"kernel", "quantum", data("a.csv"), data("b.csv"), "--epsilon", "0.1", "--delta", "0.05"});
    EXPECT_EQ(capped.code, 4);
    EXPECT_NE(capped.err.find("n=60"), std::string::npos) << capped.err;
    EXPECT_NE(capped.err.find("M=738"), std::string::npos) << capped.err;
    const Result r = run({"kernel", "quantum", data("line.csv"), data("flat.csv"), "--epsilon", "0.1", "--delta", "0.05",
                          "--constant-C", "0.05"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("params").at("n"), 3);
    EXPECT_EQ(j.at("params").at("m"), 3);
    EXPECT_EQ(j.at("params").at("M"), 738);
    EXPECT_EQ(j.at("params").at("K"), 91);
    EXPECT_EQ(j.at("epsilon"), 0.1);
    EXPECT_TRUE(j.contains("stderr"));
}

TEST(CliKernel, GramCsv) {
    const Result r = run({"kernel", "gram", data("dataset.jsonl"), "--method", "signature-pde", "--grid-h", "0.03125"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "id,p0,p1,p2");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 3);
    const Result j = run({"kernel", "gram", data("dataset.jsonl"), "--format", "json"});
    ASSERT_EQ(j.code, 0) << j.err;
    const json g = json::parse(j.out);
    EXPECT_EQ(g.at("labels").size(), 3u);
    EXPECT_NEAR(g.at("matrix")[1][1].get<double>(), 1.0, 1e-10);
    EXPECT_EQ(run({"kernel", "rbf", data("a.csv"), data("b.csv")}).code, 2);
}

TEST(CliSdLaw, PotentialsAndDivergence) {
    const Result q = run({"sd-law", "--potential", data("quartic.json"), "--max-degree", "8"});
    ASSERT_EQ(q.code, 0) << q.err;
    const json law = json::parse(q.out);
    EXPECT_LE(law.at("residual").get<double>(), law.at("tol").get<double>());
    EXPECT_LT(law.at("coeffs").at("[1,1]").get<double>(), 1.0);
    const Result e = run({"sd-law", "--potential", data("empty.json"), "--max-degree", "6"});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(json::parse(e.out).at("coeffs").at("[1,1,1,1]").get<double>(), 2.0);
    const Result d = run({"sd-law", "--potential", data("divergent.json"), "--max-degree", "10"});
    EXPECT_EQ(d.code, 3);
    EXPECT_FALSE(json::parse(d.err).at("residuals").empty());
}

TEST(CliCounts, MatchesLibrary) {
    const Result r = run({"counts", "--m", "3", "--p", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("W").get<long long>(), qsig::count_even_words(3, 2));
    EXPECT_EQ(j.at("N").get<long long>(), qsig::count_pair_words(3, 2));
    EXPECT_EQ(run({"counts", "--m", "0", "--p", "2"}).code, 2);
}

TEST(CliMc, Reproducible) {
    const std::vector<std::string> args{"mc",          data("line.csv"), "--matrix-n", "256", "--mc-samples", "400",
                                        "--trotter-k", "64",             "--seed",     "7"};
    const Result a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const json j = json::parse(a.out);
    EXPECT_EQ(j.at("seed"), 7);
    EXPECT_NEAR(j.at("value_re").get<double>(), 0.5767, 0.01);
}

TEST(CliQsim, ExportAndReplay) {
    const fs::path circuit = scratch("c.jsonl");
    const Result r = run({"qsim", data("line.csv"), "--n-qubits", "6", "--pauli-m", "6", "--trotter-k", "16", "--shots",
                          "200", "--export-circuit", circuit.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(circuit), 1 * 16 * 1 * 6);
    const json est = json::parse(r.out);
    EXPECT_EQ(est.at("shots"), 200);
    std::ifstream in(circuit);
    const qsig::Circuit c = qsig::parse_circuit_jsonl(in);
    const Result replay = run({"qsim", "--replay", circuit.string()});
    ASSERT_EQ(replay.code, 0) << replay.err;
    EXPECT_EQ(json::parse(replay.out).at("dqc1_probability").get<double>(), qsig::dqc1_probability(c));
    EXPECT_EQ(run({"qsim", data("line.csv"), "--n-qubits", "30"}).code, 4);
}

TEST(CliGlobal, HelpOutputAndErrors) {
    for (const char* cmd : {"sig", "kernel", "sd-law", "counts", "mc", "qsim"}) {
        const Result h = run({cmd, "--help"});
        EXPECT_EQ(h.code, 0);
        EXPECT_NE(h.out.find("--"), std::string::npos) << cmd;
    }
    EXPECT_NE(run({"qsim", "--help"}).out.find("--export-circuit"), std::string::npos);
    EXPECT_NE(run({"kernel", "--help"}).out.find("--constant-C"), std::string::npos);
    EXPECT_EQ(run({"sig", "--bogus", data("line.csv")}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const fs::path out = scratch("counts.json");
    const Result w = run({"counts", "--m", "2", "--p", "2", "--output", out.string()});
    ASSERT_EQ(w.code, 0);
    EXPECT_TRUE(w.out.empty());
    std::ifstream in(out);
    EXPECT_EQ(json::parse(in).at("W"), 8);
}
