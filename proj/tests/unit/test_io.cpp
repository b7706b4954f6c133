#include <gtest/gtest.h>

#include <sstream>

#include "generators.hpp"
#include "qsig/error.hpp"
#include "qsig/io.hpp"

using namespace qsig;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(PathCsv, ParsesSamples) {
    std::istringstream in("t,x1,x2\n0,0,0\n0.5,1,0\n1,1,2\n");
    const Path p = parse_path_csv(in);
    EXPECT_EQ(p.dim(), 2);
    EXPECT_EQ(p.segments(), 2);
    EXPECT_DOUBLE_EQ(p.increments()(1, 1), 2.0);
    EXPECT_DOUBLE_EQ(one_variation(p), 3.0);
}

TEST(PathCsv, ToleratesWhitespaceAndCrlf) {
    std::istringstream in("t, x1\r\n0, 1\r\n\r\n1, 3\r\n");
    const Path p = parse_path_csv(in);
    EXPECT_EQ(p.segments(), 1);
    EXPECT_DOUBLE_EQ(p.increments()(0, 0), 2.0);
}

TEST(PathCsv, ErrorsCarryContext) {
    const auto parse = [](const std::string& text) {
        return [text] {
            std::istringstream in(text);
            parse_path_csv(in, "f.csv");
        };
    };
    EXPECT_NE(error_of(parse("t,x1,x3\n0,0,0\n")).find("x2"), std::string::npos);
    EXPECT_NE(error_of(parse("time,x1\n0,0\n")).find("f.csv:1"), std::string::npos);
    EXPECT_NE(error_of(parse("t,x1\n0,0\n1\n")).find("f.csv:3"), std::string::npos);
    EXPECT_NE(error_of(parse("t,x1\n0,0\n1,abc\n")).find("f.csv:3"), std::string::npos);
    EXPECT_NE(error_of(parse("t,x1\n1,0\n0,1\n")), "");
    EXPECT_NE(error_of(parse("")), "");
    EXPECT_THROW(read_path_csv("/nonexistent/path.csv"), InputError);
}

TEST(DatasetJsonl, ParsesLabeledPaths) {
    std::istringstream in(
        "{\"id\": \"a\", \"t\": [0, 1], \"x\": [[0, 0], [1, 1]]}\n"
        "\n"
        "{\"id\": \"b\", \"t\": [0, 0.5, 1], \"x\": [[0, 0], [1, 0], [1, -1]]}\n");
    const auto ds = parse_dataset_jsonl(in);
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0].id, "a");
    EXPECT_EQ(ds[1].path.segments(), 2);
    EXPECT_DOUBLE_EQ(ds[1].path.increments()(1, 1), -1.0);
    std::istringstream bad("{\"id\": \"a\", \"t\": [0, 1]}\n");
    EXPECT_NE(error_of([&] { parse_dataset_jsonl(bad, "d.jsonl"); }).find("d.jsonl:1"), std::string::npos);
    std::istringstream broken("{not json\n");
    EXPECT_THROW(parse_dataset_jsonl(broken), InputError);
}

TEST(Words, JsonRoundTrip) {
    gen::Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const Word w = gen::word(rng, 3, gen::uniform_int(rng, 0, 6));
        EXPECT_EQ(parse_word_json(word_to_json(w)), w);
    }
    EXPECT_EQ(word_to_json(Word{1, 2}), "[1,2]");
    EXPECT_THROW(parse_word_json("[0, 1]"), InputError);
}

TEST(Potential, ParsesAndDefaults) {
    const Potential q = parse_potential_json("{\"dim\": 1, \"couplings\": [{\"word\": [1,1,1,1], \"g\": 0.01}]}");
    EXPECT_EQ(q.dim, 1);
    ASSERT_EQ(q.couplings.size(), 1u);
    EXPECT_DOUBLE_EQ(q.couplings[0].g, 0.01);
    EXPECT_EQ(q.couplings[0].word, (Word{1, 1, 1, 1}));
    const Potential blank = parse_potential_json("  \n", 2);
    EXPECT_EQ(blank.dim, 2);
    EXPECT_TRUE(blank.couplings.empty());
    EXPECT_THROW(parse_potential_json("{\"dim\": 1, \"couplings\": [{\"word\": [2], \"g\": 1}]}"), InputError);
    EXPECT_THROW(parse_potential_json("[1, 2"), InputError);
}

TEST(Serialization, LawAndResultsAreJson) {
    const NCLaw law = semicircular_law(1, 4);
    const std::string j = law_to_json(law);
    EXPECT_NE(j.find("\"[1,1]\": 1.0"), std::string::npos);
    const std::string t = tensor_series_to_json(TensorSeries::unit(2, 1));
    EXPECT_NE(t.find("\"depth\""), std::string::npos);
    DevelopmentResult r;
    r.value = {0.5, 0.25};
    r.std_error = 0.125;
    r.samples = 10;
    r.params = {4, 10, 2, 7};
    const std::string d = development_result_to_json(r);
    for (const char* key : {"\"value_re\"", "\"value_im\"", "\"stderr\"", "\"N\"", "\"M\"", "\"K\"", "\"seed\""})
        EXPECT_NE(d.find(key), std::string::npos) << key;
    EstimatorOutput e;
    e.value = 0.5;
    e.ones_count = 25;
    e.shots = 100;
    e.epsilon = 0.1;
    const std::string es = estimator_output_to_json(e);
    EXPECT_NE(es.find("\"ones_count\": 25"), std::string::npos);
    EXPECT_NE(es.find("\"epsilon\""), std::string::npos);
    EXPECT_EQ(es.find("\"delta\""), std::string::npos);
    SparsePauliOperator op(2);
    op.add(0.5, PauliString::parse("XZ"));
    EXPECT_EQ(sparse_operator_to_json(op), "[{\"c\":0.5,\"s\":\"XZ\"}]");
}

TEST(CircuitJsonl, RoundTripPreservesProbability) {
    gen::Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = gen::circuit(rng, gen::uniform_int(rng, 1, 5), gen::uniform_int(rng, 1, 30), 2.0);
        std::stringstream buf;
        write_circuit_jsonl(buf, c);
        const Circuit back = parse_circuit_jsonl(buf);
        ASSERT_EQ(back.gates.size(), c.gates.size());
        for (std::size_t g = 0; g < c.gates.size(); ++g) {
            EXPECT_EQ(back.gates[g].s, c.gates[g].s);
            EXPECT_EQ(back.gates[g].theta, c.gates[g].theta);
        }
        EXPECT_EQ(dqc1_probability(back), dqc1_probability(c));
    }
    std::istringstream mixed("{\"s\": \"XZ\", \"theta\": 0.1}\n{\"s\": \"X\", \"theta\": 0.1}\n");
    EXPECT_NE(error_of([&] { parse_circuit_jsonl(mixed, "c.jsonl"); }).find("c.jsonl:2"), std::string::npos);
    std::istringstream empty("");
    EXPECT_THROW(parse_circuit_jsonl(empty), InputError);
}
