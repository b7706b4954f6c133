#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsig/ensembles.hpp"
#include "qsig/nclaw.hpp"
#include "qsig/paths.hpp"
#include "qsig/pauli.hpp"
#include "qsig/qsim.hpp"
#include "qsig/tensor.hpp"
#include "qsig/words.hpp"

namespace qsig {

// CSV with header t,x1,...,xd and one sample per row. `source` names the
// input in error messages.
Path parse_path_csv(std::istream& in, const std::string& source = "<stream>");
Path read_path_csv(const std::string& file);

struct LabeledPath {
    std::string id;
    Path path;
};

// JSON lines: {"id": ..., "t": [...], "x": [[...], ...]} per line.
std::vector<LabeledPath> parse_dataset_jsonl(std::istream& in, const std::string& source = "<stream>");
// A .jsonl file, or a single CSV path labelled by its file stem.
std::vector<LabeledPath> read_dataset(const std::string& file);

std::string word_to_json(const Word& w);
Word parse_word_json(const std::string& text);

// {"dim": d, "couplings": [{"word": [...], "g": ...}]}. Blank text gives the
// quadratic potential in `default_dim` letters.
Potential parse_potential_json(const std::string& text, int default_dim = 1);
Potential read_potential(const std::string& file, int default_dim = 1);

std::string law_to_json(const NCLaw& law, int indent = 2);
std::string tensor_series_to_json(const TensorSeries& s, int indent = 2);
std::string development_result_to_json(const DevelopmentResult& r, int indent = 2);
std::string estimator_output_to_json(const EstimatorOutput& e, int indent = 2);
std::string sparse_operator_to_json(const SparsePauliOperator& op);

// One gate per line: {"s": "XIZ", "theta": 0.0123}.
void write_circuit_jsonl(std::ostream& out, const Circuit& c);
Circuit parse_circuit_jsonl(std::istream& in, const std::string& source = "<stream>");

std::string read_file(const std::string& file);

}  // namespace qsig
