#include "qsig/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsig/error.hpp"

namespace qsig {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string where(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line) + ": "; }

double parse_number(const std::string& s, const std::string& ctx) {
    if (s.empty()) throw InputError(ctx + "empty field");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) throw InputError(ctx + "not a finite number: '" + s + "'");
    return v;
}

std::ifstream open_in(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file + "'");
    return in;
}

}  // namespace

std::string read_file(const std::string& file) {
    auto in = open_in(file);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Path parse_path_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        if (!trim(line).empty()) {
            header = split(trim(line), ',');
            break;
        }
    }
    if (header.empty()) throw InputError(source + ": empty file, expected header t,x1,...,xd");
    if (header[0] != "t") throw InputError(where(source, lineno) + "first header column must be 't', found '" + header[0] + "'");
    if (header.size() < 2) throw InputError(where(source, lineno) + "header has no coordinate columns x1,...,xd");
    for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string want = "x" + std::to_string(c);
        if (header[c] != want)
            throw InputError(where(source, lineno) + "missing header column '" + want + "' (found '" + header[c] + "')");
    }
    const std::size_t d = header.size() - 1;
    std::vector<double> times;
    std::vector<std::vector<double>> points;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(trim(line), ',');
        if (f.size() != d + 1)
            throw InputError(where(source, lineno) + "expected " + std::to_string(d + 1) + " fields, found " +
                             std::to_string(f.size()));
        const std::string ctx = where(source, lineno);
        times.push_back(parse_number(f[0], ctx));
        std::vector<double> p(d);
        for (std::size_t c = 0; c < d; ++c) p[c] = parse_number(f[c + 1], ctx);
        points.push_back(std::move(p));
    }
    try {
        return Path::from_samples(times, points);
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
}

Path read_path_csv(const std::string& file) {
    auto in = open_in(file);
    return parse_path_csv(in, file);
}

std::vector<LabeledPath> parse_dataset_jsonl(std::istream& in, const std::string& source) {
    std::vector<LabeledPath> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string ctx = where(source, lineno);
        try {
            const json j = json::parse(line);
            LabeledPath lp;
            lp.id = j.at("id").get<std::string>();
            const auto t = j.at("t").get<std::vector<double>>();
            const auto x = j.at("x").get<std::vector<std::vector<double>>>();
            lp.path = Path::from_samples(t, x);
            out.push_back(std::move(lp));
        } catch (const json::exception& e) {
            throw InputError(ctx + "invalid dataset record: " + e.what());
        } catch (const InputError& e) {
            throw InputError(ctx + e.what());
        }
    }
    if (out.empty()) throw InputError(source + ": dataset has no records");
    return out;
}

std::vector<LabeledPath> read_dataset(const std::string& file) {
    auto in = open_in(file);
    const auto dot = file.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : file.substr(dot);
    if (ext == ".jsonl" || ext == ".json") return parse_dataset_jsonl(in, file);
    const auto slash = file.find_last_of('/');
    std::string stem = file.substr(slash == std::string::npos ? 0 : slash + 1);
    if (const auto p = stem.rfind('.'); p != std::string::npos) stem = stem.substr(0, p);
    return {LabeledPath{stem, parse_path_csv(in, file)}};
}

std::string word_to_json(const Word& w) { return json(w.letters()).dump(); }

Word parse_word_json(const std::string& text) {
    try {
        Word w(json::parse(text).get<std::vector<int>>());
        if (w.length() > 0 && *std::min_element(w.letters().begin(), w.letters().end()) < 1)
            throw InputError("invalid word JSON: letters start at 1");
        return w;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid word JSON: ") + e.what());
    }
}

Potential parse_potential_json(const std::string& text, int default_dim) {
    if (trim(text).empty()) return Potential::quadratic(default_dim);
    try {
        const json j = json::parse(text);
        Potential V;
        V.dim = j.value("dim", default_dim);
        if (j.contains("couplings"))
            for (const auto& c : j.at("couplings"))
                V.couplings.push_back({Word(c.at("word").get<std::vector<int>>()), c.at("g").get<double>()});
        if (V.dim < 1) throw InputError("potential: dim must be >= 1");
        for (const auto& c : V.couplings)
            if (c.word.empty() || !c.word.valid_for(V.dim))
                throw InputError("potential: coupling word " + c.word.to_string() + " invalid for dim " +
                                 std::to_string(V.dim));
        return V;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid potential JSON: ") + e.what());
    }
}

Potential read_potential(const std::string& file, int default_dim) {
    try {
        return parse_potential_json(read_file(file), default_dim);
    } catch (const InputError& e) {
        throw InputError(file + ": " + e.what());
    }
}

std::string law_to_json(const NCLaw& law, int indent) {
    ojson j;
    j["dim"] = law.dim();
    j["max_degree"] = law.max_degree();
    j["tol"] = law.tol;
    j["residual"] = law.residual;
    j["iterations"] = law.iterations;
    ojson coeffs = ojson::object();
    for (std::size_t i = 0; i < law.coeffs().size(); ++i) coeffs[word_to_json(word_at(i, law.dim()))] = law[i];
    j["coeffs"] = std::move(coeffs);
    return j.dump(indent);
}

std::string tensor_series_to_json(const TensorSeries& s, int indent) {
    ojson j;
    j["dim"] = s.dim();
    j["depth"] = s.depth();
    j["coeffs"] = s.coeffs();
    ojson words = ojson::array();
    for (std::size_t i = 0; i < s.size(); ++i) words.push_back(word_at(i, s.dim()).letters());
    j["words"] = std::move(words);
    return j.dump(indent);
}

std::string development_result_to_json(const DevelopmentResult& r, int indent) {
    ojson j;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["stderr"] = r.std_error;
    j["stderr_im"] = r.std_error_imag;
    j["N"] = r.params.N;
    j["M"] = r.params.M;
    j["K"] = r.params.K;
    j["seed"] = r.params.seed;
    return j.dump(indent);
}

std::string estimator_output_to_json(const EstimatorOutput& e, int indent) {
    ojson j;
    j["value"] = e.value;
    j["ones_count"] = e.ones_count;
    j["shots"] = e.shots;
    j["stderr"] = e.std_error;
    j["m"] = e.params.m;
    j["n"] = e.params.n;
    j["K"] = e.params.K;
    j["seed"] = e.seed;
    if (e.epsilon) j["epsilon"] = *e.epsilon;
    if (e.delta) j["delta"] = *e.delta;
    return j.dump(indent);
}

std::string sparse_operator_to_json(const SparsePauliOperator& op) {
    ojson j = ojson::array();
    for (const auto& t : op.terms()) j.push_back({{"c", t.c}, {"s", t.s.to_string()}});
    return j.dump();
}

void write_circuit_jsonl(std::ostream& out, const Circuit& c) {
    for (const auto& g : c.gates) {
        ojson j;
        j["s"] = g.s.to_string();
        j["theta"] = g.theta;
        out << j.dump() << '\n';
    }
}

Circuit parse_circuit_jsonl(std::istream& in, const std::string& source) {
    Circuit c;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string ctx = where(source, lineno);
        try {
            const json j = json::parse(line);
            Gate g{PauliString::parse(j.at("s").get<std::string>()), j.at("theta").get<double>()};
            if (c.gates.empty() && c.n == 0) c.n = g.s.n();
            if (g.s.n() != c.n) throw InputError("gate string length " + std::to_string(g.s.n()) + " differs from " + std::to_string(c.n));
            c.gates.push_back(std::move(g));
        } catch (const json::exception& e) {
            throw InputError(ctx + "invalid gate record: " + e.what());
        } catch (const InputError& e) {
            throw InputError(ctx + e.what());
        }
    }
    if (c.gates.empty()) throw InputError(source + ": circuit has no gates");
    return c;
}

}  // namespace qsig
