#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsig/ensembles.hpp"
#include "qsig/error.hpp"
#include "qsig/io.hpp"
#include "qsig/kernels.hpp"
#include "qsig/nclaw.hpp"
#include "qsig/parallel.hpp"
#include "qsig/pauli.hpp"
#include "qsig/qsim.hpp"
#include "qsig/rng.hpp"
#include "qsig/tensor.hpp"

namespace qsig::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Auto, Json, Csv };

struct Global {
    unsigned threads = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "auto";
    std::string output;
};

std::uint64_t env_seed() {
    if (const char* env = std::getenv("QSIG_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InputError(std::string("QSIG_SEED is not an unsigned integer: ") + env);
        }
    }
    return kDefaultSeed;
}

Format parse_format(const std::string& f) {
    if (f == "auto") return Format::Auto;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw InputError("--format must be json, csv or auto");
}

std::string num(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

std::string word_csv(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
    return s;
}

std::string with_newline(std::string s) {
    if (s.empty() || s.back() != '\n') s += '\n';
    return s;
}

// ---------------------------------------------------------------- sig

struct SigArgs {
    std::string file;
    int depth = 4;
};

std::string cmd_sig(const SigArgs& a, Format f) {
    const TensorSeries s = truncated_signature(read_path_csv(a.file), a.depth);
    if (f != Format::Csv) return tensor_series_to_json(s);
    std::string out = "word,coeff\n";
    for (std::size_t i = 0; i < s.size(); ++i) out += word_csv(word_at(i, s.dim())) + "," + num(s.coeffs()[i]) + "\n";
    return out;
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
    std::string method;
    std::vector<std::string> inputs;
    std::string gram_method = "gue-series";
    int depth = 16;
    double grid_h = 1.0 / 256;
    int matrix_n = 256;
    int mc_samples = 400;
    int trotter_k = 64;
    bool trotter_k_set = false;
    int n_qubits = 8;
    int pauli_m = 8;
    int quantum_k = 32;
    long long shots = 4000;
    std::optional<double> epsilon, delta;
    double constant_c = 1.0;
    bool shared_samples = false;
};

KernelConfig make_config(KernelMethod m, const KernelArgs& a, std::uint64_t seed) {
    KernelConfig c;
    c.method = m;
    c.depth = a.depth;
    c.grid_h = a.grid_h;
    c.matrix_n = a.matrix_n;
    c.mc_samples = a.mc_samples;
    c.mc_trotter_k = a.trotter_k;
    c.quantum = {a.pauli_m, a.n_qubits, a.trotter_k_set ? a.trotter_k : a.quantum_k, a.shots};
    c.seed = seed;
    c.shared_samples = a.shared_samples;
    return c;
}

bool auto_mode(const std::optional<double>& eps, const std::optional<double>& delta) {
    if (eps.has_value() != delta.has_value()) throw InputError("--epsilon and --delta must be given together");
    return eps.has_value();
}

ojson kernel_params(const KernelConfig& c) {
    ojson p;
    switch (c.method) {
        case KernelMethod::SignatureSeries:
        case KernelMethod::GueSeries: p["depth"] = c.depth; break;
        case KernelMethod::SignaturePde:
        case KernelMethod::GueIntegralEq: p["grid_h"] = c.grid_h; break;
        case KernelMethod::GueClassicalMc:
            p["N"] = c.matrix_n;
            p["M"] = c.mc_samples;
            p["K"] = c.mc_trotter_k;
            p["seed"] = c.seed;
            break;
        case KernelMethod::GueQuantum:
            p["m"] = c.quantum.m;
            p["n"] = c.quantum.n;
            p["K"] = c.quantum.K;
            p["M"] = c.quantum.M;
            p["seed"] = c.seed;
            break;
    }
    return p;
}

std::string cmd_gram(const KernelArgs& a, const Global& g, Format f) {
    if (a.inputs.size() != 1) throw InputError("kernel gram: expected exactly one dataset file");
    const auto data = read_dataset(a.inputs[0]);
    std::vector<Path> paths;
    std::vector<std::string> labels;
    for (const auto& lp : data) {
        paths.push_back(lp.path);
        labels.push_back(lp.id);
    }
    const KernelConfig cfg = make_config(parse_kernel_method(a.gram_method), a, g.seed);
    const GramResult r = gram_matrix(paths, labels, cfg);
    const auto n = static_cast<Eigen::Index>(labels.size());
    if (f == Format::Json) {
        ojson j;
        j["method"] = to_string(cfg.method);
        j["params"] = kernel_params(cfg);
        j["labels"] = r.labels;
        auto rows = [n](const Eigen::MatrixXd& m) {
            ojson out = ojson::array();
            for (Eigen::Index i = 0; i < n; ++i) {
                std::vector<double> row(static_cast<std::size_t>(n));
                for (Eigen::Index k = 0; k < n; ++k) row[static_cast<std::size_t>(k)] = m(i, k);
                out.push_back(row);
            }
            return out;
        };
        j["matrix"] = rows(r.matrix);
        if (r.std_error) j["stderr"] = rows(*r.std_error);
        j["min_eigenvalue"] = r.min_eigenvalue;
        return j.dump(2);
    }
    std::string out = "id";
    for (const auto& l : labels) out += "," + l;
    out += "\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        out += labels[static_cast<std::size_t>(i)];
        for (Eigen::Index k = 0; k < n; ++k) out += "," + num(r.matrix(i, k));
        out += "\n";
    }
    return out;
}

std::string cmd_kernel(const KernelArgs& a, const Global& g, Format f) {
    if (a.method == "gram") return cmd_gram(a, g, f == Format::Auto ? Format::Csv : f);
    const KernelMethod m = parse_kernel_method(a.method);
    if (a.inputs.size() != 2) throw InputError("kernel " + a.method + ": expected two path files");
    const Path s = read_path_csv(a.inputs[0]), t = read_path_csv(a.inputs[1]);
    KernelConfig cfg = make_config(m, a, g.seed);
    if (auto_mode(a.epsilon, a.delta)) {
        const double var = one_variation(concatenate(s, reverse(t)));
        if (m == KernelMethod::GueQuantum) {
            cfg.quantum = quantum_auto_params(*a.epsilon, *a.delta, var, a.constant_c);
            if (cfg.quantum.n > kMaxQubits) {
                const QuantumParams& q = cfg.quantum;
                throw ResourceError("auto parameters m=" + std::to_string(q.m) + " n=" + std::to_string(q.n) +
                                    " K=" + std::to_string(q.K) + " M=" + std::to_string(q.M) + " need " +
                                    std::to_string(q.n) + " qubits, cap is " + std::to_string(kMaxQubits) +
                                    " (lower --constant-C)");
            }
        } else if (m == KernelMethod::GueClassicalMc) {
            const McParams p = classical_auto_params(*a.epsilon, *a.delta, var, g.seed);
            cfg.matrix_n = p.N;
            cfg.mc_samples = p.M;
            cfg.mc_trotter_k = p.K;
        } else {
            throw InputError("--epsilon/--delta apply only to stochastic kernel methods");
        }
    }
    const KernelValue v = kernel(s, t, cfg);
    if (f == Format::Csv) {
        return "method,value,tail_bound,stderr\n" + to_string(m) + "," + num(v.value) + "," + num(v.tail_bound) + "," +
               (v.std_error ? num(*v.std_error) : "") + "\n";
    }
    ojson j;
    j["method"] = to_string(m);
    j["value"] = v.value;
    j["tail_bound"] = v.tail_bound;
    if (v.std_error) j["stderr"] = *v.std_error;
    j["params"] = kernel_params(cfg);
    if (a.epsilon) {
        j["epsilon"] = *a.epsilon;
        j["delta"] = *a.delta;
        if (m == KernelMethod::GueQuantum) j["constant_C"] = a.constant_c;
    }
    return j.dump(2);
}

// ---------------------------------------------------------------- sd-law

struct SdArgs {
    std::string potential;
    int dim = 1;
    int max_degree = 8;
    SdOptions opts;
};

std::string cmd_sd_law(const SdArgs& a, Format f) {
    const Potential V = a.potential.empty() ? Potential::quadratic(a.dim) : read_potential(a.potential, a.dim);
    const NCLaw law = solve_schwinger_dyson(V, a.max_degree, a.opts);
    if (f != Format::Csv) return law_to_json(law);
    std::string out = "word,coeff\n";
    for (std::size_t i = 0; i < law.coeffs().size(); ++i) out += word_csv(word_at(i, law.dim())) + "," + num(law[i]) + "\n";
    return out;
}

// ---------------------------------------------------------------- counts

struct CountArgs {
    int m = 0;
    int p = 0;
};

std::string cmd_counts(const CountArgs& a, Format f) {
    const std::string W = count_even_words(a.m, a.p).str(), N = count_pair_words(a.m, a.p).str();
    if (f == Format::Csv) return "m,p,W,N\n" + std::to_string(a.m) + "," + std::to_string(a.p) + "," + W + "," + N + "\n";
    // Exact integers are written as JSON number literals of any length.
    return "{\n  \"m\": " + std::to_string(a.m) + ",\n  \"p\": " + std::to_string(a.p) + ",\n  \"W\": " + W +
           ",\n  \"N\": " + N + "\n}";
}

// ---------------------------------------------------------------- mc

struct McArgs {
    std::string file;
    int matrix_n = 256;
    int samples = 400;
    int trotter_k = 64;
    std::optional<double> epsilon, delta;
    bool dense = false;
};

std::string cmd_mc(const McArgs& a, const Global& g, Format f) {
    const Path p = read_path_csv(a.file);
    McParams params{a.matrix_n, a.samples, a.trotter_k, g.seed};
    if (auto_mode(a.epsilon, a.delta)) params = classical_auto_params(*a.epsilon, *a.delta, one_variation(p), g.seed);
    McOptions opts;
    opts.tridiagonal_fast_path = !a.dense;
    const DevelopmentResult r = classical_mc_estimate(p, params.N, params.M, params.K, g.seed, opts);
    if (f == Format::Csv) {
        return "value_re,value_im,stderr,N,M,K,seed\n" + num(r.value.real()) + "," + num(r.value.imag()) + "," +
               num(r.std_error) + "," + std::to_string(params.N) + "," + std::to_string(params.M) + "," +
               std::to_string(params.K) + "," + std::to_string(g.seed) + "\n";
    }
    ojson j = ojson::parse(development_result_to_json(r));
    if (a.epsilon) {
        j["epsilon"] = *a.epsilon;
        j["delta"] = *a.delta;
    }
    return j.dump(2);
}

// ---------------------------------------------------------------- qsim

struct QsimArgs {
    std::string file;
    int n_qubits = 8;
    int pauli_m = 8;
    int trotter_k = 32;
    long long shots = 4000;
    bool shots_set = false;
    std::optional<double> epsilon, delta;
    double constant_c = 1.0;
    std::string export_circuit;
    std::string replay;
};

std::string cmd_replay(const QsimArgs& a, const Global& g, Format f) {
    std::ifstream in(a.replay);
    if (!in) throw InputError("cannot open " + a.replay);
    const Circuit c = parse_circuit_jsonl(in, a.replay);
    const std::complex<double> tr = circuit_trace_exact(c);
    const double p = dqc1_probability(c);
    std::optional<EstimatorOutput> est;
    if (a.shots_set) est = dqc1_estimate(c, a.shots, g.seed);
    if (f == Format::Csv) {
        std::string out = "n,gates,trace_re,trace_im,dqc1_probability";
        if (est) out += ",value,ones_count,shots,stderr";
        out += "\n" + std::to_string(c.n) + "," + std::to_string(c.gates.size()) + "," + num(tr.real()) + "," +
               num(tr.imag()) + "," + num(p);
        if (est)
            out += "," + num(est->value) + "," + std::to_string(est->ones_count) + "," + std::to_string(est->shots) + "," +
                   num(est->std_error);
        return out + "\n";
    }
    ojson j;
    j["n"] = c.n;
    j["gates"] = c.gates.size();
    j["trace_re"] = tr.real();
    j["trace_im"] = tr.imag();
    j["dqc1_probability"] = p;
    if (est) j["estimate"] = ojson::parse(estimator_output_to_json(*est));
    return j.dump(2);
}

std::string cmd_qsim(const QsimArgs& a, const Global& g, Format f) {
    if (!a.replay.empty()) {
        if (!a.file.empty() || !a.export_circuit.empty()) throw InputError("qsim --replay takes no path file or export");
        return cmd_replay(a, g, f);
    }
    if (a.file.empty()) throw InputError("qsim: a path file or --replay is required");
    const Path p = read_path_csv(a.file);
    QuantumParams params{a.pauli_m, a.n_qubits, a.trotter_k, a.shots};
    if (auto_mode(a.epsilon, a.delta)) params = quantum_auto_params(*a.epsilon, *a.delta, one_variation(p), a.constant_c);
    if (params.n > kMaxQubits)
        throw ResourceError("qsim needs " + std::to_string(params.n) + " qubits (m=" + std::to_string(params.m) +
                            " K=" + std::to_string(params.K) + " M=" + std::to_string(params.M) + "), cap is " +
                            std::to_string(kMaxQubits));
    if (!a.export_circuit.empty()) {
        std::ofstream out(a.export_circuit);
        if (!out) throw InputError("cannot write " + a.export_circuit);
        write_circuit_jsonl(out, shot_circuit(p, params, g.seed, 0));
    }
    EstimatorOutput r = qsigker_run(p, params, g.seed);
    r.epsilon = a.epsilon;
    r.delta = a.delta;
    if (f == Format::Csv) {
        return "value,ones_count,shots,stderr,m,n,K,seed\n" + num(r.value) + "," + std::to_string(r.ones_count) + "," +
               std::to_string(r.shots) + "," + num(r.std_error) + "," + std::to_string(params.m) + "," +
               std::to_string(params.n) + "," + std::to_string(params.K) + "," + std::to_string(g.seed) + "\n";
    }
    return estimator_output_to_json(r);
}

void emit(const std::string& text, const Global& g, std::ostream& out) {
    if (g.output.empty()) {
        out << with_newline(text);
        return;
    }
    std::ofstream file(g.output);
    if (!file) throw InputError("cannot write " + g.output);
    file << with_newline(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Path signatures, GUE kernels and their quantum estimators"};
    app.name("qsig");
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    try {
        g.seed = env_seed();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    app.add_option("--threads", g.threads, "Worker threads (default: QSIG_THREADS or all cores)");
    app.add_option("--seed", g.seed, "Top-level seed (default: QSIG_SEED or 12345)");
    app.add_option("--format", g.format, "Output format: json, csv or auto")->check(CLI::IsMember({"json", "csv", "auto"}));
    app.add_option("--output,-o", g.output, "Write the result to this file instead of stdout");

    SigArgs sig;
    auto* sig_cmd = app.add_subcommand("sig", "Truncated signature of a CSV path");
    sig_cmd->add_option("file", sig.file, "Path CSV (t,x1,...,xd)")->required();
    sig_cmd->add_option("--depth", sig.depth, "Truncation depth")->check(CLI::NonNegativeNumber);

    KernelArgs ker;
    auto* ker_cmd = app.add_subcommand("kernel", "Kernel between two paths, or a Gram matrix");
    ker_cmd->add_option("route", ker.method,
                        "signature-pde, signature-series, gue-series, gue-integral-eq, gue-classical-mc, "
                        "gue-quantum, or gram")
        ->required();
    ker_cmd->add_option("inputs", ker.inputs, "Two path CSVs, or one dataset for gram")->required();
    ker_cmd->add_option("--method", ker.gram_method, "Kernel method for gram");
    ker_cmd->add_option("--depth", ker.depth, "Series depth")->check(CLI::NonNegativeNumber);
    ker_cmd->add_option("--grid-h", ker.grid_h, "Grid step for pde and integral-equation routes")
        ->check(CLI::PositiveNumber);
    ker_cmd->add_option("--matrix-n", ker.matrix_n, "Matrix size N (classical Monte Carlo)")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--mc-samples", ker.mc_samples, "Ensemble draws M (classical Monte Carlo)")
        ->check(CLI::PositiveNumber);
    auto* tk = ker_cmd->add_option("--trotter-k", ker.trotter_k, "Trotter steps K (0: exact development for classical)")
                   ->check(CLI::NonNegativeNumber);
    ker_cmd->add_option("--n-qubits", ker.n_qubits, "Qubits n (quantum)")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--pauli-m", ker.pauli_m, "Pauli strings m per operator (quantum)")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--shots", ker.shots, "Shots M (quantum)")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--epsilon", ker.epsilon, "Target accuracy; selects parameters automatically")
        ->check(CLI::PositiveNumber);
    ker_cmd->add_option("--delta", ker.delta, "Failure probability for --epsilon")->check(CLI::Range(0.0, 1.0));
    ker_cmd->add_option("--constant-C", ker.constant_c, "Sparse-approximation constant for quantum auto mode")
        ->check(CLI::PositiveNumber);
    ker_cmd->add_flag("--shared-samples", ker.shared_samples, "Gram: one sample stream for every entry");

    SdArgs sd;
    auto* sd_cmd = app.add_subcommand("sd-law", "Solve the Schwinger-Dyson equations for a potential");
    sd_cmd->add_option("--potential", sd.potential, "Potential JSON (default: quadratic)");
    sd_cmd->add_option("--dim", sd.dim, "Number of variables when the potential omits it")->check(CLI::PositiveNumber);
    sd_cmd->add_option("--max-degree", sd.max_degree, "Largest word length")->check(CLI::NonNegativeNumber);
    sd_cmd->add_option("--tol", sd.opts.tol, "Fixed-point tolerance")->check(CLI::PositiveNumber);
    sd_cmd->add_option("--max-iter", sd.opts.max_iter, "Iteration limit")->check(CLI::PositiveNumber);
    sd_cmd->add_option("--damping", sd.opts.damping, "Damping factor in (0, 1]")->check(CLI::Range(0.0, 1.0));

    CountArgs counts;
    auto* counts_cmd = app.add_subcommand("counts", "Even-word and pair-word counts W(m,p), N(m,p)");
    counts_cmd->add_option("--m", counts.m, "Alphabet size")->required();
    counts_cmd->add_option("--p", counts.p, "Half word length")->required();

    McArgs mc;
    auto* mc_cmd = app.add_subcommand("mc", "Classical Monte Carlo estimate of the expected GUE development trace");
    mc_cmd->add_option("file", mc.file, "Path CSV")->required();
    mc_cmd->add_option("--matrix-n", mc.matrix_n, "Matrix size N")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--mc-samples", mc.samples, "Ensemble draws M")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--trotter-k", mc.trotter_k, "Truncation steps K (0: exact development)")
        ->check(CLI::NonNegativeNumber);
    mc_cmd->add_option("--epsilon", mc.epsilon, "Target accuracy; selects N, M, K")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--delta", mc.delta, "Failure probability for --epsilon")->check(CLI::Range(0.0, 1.0));
    mc_cmd->add_flag("--dense", mc.dense, "Sample dense matrices even for d = 1");

    QsimArgs qs;
    auto* qs_cmd = app.add_subcommand("qsim", "One-clean-qubit estimator on the Trotterized Pauli development");
    qs_cmd->add_option("file", qs.file, "Path CSV");
    qs_cmd->add_option("--n-qubits", qs.n_qubits, "Qubits n")->check(CLI::PositiveNumber);
    qs_cmd->add_option("--pauli-m", qs.pauli_m, "Pauli strings m per operator")->check(CLI::PositiveNumber);
    qs_cmd->add_option("--trotter-k", qs.trotter_k, "Trotter steps K")->check(CLI::PositiveNumber);
    auto* shots = qs_cmd->add_option("--shots", qs.shots, "Shots M")->check(CLI::PositiveNumber);
    qs_cmd->add_option("--epsilon", qs.epsilon, "Target accuracy; selects m, n, K, M")->check(CLI::PositiveNumber);
    qs_cmd->add_option("--delta", qs.delta, "Failure probability for --epsilon")->check(CLI::Range(0.0, 1.0));
    qs_cmd->add_option("--constant-C", qs.constant_c, "Sparse-approximation constant for auto mode")
        ->check(CLI::PositiveNumber);
    qs_cmd->add_option("--export-circuit", qs.export_circuit, "Write the first shot's circuit as JSON lines");
    qs_cmd->add_option("--replay", qs.replay, "Evaluate an exported circuit instead of sampling one");

    std::vector<std::string> argv_store{"qsig"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    ker.trotter_k_set = tk->count() > 0;
    qs.shots_set = shots->count() > 0;

    try {
        if (g.threads > 0) set_thread_count(g.threads);
        const Format f = parse_format(g.format);
        std::string text;
        if (*sig_cmd) text = cmd_sig(sig, f);
        else if (*ker_cmd) text = cmd_kernel(ker, g, f);
        else if (*sd_cmd) text = cmd_sd_law(sd, f);
        else if (*counts_cmd) text = cmd_counts(counts, f);
        else if (*mc_cmd) text = cmd_mc(mc, g, f);
        else text = cmd_qsim(qs, g, f);
        emit(text, g, out);
        return kExitOk;
    } catch (const ConvergenceError& e) {
        ojson j;
        j["error"] = e.what();
        j["residuals"] = e.residuals();
        err << j.dump(2) << "\n";
        return kExitConvergence;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qsig::cli
