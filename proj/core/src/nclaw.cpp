#include "qsig/nclaw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qsig/error.hpp"

namespace qsig {

bool Potential::all_even() const {
    return std::all_of(couplings.begin(), couplings.end(), [](const Coupling& c) { return c.word.length() % 2 == 0; });
}

NCLaw::NCLaw(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
    if (dim < 1 || max_degree < 0) throw InputError("NCLaw: need dim >= 1 and max_degree >= 0");
    coeffs_.assign(word_count(dim, max_degree), 0.0);
    coeffs_[0] = 1.0;
}

double NCLaw::coeff(const Word& w) const {
    if (static_cast<int>(w.length()) > max_degree_) return 0.0;
    if (!w.valid_for(dim_)) throw InputError("NCLaw::coeff: letter out of range in " + w.to_string());
    return coeffs_[word_index(w, dim_)];
}

NCLaw semicircular_law(int dim, int max_degree) {
    NCLaw law(dim, max_degree);
    const std::size_t n = law.coeffs().size();
    for (std::size_t i = 1; i < n; ++i) {
        const Word w = word_at(i, dim);
        if (w.length() % 2 == 0) law[i] = semicircular_moment(w);
    }
    return law;
}

namespace {

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void check_potential(const Potential& V) {
    if (V.dim < 1) throw InputError("potential: dim must be >= 1");
    for (const auto& c : V.couplings) {
        if (c.word.empty() || !c.word.valid_for(V.dim))
            throw InputError("potential: coupling word " + c.word.to_string() + " invalid for dim " +
                             std::to_string(V.dim));
        if (!std::isfinite(c.g)) throw InputError("potential: coupling must be finite");
    }
}

// One recursion row: target a_{wk} expressed through quadratic and linear terms.
struct Row {
    std::size_t target;
    std::vector<std::pair<std::size_t, std::size_t>> quad;
    std::vector<std::pair<double, std::size_t>> lin;
};

std::vector<Row> compile_rows(const Potential& V, int D) {
    const int d = V.dim;
    const std::size_t n = word_count(d, D);
    std::vector<std::vector<std::vector<Word>>> dv(V.couplings.size());
    for (std::size_t j = 0; j < V.couplings.size(); ++j) {
        dv[j].resize(static_cast<std::size_t>(d) + 1);
        for (int k = 1; k <= d; ++k) dv[j][static_cast<std::size_t>(k)] = cyclic_derivative(V.couplings[j].word, k);
    }
    std::vector<Row> rows;
    rows.reserve(n - 1);
    for (std::size_t t = 1; t < n; ++t) {
        const Word wk = word_at(t, d);
        const Word w = wk.slice(0, wk.length() - 1);
        const int k = wk[wk.length() - 1];
        Row r{t, {}, {}};
        for (const auto& [u, v] : free_difference_quotient(w, k)) r.quad.emplace_back(word_index(u, d), word_index(v, d));
        for (std::size_t j = 0; j < V.couplings.size(); ++j)
            for (const Word& c : dv[j][static_cast<std::size_t>(k)])
                if (static_cast<int>(w.length() + c.length()) <= D)
                    r.lin.emplace_back(V.couplings[j].g, word_index(w + c, d));
        rows.push_back(std::move(r));
    }
    return rows;
}

double eval_row(const Row& r, const std::vector<double>& a) {
    double s = 0.0;
    for (const auto& [u, v] : r.quad) s += a[u] * a[v];
    for (const auto& [g, i] : r.lin) s -= g * a[i];
    return s;
}

}  // namespace

NCLaw solve_schwinger_dyson(const Potential& V, int max_degree, const SdOptions& opts) {
    check_potential(V);
    if (max_degree < 2) throw InputError("solve_schwinger_dyson: max_degree must be >= 2");
    if (!(opts.damping > 0.0 && opts.damping <= 1.0)) throw InputError("solve_schwinger_dyson: damping must be in (0, 1]");
    NCLaw law = semicircular_law(V.dim, max_degree);
    const auto rows = compile_rows(V, max_degree);
    std::vector<double>& a = law.coeffs();
    std::vector<double> f(a.size());
    std::vector<double> trace;
    const double lambda = opts.damping;
    for (int it = 0; it <= opts.max_iter; ++it) {
        f[0] = 1.0;
        double res = 0.0;
        for (const Row& r : rows) {
            f[r.target] = eval_row(r, a);
            res = std::max(res, std::abs(f[r.target] - a[r.target]));
        }
        if (!std::isfinite(res)) {
            trace.push_back(res);
            throw ConvergenceError("solve_schwinger_dyson: iteration diverged (couplings outside convergence ball)",
                                   std::move(trace));
        }
        trace.push_back(res);
        if (res <= opts.tol) {
            law.residual = res;
            law.tol = opts.tol;
            law.iterations = it;
            return law;
        }
        if (it == opts.max_iter) break;
        double amax = 0.0;
        for (std::size_t i = 1; i < a.size(); ++i) {
            a[i] = (1.0 - lambda) * a[i] + lambda * f[i];
            amax = std::max(amax, std::abs(a[i]));
        }
        if (!std::isfinite(amax) || amax > 1e150)
            throw ConvergenceError("solve_schwinger_dyson: iteration diverged (couplings outside convergence ball)",
                                   std::move(trace));
    }
    const std::string msg = "solve_schwinger_dyson: no convergence within " + std::to_string(opts.max_iter) +
                            " iterations, last residual " + fmt_sci(trace.back());
    throw ConvergenceError(msg, std::move(trace));
}

double sd_residual(const NCLaw& law, const Potential& V, const Word& w, int k) {
    if (static_cast<int>(w.length()) + 1 > law.max_degree())
        throw InputError("sd_residual: |w| + 1 exceeds the law's max_degree");
    double s = 0.0;
    for (const auto& [u, v] : free_difference_quotient(w, k)) s += law.coeff(u) * law.coeff(v);
    s -= law.coeff(w + Word{k});
    for (const auto& c : V.couplings)
        for (const Word& dc : cyclic_derivative(c.word, k)) s -= c.g * law.coeff(w + dc);
    return std::abs(s);
}

double sd_max_residual(const NCLaw& law, const Potential& V) {
    const auto rows = compile_rows(V, law.max_degree());
    double res = 0.0;
    for (const Row& r : rows) res = std::max(res, std::abs(eval_row(r, law.coeffs()) - law[r.target]));
    return res;
}

LimitingDevelopment limiting_development(const NCLaw& law, const Path& path, int depth) {
    if (path.dim() != law.dim()) throw InputError("limiting_development: path and law dimension differ");
    if (depth > law.max_degree()) throw InputError("limiting_development: depth exceeds the law's max_degree");
    const TensorSeries sig = truncated_signature(path, depth);
    const int d = law.dim();
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> total = 0.0;
    double radius = 2.0;
    for (int n = 0; n <= depth; ++n) {
        const std::size_t a = word_offset(d, n), b = word_offset(d, n + 1);
        double s = 0.0, amax = 0.0;
        for (std::size_t i = a; i < b; ++i) {
            s += law[i] * sig[i];
            amax = std::max(amax, std::abs(law[i]));
        }
        if (n > 0 && amax > 0.0) radius = std::max(radius, std::pow(amax, 1.0 / n));
        total += ipow[n % 4] * s;
    }
    return {total, signature_tail_bound(path, depth, radius)};
}

std::vector<double> loop_operator_series(const NCLaw& law, int order) {
    if (law.dim() != 1) throw InputError("loop_operator_series: law must have d = 1");
    if (order > law.max_degree()) throw InputError("loop_operator_series: order exceeds max_degree");
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    double fact = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        c[static_cast<std::size_t>(n)] = law[static_cast<std::size_t>(n)] / fact;
    }
    return c;
}

std::vector<double> loop_equation_residuals(const NCLaw& law, const Potential& V, int order) {
    if (law.dim() != 1 || V.dim != 1) throw InputError("loop_equation_residuals: d = 1 only");
    const int D = law.max_degree();
    auto m = [&](int n) { return n <= D ? law[static_cast<std::size_t>(n)] : 0.0; };
    std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int a = 0; a <= n - 1; ++a) s += m(a) * m(n - 1 - a);
        s -= m(n + 1);
        for (const auto& c : V.couplings) {
            const int kj = static_cast<int>(c.word.length());
            s -= c.g * kj * m(n + kj - 1);
        }
        r[static_cast<std::size_t>(n)] = s;
    }
    return r;
}

GueIntegralSolution gue_integral_equation_solve(const Path& path, double h) {
    GueIntegralSolution sol{refine(path, h), {}};
    const int n = sol.grid.segments();
    const Eigen::MatrixXd G = sol.grid.increments().transpose() * sol.grid.increments();
    Eigen::MatrixXd& k = sol.k;
    k = Eigen::MatrixXd::Zero(n + 1, n + 1);
    std::vector<double> row(static_cast<std::size_t>(n) + 1);
    for (int i = n; i >= 0; --i) {
        k(i, i) = 1.0;
        row[static_cast<std::size_t>(i)] = 1.0;
        double I = 0.0;
        for (int j = i + 1; j <= n; ++j) {
            const int b = j - 1;
            // Strip u in [i, r], r in cell b. Rectangles a < b never touch k(i, j)
            // except through the corner (u, r) = (i, j) of the a = i cell.
            double known = 0.0, coef = 0.0;
            for (int a = i + 1; a < b; ++a) {
                known += 0.25 * G(a, b) *
                         (row[static_cast<std::size_t>(a)] * (k(a, b) + k(a, j)) +
                          row[static_cast<std::size_t>(a) + 1] * (k(a + 1, b) + k(a + 1, j)));
            }
            if (i < b) {
                const double w = 0.25 * G(i, b);
                known += w * (k(i, b) + row[static_cast<std::size_t>(i) + 1] * (k(i + 1, b) + k(i + 1, j)));
                coef += w;
            }
            // Triangle u <= r inside cell b: vertices (b,b), (b,j), (j,j).
            const double wt = G(b, b) / 6.0;
            const double kib = row[static_cast<std::size_t>(b)];
            known += wt * kib;
            if (b == i) {
                coef += wt * (kib + 1.0);
            } else {
                known += wt * kib * k(b, j);
                coef += wt;
            }
            const double x = (1.0 - I - known) / (1.0 + coef);
            I += known + coef * x;
            k(i, j) = x;
            row[static_cast<std::size_t>(j)] = x;
        }
    }
    return sol;
}

}  // namespace qsig
