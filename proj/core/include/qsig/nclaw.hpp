#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qsig/paths.hpp"
#include "qsig/words.hpp"

namespace qsig {

struct Coupling {
    Word word;
    double g = 0.0;
};

// V = 1/2 sum_i X_i^2 + sum_j g_j X_{v_j}. The quadratic part is implicit.
struct Potential {
    int dim = 1;
    std::vector<Coupling> couplings;

    static Potential quadratic(int dim) { return Potential{dim, {}}; }
    bool all_even() const;
};

// Coefficients a_w of a tracial law on words of length <= max_degree.
class NCLaw {
public:
    NCLaw() = default;
    NCLaw(int dim, int max_degree);

    int dim() const noexcept { return dim_; }
    int max_degree() const noexcept { return max_degree_; }
    // Zero beyond max_degree.
    double coeff(const Word& w) const;
    double operator[](std::size_t index) const { return coeffs_[index]; }
    double& operator[](std::size_t index) { return coeffs_[index]; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    std::vector<double>& coeffs() noexcept { return coeffs_; }

    // Solver diagnostics.
    double residual = 0.0;
    double tol = 0.0;
    int iterations = 0;

private:
    int dim_ = 0;
    int max_degree_ = 0;
    std::vector<double> coeffs_;
};

struct SdOptions {
    double tol = 1e-12;
    int max_iter = 100000;
    double damping = 0.5;
};

NCLaw semicircular_law(int dim, int max_degree);

// Damped fixed point of a_{wk} = sum_{w=ukv} a_u a_v - sum_j g_j a_{w.D_k v_j},
// started from the semicircular law. Words past max_degree count as 0.
NCLaw solve_schwinger_dyson(const Potential& V, int max_degree, const SdOptions& opts = {});

double sd_residual(const NCLaw& law, const Potential& V, const Word& w, int k);
// Largest sd_residual over all in-range (w, k).
double sd_max_residual(const NCLaw& law, const Potential& V);

struct LimitingDevelopment {
    std::complex<double> value;
    double tail_bound = 0.0;
};

// sum_{|w| <= depth} i^{|w|} a_w S^w(path).
LimitingDevelopment limiting_development(const NCLaw& law, const Path& path, int depth);

// c_n = a_{1^n} / n! for n = 0..order (d = 1 only).
std::vector<double> loop_operator_series(const NCLaw& law, int order);

// For n = 1..order: sum_{a+b=n-1} m_a m_b - m_{n+1} - sum_j g_j k_j m_{n+k_j-1},
// the t^n coefficient of the d = 1 loop equation. Entry 0 is unused.
std::vector<double> loop_equation_residuals(const NCLaw& law, const Potential& V, int order);

// Discrete solution of
//   k(s,t) = 1 - int_{s<=u<=r<=t} k(s,u) k(u,r) <dgamma_u, dgamma_r>
// on the arc-length grid of refine(path, h). k(i, j) is defined for i <= j.
struct GueIntegralSolution {
    Path grid;
    Eigen::MatrixXd k;
    double terminal() const { return k(0, k.cols() - 1); }
};

GueIntegralSolution gue_integral_equation_solve(const Path& path, double h);

}  // namespace qsig
