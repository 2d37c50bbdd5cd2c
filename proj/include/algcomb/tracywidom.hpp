#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace algcomb {

/// Values on t_min, t_min + step, ..., one per entry.
struct RealGrid {
    double t_min = 0;
    double step = 0;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double t_at(std::size_t i) const noexcept { return t_min + step * static_cast<double>(i); }
    double t_max() const noexcept { return t_at(values.empty() ? 0 : values.size() - 1); }
};

struct AiryPair {
    double ai;
    double aip;  // Ai'
};

/// Largest |x| handled by the Maclaurin series; the asymptotic expansions
/// take over beyond it.
inline constexpr double kAirySwitch = 8.0;

/// Ai and Ai' for |x| <= 40. Throws std::domain_error outside that range.
AiryPair airy_pair(double x);
inline double airy(double x) { return airy_pair(x).ai; }

/// Max |Ai''(x) - x Ai(x)| over [a, b] on step h, with Ai'' from a sixth-order
/// central difference.
double airy_residual(double a, double b, double h);

struct PainleveOptions {
    double x0 = 8.0;        // asymptotic matching point, seeded with -Ai
    double x_end = -10.0;   // left end of the integration
    double step = 1.0 / 1024;
    int shooting_iterations = 60;
};

/// Hastings-McLeod solution u of u'' = 2u^3 + xu, u ~ -Ai, on a uniform grid,
/// together with the tail integral I(x) = int_x^inf (y - x) u(y)^2 dy and its
/// derivative I'(x) = -int_x^inf u^2.
struct PainleveSolution {
    PainleveOptions options;
    RealGrid u, du, tail, dtail;
    double amplitude = 1.0;  // seed multiplier chosen by the shooting step
};

/// Backward RK4 from x0 with shooting on the seed amplitude. Throws
/// std::runtime_error if no amplitude in the bracket reaches x_end without
/// blowing up or changing sign.
PainleveSolution painleve2_hastings_mcleod(const PainleveOptions& options = {});

/// Max |u'' - 2u^3 - xu| on the grid interior (sixth-order stencil).
double painleve_residual(const PainleveSolution& sol);

/// F(t) = exp(-I(t)); beyond the integrated range the Airy tail is used.
double tw_cdf_at(const PainleveSolution& sol, double t);
/// F'(t) = -I'(t) F(t).
double tw_density_at(const PainleveSolution& sol, double t);

/// F on [t_min, t_max] with the given step. Throws std::runtime_error if the
/// tabulated F decreases anywhere.
RealGrid tw_cdf(const PainleveSolution& sol, double t_min, double t_max, double step);

struct TwMoments {
    double mean = 0;
    double variance = 0;
    double mass = 0;
};

/// Moments against dF by Simpson's rule over the solution grid.
TwMoments tw_moments(const PainleveSolution& sol);

/// Inverse of F by bisection, for q in (0, 1).
double tw_quantile(const PainleveSolution& sol, double q);

/// Eigenvalues of a Hermitian matrix (row-major n x n), descending, via
/// Householder reduction to real tridiagonal form and implicit QL. Throws
/// std::runtime_error if an eigenvalue fails to converge.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n);

/// A GUE matrix with density proportional to exp(-tr M^2), drawn from (seed, index).
std::vector<std::complex<double>> gue_matrix(int n, std::uint64_t seed, std::uint64_t index = 0);

/// Descending eigenvalues of gue_matrix(n, seed, index). n <= 500.
std::vector<double> gue_sample(int n, std::uint64_t seed, std::uint64_t index = 0);

/// (alpha_k - sqrt(2n)) sqrt(2) n^{1/6} for the k-th largest eigenvalue
/// (k = 1, 2, ...) of `samples` matrices; sample i uses (seed, i).
std::vector<double> gue_scaled_eigenvalue(int n, long samples, std::uint64_t seed, int k = 1, int threads = 1);

/// sup |F_emp - F| over the sample points. Throws on an empty sample.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

struct Histogram {
    double lo = 0, width = 0;
    std::vector<long> counts;
};

Histogram histogram(const std::vector<double>& sample, double lo, double hi, int bins);

} // namespace algcomb
