#include "algcomb/tracywidom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "algcomb/parallel.hpp"

namespace algcomb {

namespace {

using quad = __float128;

constexpr double kPi = 3.14159265358979323846;

// Ai(0) and -Ai'(0) as a long double plus its rounding error, so the sum is
// good to quad precision.
const quad kAi0 = static_cast<quad>(0.355028053887817239260063186004L) + static_cast<quad>(4.83712933302789945320567e-21L);
const quad kAip0 = static_cast<quad>(0.258819403792806798405183560189L) + static_cast<quad>(1.237444849179378973218841e-20L);

AiryPair airy_series(double xd) {
    const quad x = xd, x3 = x * x * x;
    // f = sum 3^k (1/3)_k x^{3k}/(3k)!, g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    quad t = 1, s = x, tp = x * x / 2, sp = 1;
    quad f = t, g = s, fp = tp, gp = sp;
    for (int k = 1; k < 400; ++k) {
        t *= x3 / ((3 * k - 1) * (3 * k));
        s *= x3 / ((3 * k) * (3 * k + 1));
        tp *= x3 / ((3 * k) * (3 * k + 2));
        sp *= x3 / ((3 * k) * (3 * k - 2));
        f += t;
        g += s;
        fp += tp;
        gp += sp;
        const quad biggest = std::max({t < 0 ? -t : t, s < 0 ? -s : s, tp < 0 ? -tp : tp, sp < 0 ? -sp : sp});
        if (k > 4 && biggest < static_cast<quad>(1e-36L)) break;
    }
    return {static_cast<double>(kAi0 * f - kAip0 * g), static_cast<double>(kAi0 * fp - kAip0 * gp)};
}

// u_k and v_k of the asymptotic expansions.
const std::array<double, 40>& asymptotic_u() {
    static const std::array<double, 40> u = [] {
        std::array<double, 40> a{};
        a[0] = 1;
        for (int k = 1; k < 40; ++k)
            a[k] = a[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
        return a;
    }();
    return u;
}

double asymptotic_v(int k) { return k == 0 ? 1.0 : -(6.0 * k + 1) / (6.0 * k - 1) * asymptotic_u()[k]; }

// Partial sums of sum_k (-1)^k c_{start + 2k...} / zeta^k in the given stride,
// stopped before terms start to grow.
template <class Coef>
double asymptotic_sum(Coef c, double zeta, int start, int stride) {
    double sum = 0, prev = INFINITY;
    int sign = 1;
    for (int k = start; k < 40; k += stride) {
        const double term = c(k) / std::pow(zeta, k);
        if (std::fabs(term) > prev) break;
        sum += sign * term;
        prev = std::fabs(term);
        if (prev < 1e-18 * std::fabs(sum)) break;
        sign = -sign;
    }
    return sum;
}

AiryPair airy_asymptotic(double x) {
    const auto& u = asymptotic_u();
    auto uc = [&](int k) { return u[k]; };
    auto vc = [](int k) { return asymptotic_v(k); };
    const double sqrtpi = std::sqrt(kPi);
    if (x > 0) {
        const double zeta = 2.0 / 3.0 * x * std::sqrt(x), q = std::sqrt(std::sqrt(x)), e = std::exp(-zeta);
        return {e / (2 * sqrtpi * q) * asymptotic_sum(uc, zeta, 0, 1), -q * e / (2 * sqrtpi) * asymptotic_sum(vc, zeta, 0, 1)};
    }
    const double z = -x, zeta = 2.0 / 3.0 * z * std::sqrt(z), q = std::sqrt(std::sqrt(z));
    const double c = std::cos(zeta - kPi / 4), s = std::sin(zeta - kPi / 4);
    const double ue = asymptotic_sum(uc, zeta, 0, 2), uo = asymptotic_sum(uc, zeta, 1, 2);
    const double ve = asymptotic_sum(vc, zeta, 0, 2), vo = asymptotic_sum(vc, zeta, 1, 2);
    return {(c * ue + s * uo) / (sqrtpi * q), q / sqrtpi * (s * ve - c * vo)};
}

// int_x^inf Ai^2 = Ai'^2 - x Ai^2 and int_x^inf (y-x) Ai(y)^2 dy =
// (2/3) x^2 Ai^2 - (2/3) x Ai'^2 - (1/3) Ai Ai', both exact.
struct AiryTail {
    double tail;   // I(x)
    double dtail;  // I'(x)
};

AiryTail airy_tail(double x, double amplitude = 1.0) {
    const AiryPair a = airy_pair(x);
    const double k2 = amplitude * amplitude;
    const double mass = a.aip * a.aip - x * a.ai * a.ai;
    const double tail = 2.0 / 3.0 * x * x * a.ai * a.ai - 2.0 / 3.0 * x * a.aip * a.aip - a.ai * a.aip / 3.0;
    return {k2 * tail, -k2 * mass};
}

constexpr std::array<double, 7> kSecondDiff = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};

} // namespace

AiryPair airy_pair(double x) {
    if (!(std::fabs(x) <= 40)) throw std::domain_error("airy: |x| must be at most 40");
    return std::fabs(x) <= kAirySwitch ? airy_series(x) : airy_asymptotic(x);
}

double airy_residual(double a, double b, double h) {
    double worst = 0;
    for (double x = a; x <= b + 1e-12; x += h) {
        double d2 = 0;
        for (int j = -3; j <= 3; ++j) d2 += kSecondDiff[j + 3] * airy(x + j * h);
        d2 /= h * h;
        worst = std::max(worst, std::fabs(d2 - x * airy(x)));
    }
    return worst;
}

namespace {

using State = std::array<long double, 4>;  // u, u', I, I'

State rhs(long double x, const State& y) {
    return {y[1], 2 * y[0] * y[0] * y[0] + x * y[0], y[3], y[0] * y[0]};
}

State rk4(long double x, const State& y, long double h) {
    auto axpy = [](const State& a, long double c, const State& b) {
        State r;
        for (int i = 0; i < 4; ++i) r[i] = a[i] + c * b[i];
        return r;
    };
    const State k1 = rhs(x, y);
    const State k2 = rhs(x + h / 2, axpy(y, h / 2, k1));
    const State k3 = rhs(x + h / 2, axpy(y, h / 2, k2));
    const State k4 = rhs(x + h, axpy(y, h, k3));
    State r;
    for (int i = 0; i < 4; ++i) r[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return r;
}

enum class Shot { TooSmall, TooLarge, Undecided };

State seed_state(double x0, long double k) {
    const AiryPair a = airy_pair(x0);
    const AiryTail t = airy_tail(x0, static_cast<double>(k));
    return {-k * a.ai, -k * a.aip, t.tail, t.dtail};
}

// Integrates from x0 down to x_probe; records the states when `out` is given.
Shot shoot(const PainleveOptions& o, long double k, long steps_to_probe, std::vector<State>* out) {
    State y = seed_state(o.x0, k);
    const long double h = o.step;
    if (out) out->push_back(y);
    for (long i = 0; i < steps_to_probe; ++i) {
        const long double x = o.x0 - h * i;
        y = rk4(x, y, -h);
        if (out) out->push_back(y);
        const long double xn = x - h;
        // Hastings-McLeod stays negative and close to -sqrt(-x/2) on the left.
        if (y[0] > 0) return Shot::TooSmall;
        if (-y[0] > 1.5L * std::sqrt(std::max(0.0L, -xn / 2)) + 1) return Shot::TooLarge;
    }
    return Shot::Undecided;
}

} // namespace

PainleveSolution painleve2_hastings_mcleod(const PainleveOptions& options) {
    if (options.x0 < 8 || options.x0 > 30) throw std::invalid_argument("painleve2: x0 must be in [8, 30]");
    if (options.x_end < -12 || options.x_end >= options.x0) throw std::invalid_argument("painleve2: x_end must be in [-12, x0)");
    if (!(options.step > 0)) throw std::invalid_argument("painleve2: step must be positive");
    const double span = (options.x0 - options.x_end) / options.step;
    const long steps = std::lround(span);
    if (std::fabs(span - steps) > 1e-9 * span) throw std::invalid_argument("painleve2: step must divide x0 - x_end");
    // Probe further left so that the unstable mode shows itself.
    const long probe = steps + std::lround(4.0 / options.step);

    long double lo = 1 - 1e-3L, hi = 1 + 1e-3L;
    if (shoot(options, lo, probe, nullptr) != Shot::TooSmall || shoot(options, hi, probe, nullptr) != Shot::TooLarge)
        throw std::runtime_error("painleve2: shooting bracket does not straddle the Hastings-McLeod amplitude");
    long double k = 1;
    for (int it = 0; it < options.shooting_iterations; ++it) {
        const long double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        const Shot s = shoot(options, mid, probe, nullptr);
        if (s == Shot::TooSmall)
            lo = mid;
        else if (s == Shot::TooLarge)
            hi = mid;
        else {
            lo = hi = mid;
            break;
        }
    }
    k = (lo + hi) / 2;

    std::vector<State> states;
    const Shot final_shot = shoot(options, k, steps, &states);
    if (final_shot != Shot::Undecided || static_cast<long>(states.size()) != steps + 1)
        throw std::runtime_error("painleve2: solution left the Hastings-McLeod branch before x_end");

    PainleveSolution sol;
    sol.options = options;
    sol.amplitude = static_cast<double>(k);
    for (RealGrid* g : {&sol.u, &sol.du, &sol.tail, &sol.dtail}) {
        g->t_min = options.x_end;
        g->step = options.step;
        g->values.resize(states.size());
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        const State& y = states[states.size() - 1 - i];
        sol.u.values[i] = static_cast<double>(y[0]);
        sol.du.values[i] = static_cast<double>(y[1]);
        sol.tail.values[i] = static_cast<double>(y[2]);
        sol.dtail.values[i] = static_cast<double>(y[3]);
    }
    return sol;
}

double painleve_residual(const PainleveSolution& sol) {
    const auto& u = sol.u.values;
    const double h = sol.u.step;
    double worst = 0;
    for (std::size_t i = 3; i + 3 < u.size(); ++i) {
        double d2 = 0;
        for (int j = -3; j <= 3; ++j) d2 += kSecondDiff[j + 3] * u[i + j];
        d2 /= h * h;
        const double x = sol.u.t_at(i);
        worst = std::max(worst, std::fabs(d2 - 2 * u[i] * u[i] * u[i] - x * u[i]));
    }
    return worst;
}

namespace {

// Cubic Hermite interpolation of a tabulated function with known derivative.
double hermite(const RealGrid& f, const RealGrid& df, double t) {
    const double pos = (t - f.t_min) / f.step;
    auto i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= f.size()) i = f.size() - 2;
    const double s = pos - static_cast<double>(i), h = f.step;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * f.values[i] + h10 * h * df.values[i] + h01 * f.values[i + 1] + h11 * h * df.values[i + 1];
}

struct TailAt {
    double tail, dtail;
};

TailAt tail_at(const PainleveSolution& sol, double t) {
    if (t >= sol.options.x0) {
        const AiryTail a = airy_tail(std::min(t, 40.0), sol.amplitude);
        return {a.tail, a.dtail};
    }
    // I'' = u^2 supplies the derivative data for I'.
    const double pos = (t - sol.u.t_min) / sol.u.step;
    auto i = static_cast<std::size_t>(std::max(0.0, std::floor(pos)));
    if (i + 1 >= sol.u.size()) i = sol.u.size() - 2;
    const double s = pos - static_cast<double>(i), h = sol.u.step;
    const double a0 = sol.u.values[i] * sol.u.values[i], a1 = sol.u.values[i + 1] * sol.u.values[i + 1];
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    const double dtail = h00 * sol.dtail.values[i] + h10 * h * a0 + h01 * sol.dtail.values[i + 1] + h11 * h * a1;
    return {hermite(sol.tail, sol.dtail, t), dtail};
}

} // namespace

double tw_cdf_at(const PainleveSolution& sol, double t) {
    if (t < sol.options.x_end) return 0.0;
    return std::exp(-tail_at(sol, t).tail);
}

double tw_density_at(const PainleveSolution& sol, double t) {
    if (t < sol.options.x_end) return 0.0;
    const TailAt a = tail_at(sol, t);
    return -a.dtail * std::exp(-a.tail);
}

RealGrid tw_cdf(const PainleveSolution& sol, double t_min, double t_max, double step) {
    if (!(step > 0) || t_max < t_min) throw std::invalid_argument("tw_cdf: bad grid");
    RealGrid g{t_min, step, {}};
    const long n = std::lround((t_max - t_min) / step);
    for (long i = 0; i <= n; ++i) g.values.push_back(tw_cdf_at(sol, t_min + step * static_cast<double>(i)));
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g.values[i] < g.values[i - 1] - 1e-15)
            throw std::runtime_error("tw_cdf: F decreases near t=" + std::to_string(g.t_at(i)));
    return g;
}

TwMoments tw_moments(const PainleveSolution& sol) {
    const RealGrid& dt = sol.dtail;
    const std::size_t n = dt.size();
    auto density = [&](std::size_t i) { return -dt.values[i] * std::exp(-sol.tail.values[i]); };
    // Simpson over an even number of intervals, trapezoid for a leftover one.
    const std::size_t simpson_end = (n - 1) % 2 == 0 ? n - 1 : n - 2;
    TwMoments m;
    double m1 = 0, m2 = 0;
    const double h = dt.step;
    for (std::size_t i = 0; i < simpson_end; i += 2) {
        const double t0 = dt.t_at(i), t1 = dt.t_at(i + 1), t2 = dt.t_at(i + 2);
        const double f0 = density(i), f1 = density(i + 1), f2 = density(i + 2);
        m.mass += h / 3 * (f0 + 4 * f1 + f2);
        m1 += h / 3 * (t0 * f0 + 4 * t1 * f1 + t2 * f2);
        m2 += h / 3 * (t0 * t0 * f0 + 4 * t1 * t1 * f1 + t2 * t2 * f2);
    }
    if (simpson_end != n - 1) {
        const double t0 = dt.t_at(n - 2), t1 = dt.t_at(n - 1);
        m.mass += h / 2 * (density(n - 2) + density(n - 1));
        m1 += h / 2 * (t0 * density(n - 2) + t1 * density(n - 1));
        m2 += h / 2 * (t0 * t0 * density(n - 2) + t1 * t1 * density(n - 1));
    }
    m.mean = m1 / m.mass;
    m.variance = m2 / m.mass - m.mean * m.mean;
    return m;
}

double tw_quantile(const PainleveSolution& sol, double q) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("tw_quantile: q must be in (0, 1)");
    double lo = sol.options.x_end, hi = sol.options.x0 + 8;
    for (int it = 0; it < 100; ++it) {
        const double mid = (lo + hi) / 2;
        (tw_cdf_at(sol, mid) < q ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n) {
    using cd = std::complex<double>;
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("hermitian_eigenvalues: bad matrix size");
    auto at = [&](int i, int j) -> cd& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::vector<cd> v(n), p(n), q(n);
    for (int k = 0; k + 2 < n; ++k) {
        double norm2 = 0;
        for (int i = k + 1; i < n; ++i) norm2 += std::norm(at(i, k));
        if (norm2 == 0) continue;
        const cd x0 = at(k + 1, k);
        const cd phase = std::abs(x0) == 0 ? cd(1) : x0 / std::abs(x0);
        const cd alpha = -phase * std::sqrt(norm2);
        std::fill(v.begin(), v.end(), cd(0));
        v[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i] = at(i, k);
        double vnorm2 = 0;
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        const double tau = 2 / vnorm2;
        // A <- H A H with H = I - tau v v^*, as A - v q^* - q v^*.
        double vp = 0;
        for (int i = k; i < n; ++i) {
            cd s = 0;
            for (int j = k + 1; j < n; ++j) s += at(i, j) * v[j];
            p[i] = tau * s;
            vp += (std::conj(v[i]) * p[i]).real();
        }
        const double kk = tau / 2 * vp;
        for (int i = k; i < n; ++i) q[i] = p[i] - kk * v[i];
        for (int i = k; i < n; ++i)
            for (int j = k; j <= i; ++j) {
                at(i, j) -= v[i] * std::conj(q[j]) + q[i] * std::conj(v[j]);
                at(j, i) = std::conj(at(i, j));
            }
    }

    // Diagonal phases make the tridiagonal form real with |off-diagonals|.
    std::vector<double> d(n), e(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = at(i, i).real();
    for (int i = 0; i + 1 < n; ++i) e[i] = std::abs(at(i + 1, i));

    // Implicit QL with Wilkinson shifts; e[i] couples d[i] and d[i+1].
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw std::runtime_error("hermitian_eigenvalues: QL iteration did not converge");
            double g = (d[l + 1] - d[l]) / (2 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1, c = 1, pp = 0;
            int i;
            bool underflow = false;
            for (i = m - 1; i >= l; --i) {
                double f = s * e[i], b = c * e[i];
                e[i + 1] = r = std::hypot(f, g);
                if (r == 0) {
                    d[i + 1] -= pp;
                    e[m] = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - pp;
                r = (d[i] - g) * s + 2 * c * b;
                pp = s * r;
                d[i + 1] = g + pp;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= pp;
            e[l] = g;
            e[m] = 0;
        } while (m != l);
    }
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<std::complex<double>> gue_matrix(int n, std::uint64_t seed, std::uint64_t index) {
    if (n < 1 || n > 500) throw std::invalid_argument("gue_matrix: n must be in [1, 500]");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6775u};
    std::mt19937_64 rng(seq);
    // exp(-tr M^2) = prod exp(-M_ii^2) prod_{i<j} exp(-2|M_ij|^2).
    std::normal_distribution<double> diag(0.0, std::sqrt(0.5)), off(0.0, 0.5);
    std::vector<std::complex<double>> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i) * n + i] = diag(rng);
        for (int j = i + 1; j < n; ++j) {
            const double re = off(rng), im = off(rng);
            m[static_cast<std::size_t>(i) * n + j] = {re, im};
            m[static_cast<std::size_t>(j) * n + i] = {re, -im};
        }
    }
    return m;
}

std::vector<double> gue_sample(int n, std::uint64_t seed, std::uint64_t index) {
    return hermitian_eigenvalues(gue_matrix(n, seed, index), n);
}

std::vector<double> gue_scaled_eigenvalue(int n, long samples, std::uint64_t seed, int k, int threads) {
    if (samples < 1) throw std::invalid_argument("gue_scaled_eigenvalue: samples must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("gue_scaled_eigenvalue: k must be in [1, n]");
    std::vector<double> out(static_cast<std::size_t>(samples));
    const double center = std::sqrt(2.0 * n), scale = std::sqrt(2.0) * std::pow(static_cast<double>(n), 1.0 / 6.0);
    parallel_for(out.size(), threads, [&](std::size_t i) {
        const auto ev = gue_sample(n, seed, i);
        out[i] = (ev[k - 1] - center) * scale;
    });
    return out;
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

Histogram histogram(const std::vector<double>& sample, double lo, double hi, int bins) {
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram: bad range");
    Histogram h{lo, (hi - lo) / bins, std::vector<long>(bins, 0)};
    for (double x : sample) {
        const auto b = static_cast<long>(std::floor((x - lo) / h.width));
        if (b >= 0 && b < bins) ++h.counts[b];
    }
    return h;
}

} // namespace algcomb
