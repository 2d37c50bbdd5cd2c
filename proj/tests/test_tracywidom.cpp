#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>

#include "algcomb/tracywidom.hpp"

using namespace algcomb;

namespace {

const PainleveSolution& hm() {
    static const PainleveSolution sol = painleve2_hastings_mcleod();
    return sol;
}

} // namespace

TEST_CASE("airy against boost") {
    CHECK(airy(0) == doctest::Approx(0.355028053887817239).epsilon(1e-15));
    CHECK(airy_pair(0).aip == doctest::Approx(-0.258819403792806798).epsilon(1e-15));
    for (double x = -30; x <= 30; x += 0.173) {
        const AiryPair a = airy_pair(x);
        const double ai = boost::math::airy_ai(x), aip = boost::math::airy_ai_prime(x);
        const double scale_ai = x > 0 ? std::fabs(ai) : std::pow(std::fabs(x), -0.25);
        const double scale_aip = x > 0 ? std::fabs(aip) : std::pow(std::fabs(x), 0.25);
        CHECK(std::fabs(a.ai - ai) <= 1e-12 * scale_ai);
        CHECK(std::fabs(a.aip - aip) <= 1e-12 * scale_aip);
    }
    // Both sides of the switch agree.
    for (double x : {-kAirySwitch, kAirySwitch}) {
        const AiryPair below = airy_pair(std::nextafter(x, 0.0)), above = airy_pair(std::nextafter(x, 2 * x));
        CHECK(below.ai == doctest::Approx(above.ai).epsilon(1e-12));
        CHECK(below.aip == doctest::Approx(above.aip).epsilon(1e-12));
    }
    const double z = 10, zeta = 2.0 / 3.0 * z * std::sqrt(z);
    CHECK(airy(z) * 2 * std::sqrt(M_PI) * std::pow(z, 0.25) * std::exp(zeta) == doctest::Approx(1).epsilon(0.01));
    CHECK(airy_residual(-10, 10, 1.0 / 64) <= 1e-8);
    CHECK_THROWS_AS(airy(41), std::domain_error);
}

TEST_CASE("hastings-mcleod") {
    const PainleveSolution& sol = hm();
    CHECK(sol.amplitude == doctest::Approx(1).epsilon(1e-10));
    const double h = sol.u.step;
    auto u_at = [&](double x) { return sol.u.values[static_cast<std::size_t>(std::lround((x - sol.u.t_min) / h))]; };
    CHECK(u_at(6) == doctest::Approx(-airy(6)).epsilon(1e-7));
    CHECK(u_at(0) == doctest::Approx(-0.36706155154807).epsilon(1e-7));
    CHECK(u_at(-8) == doctest::Approx(-std::sqrt(4.0) * (1 + 1 / (8.0 * 8 * 8 * 8))).epsilon(1e-3));
    CHECK(painleve_residual(sol) <= 1e-8);
    for (double v : sol.u.values) CHECK(v < 0);

    PainleveOptions half;
    half.step /= 2;
    const PainleveSolution fine = painleve2_hastings_mcleod(half);
    for (double x = -6; x <= 6; x += 0.5)
        CHECK(fine.u.values[static_cast<std::size_t>(std::lround((x - fine.u.t_min) / fine.u.step))] ==
              doctest::Approx(u_at(x)).epsilon(1e-9));

    PainleveOptions bad;
    bad.step = 0.37;
    CHECK_THROWS_AS(painleve2_hastings_mcleod(bad), std::invalid_argument);
}

TEST_CASE("tracy-widom distribution") {
    const PainleveSolution& sol = hm();
    CHECK(tw_cdf_at(sol, 5) >= 1 - 1e-6);
    CHECK(tw_cdf_at(sol, -5) <= 1e-3);
    CHECK(tw_cdf_at(sol, 20) == doctest::Approx(1));
    const RealGrid f = tw_cdf(sol, -8, 8, 1.0 / 64);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f.values[i] >= f.values[i - 1] - 1e-15);
    const TwMoments m = tw_moments(sol);
    CHECK(m.mass == doctest::Approx(1).epsilon(1e-9));
    CHECK(std::fabs(m.mean - -1.7710868074) <= 1e-6);
    CHECK(std::fabs(m.variance - 0.8131947928) <= 1e-6);
    // Density is the derivative of F.
    for (double t = -4; t <= 3; t += 0.37) {
        const double d = (tw_cdf_at(sol, t + 1e-4) - tw_cdf_at(sol, t - 1e-4)) / 2e-4;
        CHECK(tw_density_at(sol, t) == doctest::Approx(d).epsilon(1e-6));
    }
    const double median = tw_quantile(sol, 0.5);
    CHECK(tw_cdf_at(sol, median) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues against eigen") {
    for (int n : {1, 2, 3, 7, 30}) {
        const auto a = gue_matrix(n, 11, static_cast<std::uint64_t>(n));
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i) * n + j];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        const auto ours = hermitian_eigenvalues(a, n);
        double trace = 0;
        for (int i = 0; i < n; ++i) trace += a[static_cast<std::size_t>(i) * n + i].real();
        CHECK(std::accumulate(ours.begin(), ours.end(), 0.0) == doctest::Approx(trace).epsilon(1e-10));
        for (int i = 0; i < n; ++i) CHECK(ours[i] == doctest::Approx(es.eigenvalues()(n - 1 - i)).epsilon(1e-10));
    }
    // Already diagonal and block-structured inputs.
    std::vector<std::complex<double>> d(9, 0.0);
    d[0] = 3;
    d[4] = -1;
    d[8] = 2;
    CHECK(hermitian_eigenvalues(d, 3) == std::vector<double>{3, 2, -1});
    CHECK_THROWS_AS(hermitian_eigenvalues(d, 2), std::invalid_argument);
}

TEST_CASE("gue sampling") {
    double s2 = 0;
    const int count = 20000;
    for (int i = 0; i < count; ++i) {
        const double x = gue_sample(1, 5, static_cast<std::uint64_t>(i))[0];
        s2 += x * x;
    }
    CHECK(s2 / count == doctest::Approx(0.5).epsilon(0.02));
    const auto a = gue_scaled_eigenvalue(20, 40, 9);
    CHECK(a == gue_scaled_eigenvalue(20, 40, 9, 1, 3));
    CHECK(a != gue_scaled_eigenvalue(20, 40, 10));
    CHECK_THROWS_AS(gue_scaled_eigenvalue(5, 4, 1, 6), std::invalid_argument);
}

TEST_CASE("ks distance and histogram") {
    const PainleveSolution& sol = hm();
    // Quantile sampling from F itself is close to F.
    std::vector<double> sample;
    for (int i = 0; i < 2000; ++i) sample.push_back(tw_quantile(sol, (i + 0.5) / 2000));
    auto cdf = [&](double t) { return tw_cdf_at(sol, t); };
    CHECK(ks_distance(sample, cdf) <= 0.02);
    CHECK(ks_distance({0.0}, [](double) { return 0.5; }) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ks_distance({}, cdf), std::invalid_argument);
    const Histogram h = histogram({-1, 0.1, 0.2, 5, 0.9}, 0, 1, 2);
    CHECK(h.counts == std::vector<long>{2, 1});
}
