#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "algcomb/lis.hpp"

using namespace algcomb;

namespace {

template <class F>
void all_perms(int n, F&& f) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do f(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
}

} // namespace

TEST_CASE("permutations and is_length") {
    CHECK(is_length(Permutation::from_digits("274163958")) == 4);
    CHECK(is_length(Permutation::identity(7)) == 7);
    CHECK(is_length(Permutation({5, 4, 3, 2, 1})) == 1);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK(Permutation::from_digits("2143").major_index() == 1 + 3);
}

TEST_CASE("rsk") {
    const auto [p, q] = rsk(Permutation::identity(3));
    CHECK(p.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(q.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(greene_shape(Permutation::from_digits("274163958"))[0] == 4);
    std::map<Partition, long> shape_count;
    all_perms(4, [&](const Permutation& w) {
        const auto [pp, qq] = rsk(w);
        CHECK(pp.shape() == qq.shape());
        CHECK(pp.shape()[0] == is_length(w));
        ++shape_count[pp.shape()];
    });
    for (const auto& lambda : enumerate_partitions(4)) {
        const mpz_class f = count_syt(lambda);
        CHECK(shape_count[lambda] == f * f);
    }
}

TEST_CASE("MAJ/RSK bridge") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<mpz_class> dist(n * (n - 1) / 2 + 1, 0);
        all_perms(n, [&](const Permutation& w) {
            const int maj = major_index(rsk(w).second);
            if (n <= 5) CHECK(maj == w.major_index());
            ++dist[maj];
        });
        CHECK(QPolynomial(dist) == q_factorial(n));
    }
}

TEST_CASE("greene's theorem against the brute-force oracle") {
    const Permutation w = Permutation::from_digits("247951368");
    CHECK(greene_shape(w) == Partition{5, 3, 1});
    CHECK(greene_bruteforce(w, 2) == 8);
    CHECK(greene_bruteforce(w, 1) == is_length(w));
    CHECK(greene_bruteforce(w, 9) == 9);
    for (int n = 1; n <= 6; ++n)
        all_perms(n, [&](const Permutation& v) {
            const Partition shape = greene_shape(v);
            int partial = 0;
            for (int k = 1; k <= n; ++k) {
                partial += shape[k - 1];
                CHECK(greene_bruteforce(v, k) == partial);
            }
        });
    CHECK_THROWS_AS(greene_bruteforce(Permutation::identity(11), 1), std::invalid_argument);
}

TEST_CASE("expected is_n") {
    CHECK(expected_is_exact(1) == 1);
    CHECK(expected_is_exact(3) == 2);
    for (int n = 1; n <= 7; ++n) CHECK(expected_is_exact(n) == expected_is_bruteforce(n));
    for (int n = 1; n <= 40; ++n) {
        const double e = expected_is_exact(n).get_d(), r = std::sqrt(static_cast<double>(n));
        CHECK(e >= 0.5 * r);
        CHECK(e <= std::exp(1.0) * r);
    }
}

TEST_CASE("truncated series") {
    TruncSeries a(6);
    a[0] = 1;
    a[1] = -1;
    const TruncSeries inv = a.inverse();
    for (int i = 0; i <= 6; ++i) CHECK(inv[i] == 1);
    const TruncSeries one = a * inv;
    CHECK(one[0] == 1);
    for (int i = 1; i <= 6; ++i) CHECK(one[i] == 0);
    CHECK_THROWS_AS(TruncSeries(3).inverse(), std::domain_error);
    CHECK(bessel_series(1, 5)[3] == mpq_class(1, 2));
}

TEST_CASE("gessel determinant") {
    for (const auto& u : gessel_series(1, 20).counts) CHECK(u == 1);
    const auto u2 = gessel_series(2, 20).counts;
    for (int n = 0; n <= 10; ++n) CHECK(u2[n] == binomial(2 * n, n) / (n + 1));
    for (int n = 0; n <= 7; ++n) {
        CHECK(u2[n] == uk_bruteforce(2, n));
        CHECK(gessel_series(3, 14).counts[n] == uk_bruteforce(3, n));
    }
    const auto u3 = gessel_series(3, 12).counts;
    CHECK(u3 == std::vector<mpz_class>{1, 1, 2, 6, 23, 103, 513});
    // Every permutation counted once k >= n.
    const auto u6 = gessel_series(6, 12).counts;
    const auto u7 = gessel_series(7, 12).counts;
    for (int n = 0; n <= 6; ++n) {
        CHECK(u6[n] == factorial(n));
        CHECK(u7[n] == u6[n]);
    }
    CHECK_THROWS_AS(gessel_series(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(gessel_series(0, 8), std::invalid_argument);
}

TEST_CASE("u3 closed form") {
    const auto u3 = gessel_series(3, 40).counts;
    for (int n = 0; n <= 20; ++n) CHECK(u3_closed_form(n) == mpq_class(u3[n]));
    CHECK(u3_closed_form(4) == 23);
    CHECK(u3_closed_form(6) == 513);
    // The formula as printed misses already at n = 2.
    CHECK(u3_closed_form(2, true) == mpq_class(4, 3));
}

TEST_CASE("chi sampling") {
    const auto a = sample_chi_n(50, 64, 42);
    CHECK(a == sample_chi_n(50, 64, 42));
    CHECK(a == sample_chi_n(50, 64, 42, 3));
    CHECK(a != sample_chi_n(50, 64, 43));
    const auto w = random_permutation(30, 7, 3);
    CHECK_NOTHROW(Permutation(w));
    const auto all = chi_all_permutations(4);
    REQUIRE(all.size() == 24);
    const double mean = std::accumulate(all.begin(), all.end(), 0.0) / 24;
    CHECK(mean == doctest::Approx((expected_is_exact(4).get_d() - 4.0) / std::pow(4.0, 1.0 / 6.0)).epsilon(1e-12));
    CHECK_THROWS_AS(sample_chi_n(5, 0, 1), std::invalid_argument);
}
