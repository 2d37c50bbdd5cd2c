#include <doctest.h>

#include <random>

#include "algcomb/symfunc.hpp"

using namespace algcomb;

namespace {

mpq_class q(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

Monomial mono(std::initializer_list<int> e) {
    Monomial m;
    int i = 0;
    for (int v : e) m.exp[i++] = static_cast<std::uint8_t>(v);
    return m;
}

MultiPoly random_poly(std::mt19937_64& rng, int n_vars, int terms, int max_exp) {
    MultiPoly p(n_vars);
    std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5), d(1, 3);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int i = 0; i < n_vars; ++i) m.exp[i] = static_cast<std::uint8_t>(e(rng));
        p.add_term(m, q(c(rng), d(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("elementary symmetric polynomials") {
    MultiPoly e1 = elementary_symmetric(1, 2);
    CHECK(e1 == MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1));
    MultiPoly e2 = elementary_symmetric(2, 3);
    MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1), x3 = MultiPoly::variable(3, 2);
    CHECK(e2 == x1 * x2 + x1 * x3 + x2 * x3);
    CHECK(elementary_symmetric(0, 4) == MultiPoly::constant(4, 1));
    CHECK(elementary_symmetric(5, 3).is_zero());
}

TEST_CASE("schur polynomial examples") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK(schur_poly({2}, 2) == x * x + x * y + y * y);
    CHECK(schur_poly({1}, 3) == elementary_symmetric(1, 3));
    CHECK(schur_poly({1, 1}, 2) == elementary_symmetric(2, 2));
    CHECK(schur_poly({1, 1, 1}, 2).is_zero());
    CHECK_THROWS_AS(schur_poly({13}, 2), std::domain_error);
    CHECK_NOTHROW(schur_poly({13}, 2, 13));
}

TEST_CASE("content sum agrees with the bialternant at rational points") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 6; ++d) {
            for (const auto& lambda : enumerate_partitions(d, n)) {
                const MultiPoly s = schur_poly(lambda, n);
                std::vector<mpq_class> pt;
                for (int i = 0; i < n; ++i) pt.push_back(q(2 * i + 1, i + 2));
                pt[0] += q(static_cast<long>(rng() % 7), 3);
                CHECK(s.evaluate(pt) == schur_bialternant_eval(lambda, pt));
            }
        }
    }
}

TEST_CASE("stability: setting the last variable to zero") {
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const auto& lambda : enumerate_partitions(d))
                CHECK(schur_poly(lambda, n + 1).drop_last_variable_at_zero() == schur_poly(lambda, n));
}

TEST_CASE("kostka numbers") {
    CHECK(kostka({3, 1}, {3, 1}) == 1);
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({1, 1}, {2}) == 0);
    CHECK(kostka({2, 1}, {2}) == 0);
    for (int d = 1; d <= 6; ++d) {
        const auto parts = enumerate_partitions(d);
        for (const auto& lambda : parts) {
            const MultiPoly s = schur_poly(lambda, d);
            CHECK(kostka(lambda, lambda) == 1);
            for (const auto& mu : parts) {
                Monomial m;
                for (int i = 0; i < mu.length(); ++i) m.exp[i] = static_cast<std::uint8_t>(mu[i]);
                CHECK(s.coefficient(m) == mpq_class(kostka(lambda, mu)));
            }
        }
    }
}

TEST_CASE("littlewood-richardson examples") {
    CHECK(lr_coefficient({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({1}, {1}, {3}) == 0);
    // s_2 * s_11 = s_31 + s_211 (Pieri), so (2,2) does not occur.
    CHECK(lr_coefficient({2}, {1, 1}, {2, 2}) == 0);
    CHECK(lr_coefficient({2}, {1, 1}, {3, 1}) == 1);
    CHECK(lr_coefficient({1, 1}, {1, 1}, {2, 2}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient({3}, {}, {3}) == 1);
    CHECK(lr_coefficient({2}, {1}, {1, 1, 1}) == 0);
}

TEST_CASE("schur_expand examples") {
    CHECK(schur_expand(schur_poly({3, 1}, 4)) == SchurExpansion{{Partition{3, 1}, 1}});
    const MultiPoly e1 = elementary_symmetric(1, 3);
    CHECK(schur_expand(e1 * e1) == SchurExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(schur_product_expansion({2}, {1}) == SchurExpansion{{Partition{3}, 1}, {Partition{2, 1}, 1}});
    MultiPoly nonsym = MultiPoly::variable(2, 0);
    CHECK_THROWS_AS(schur_expand(nonsym), std::invalid_argument);
    // Rational coefficients pass through.
    const MultiPoly half = schur_poly({2, 1}, 3) * mpq_class(1, 2) - schur_poly({3}, 3);
    CHECK(schur_expand(half) == SchurExpansion{{Partition{2, 1}, mpq_class(1, 2)}, {Partition{3}, -1}});
}

TEST_CASE("LR rule matches schur product expansion, |mu|+|nu| <= 6") {
    for (int total = 0; total <= 6; ++total) {
        for (int a = 0; a <= total; ++a) {
            for (const auto& mu : enumerate_partitions(a)) {
                for (const auto& nu : enumerate_partitions(total - a)) {
                    const SchurExpansion exp = schur_product_expansion(mu, nu);
                    for (const auto& lambda : enumerate_partitions(total)) {
                        auto it = exp.find(lambda);
                        const mpq_class fromProduct = it == exp.end() ? mpq_class(0) : it->second;
                        CHECK(fromProduct == mpq_class(lr_coefficient(mu, nu, lambda)));
                        CHECK(lr_coefficient(mu, nu, lambda) == lr_coefficient(nu, mu, lambda));
                    }
                }
            }
        }
    }
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const MultiPoly a = random_poly(rng, n, 6, 3), b = random_poly(rng, n, 5, 2), c = random_poly(rng, n, 4, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + MultiPoly(n) == a);
        const MultiPoly ab = a * b;
        for (const auto& [m, coef] : ab.terms()) CHECK(coef != 0);
    }
}

TEST_CASE("derivative and permutation") {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const MultiPoly p = x * x * y * mpq_class(3) + y;
    CHECK(p.derivative(0) == x * y * mpq_class(6));
    CHECK(p.derivative(1) == x * x * mpq_class(3) + MultiPoly::constant(2, 1));
    const std::vector<int> swap{1, 0};
    CHECK(p.permuted(swap) == y * y * x * mpq_class(3) + x);
    CHECK(p.coefficient(mono({2, 1})) == 3);
}
