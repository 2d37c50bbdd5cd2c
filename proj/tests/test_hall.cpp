#include <doctest.h>

#include "algcomb/hall.hpp"
#include "algcomb/symfunc.hpp"

using namespace algcomb;

TEST_CASE("group arithmetic") {
    const AbelianPGroup g(3, {2, 1});
    CHECK(g.order() == 27);
    for (int a = 0; a < g.order(); ++a) {
        CHECK(g.add(a, 0) == a);
        CHECK(g.scale(a, 9) == 0);
        CHECK(g.add(a, g.scale(a, 8)) == 0);
    }
    CHECK_THROWS_AS(AbelianPGroup(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianPGroup(5, {3, 3}), ResourceCapError);
}

TEST_CASE("subgroup enumeration") {
    CHECK(enumerate_subgroups(AbelianPGroup(2, {1})).size() == 2);
    CHECK(enumerate_subgroups(AbelianPGroup(2, {1, 1})).size() == 5);
    CHECK(enumerate_subgroups(AbelianPGroup(3, {2})).size() == 3);
    // (Z/p)^3 has 2 + 2(p^2+p+1) subgroups.
    CHECK(enumerate_subgroups(AbelianPGroup(3, {1, 1, 1})).size() == 2 + 2 * 13);
    for (const auto& s : enumerate_subgroups(AbelianPGroup(2, {2, 1, 1}))) {
        CHECK(s.type.size() + s.quotient_type.size() == 4);
        CHECK(std::is_sorted(s.elements.begin(), s.elements.end()));
        CHECK(static_cast<long>(s.elements.size()) == (1L << s.type.size()));
    }
}

TEST_CASE("hall counts") {
    for (int p : {2, 3, 5}) {
        CHECK(hall_count({2}, {1}, {1}, p) == 1);
        CHECK(hall_count({1, 1}, {1}, {1}, p) == p + 1);
    }
    CHECK(hall_count({1, 1}, {2}, {}, 2) == 0);
    CHECK(hall_count({2, 1}, {1}, {1, 1}, 3) == hall_count({2, 1}, {1, 1}, {1}, 3));
}

TEST_CASE("hall polynomials by interpolation") {
    const auto g11 = hall_polynomial({1, 1}, {1}, {1}, {2, 3, 5});
    CHECK(g11.polynomial == IntPolynomial(std::vector<mpz_class>{1, 1}));
    CHECK(g11.held_out_prime == 5);
    CHECK(hall_polynomial({2}, {1}, {1}, {2, 3}).polynomial == IntPolynomial(std::vector<mpz_class>{1}));
    const auto g21 = hall_polynomial({2, 1}, {1, 1}, {1}, {2, 3, 5, 7});
    CHECK(g21.polynomial.degree() <= 1);
    CHECK(g21.polynomial.evaluate(7) == hall_count({2, 1}, {1, 1}, {1}, 7));
    CHECK_THROWS_AS(hall_polynomial({1, 1}, {1}, {1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(hall_polynomial({1, 1}, {1}, {1}, {2, 3}), std::runtime_error);
}

TEST_CASE("maley positivity") {
    CHECK(maley_positivity(IntPolynomial(std::vector<mpz_class>{1, 1})));
    CHECK(shift_by_one(IntPolynomial(std::vector<mpz_class>{1, 1})) == IntPolynomial(std::vector<mpz_class>{2, 1}));
    CHECK(maley_positivity(IntPolynomial(std::vector<mpz_class>{1})));
    CHECK_FALSE(maley_positivity(IntPolynomial(std::vector<mpz_class>{-2, 1})));
}

TEST_CASE("nonvanishing matches LR, |lambda| <= 4, p = 2") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            const auto counts = subgroup_type_counts(lambda, 2);
            long total = 0;
            for (const auto& [key, c] : counts) total += c;
            CHECK(total == static_cast<long>(enumerate_subgroups(AbelianPGroup(2, lambda)).size()));
            for (int a = 0; a <= d; ++a)
                for (const auto& mu : enumerate_partitions(a))
                    for (const auto& nu : enumerate_partitions(d - a)) {
                        auto it = counts.find({mu, nu});
                        const long g = it == counts.end() ? 0 : it->second;
                        CHECK((g != 0) == (lr_coefficient(mu, nu, lambda) != 0));
                    }
        }
}

TEST_CASE("hall algebra evaluator matches brute force, |lambda| <= 4, p = 2, 3") {
    for (int p : {2, 3})
        for (int d = 1; d <= 4; ++d)
            for (const auto& lambda : enumerate_partitions(d)) {
                const auto counts = subgroup_type_counts(lambda, p);
                for (int a = 0; a <= d; ++a)
                    for (const auto& mu : enumerate_partitions(a))
                        for (const auto& nu : enumerate_partitions(d - a)) {
                            auto it = counts.find({mu, nu});
                            const long g = it == counts.end() ? 0 : it->second;
                            CHECK(hall_algebra_value(lambda, mu, nu, p) == g);
                        }
            }
}

TEST_CASE("hall polynomials from the algebra") {
    CHECK(hall_polynomial_algebraic({1, 1}, {1}, {1}).polynomial == IntPolynomial(std::vector<mpz_class>{1, 1}));
    CHECK(hall_polynomial_algebraic({2}, {1}, {1}).polynomial == IntPolynomial(std::vector<mpz_class>{1}));
    // Subgroups of index p in (Z/p)^3 number p^2+p+1.
    CHECK(hall_polynomial_algebraic({1, 1, 1}, {1, 1}, {1}).polynomial ==
          IntPolynomial(std::vector<mpz_class>{1, 1, 1}));
    CHECK(hall_algebra_value({2, 1}, {1}, {1, 1}, 4) == hall_algebra_value({2, 1}, {1, 1}, {1}, 4));
    CHECK_THROWS_AS(hall_algebra_value({1}, {1}, {}, 1), std::invalid_argument);
}
