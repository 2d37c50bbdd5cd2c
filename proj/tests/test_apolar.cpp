#include <doctest.h>

#include "algcomb/apolar.hpp"

using namespace algcomb;

TEST_CASE("derivative span examples") {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    // Both first partials of (x+y)^2 equal 2(x+y), so the span is
    // {(x+y)^2, x+y, 1}. A four-dimensional span needs e.g. xy.
    const GradedSpan s = derivative_span(pow(x + y, 2));
    CHECK(s.dimension() == 3);
    CHECK(s.hilbert_series() == std::vector<long>{1, 1, 1});
    CHECK(s.closed_under_derivatives());
    const GradedSpan sxy = derivative_span(x * y);
    CHECK(sxy.dimension() == 4);
    CHECK(sxy.hilbert_series() == std::vector<long>{1, 2, 1});
    CHECK(derivative_span(MultiPoly::constant(3, 1)).dimension() == 1);
    CHECK(derivative_span(vandermonde(2)).dimension() == 2);
    CHECK_THROWS_AS(derivative_span(MultiPoly(2)), std::invalid_argument);
    CHECK_THROWS_AS(derivative_span(x + x * x), std::invalid_argument);
}

TEST_CASE("vandermonde") {
    CHECK(vandermonde(1) == MultiPoly::constant(1, 1));
    CHECK(vandermonde(2) == MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1));
    const MultiPoly v3 = vandermonde(3);
    CHECK(v3.term_count() == 6);
    const std::vector<int> swap{1, 0, 2};
    CHECK(v3.permuted(swap) == -v3);
}

TEST_CASE("garsia-haiman determinants") {
    // Single column gives V_n(x); single row gives V_n(y).
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> column(n, 1);
        const MultiPoly dcol = gh_determinant(Partition(column));
        const MultiPoly drow = gh_determinant(Partition{n});
        const MultiPoly vx = vandermonde(n).widened(2 * n);
        const MultiPoly vn = vandermonde(n);
        MultiPoly vy(2 * n);
        for (const auto& [m, c] : vn.terms()) {
            Monomial shifted;
            for (int i = 0; i < n; ++i) shifted.exp[n + i] = m.exp[i];
            vy.add_term(shifted, c);
        }
        // Column order i_s = 0..n-1 is the reverse of the Vandermonde exponent
        // order, which only changes the sign by (-1)^{n(n-1)/2}.
        const int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
        CHECK(dcol == vx * mpq_class(sign));
        CHECK(drow == vy * mpq_class(sign));
    }
    // D_32: rows (1, y, y^2, x, xy) as displayed.
    const MultiPoly d32 = gh_determinant({3, 2});
    CHECK(d32.term_count() == 120);
    Monomial diag;  // product of the diagonal x_1^0 y_1^0 * y_2 * y_3^2 * x_4 * x_5 y_5
    diag.exp[5 + 1] = 1;
    diag.exp[5 + 2] = 2;
    diag.exp[3] = 1;
    diag.exp[4] = 1;
    diag.exp[5 + 4] = 1;
    CHECK(d32.coefficient(diag) == 1);
    CHECK_THROWS_AS(gh_determinant({{0, 0}, {0, 0}}, 2), std::invalid_argument);
    // Antisymmetry under the diagonal action.
    for (int i = 0; i + 1 < 5; ++i) {
        std::vector<int> w{0, 1, 2, 3, 4};
        std::swap(w[i], w[i + 1]);
        CHECK(d32.permuted(diagonal_action(w, true)) == -d32);
    }
}

TEST_CASE("conjugacy classes") {
    const auto classes = conjugacy_classes(4);
    REQUIRE(classes.size() == 5);
    mpz_class total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == 24);
    CHECK(classes[0].cycle_type == Partition{4});
    CHECK(classes[0].size == 6);
    CHECK(classes[0].sign == -1);
    CHECK(classes[4].representative == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("murnaghan-nakayama characters") {
    CHECK(mn_character({3}, {2, 1}) == 1);
    CHECK(mn_character({1, 1}, {2}) == -1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK_THROWS(mn_character({2}, {1}));
    // Column orthogonality and dimension check for n <= 6.
    for (int n = 1; n <= 6; ++n) {
        const auto classes = conjugacy_classes(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            CHECK(mn_character(lambda, Partition(std::vector<int>(n, 1))) == count_syt(lambda));
            for (const auto& mu : enumerate_partitions(n)) {
                mpz_class inner = 0;
                for (const auto& c : classes)
                    inner += c.size * mn_character(lambda, c.cycle_type) * mn_character(mu, c.cycle_type);
                CHECK(inner == (lambda == mu ? factorial(n) : mpz_class(0)));
            }
        }
    }
}

TEST_CASE("graded character of small spans") {
    const CharacterTable t2 = graded_character(derivative_span(vandermonde(2)), 2);
    // classes of S_2: (2), (1,1)
    CHECK(t2.traces.at({0, 0}) == std::vector<mpz_class>{1, 1});
    CHECK(t2.traces.at({1, 0}) == std::vector<mpz_class>{-1, 1});
    const CharacterTable t3 = graded_character(derivative_span(vandermonde(3)), 3);
    CHECK(t3.total() == std::vector<mpz_class>{0, 0, 6});
    const MultiPoly x0 = MultiPoly::variable(2, 0);
    CHECK_THROWS_AS(graded_character(derivative_span(x0 * x0), 2), std::invalid_argument);
}

TEST_CASE("coinvariant harmonics: MAJ theorem and regular representation, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const GradedSpan span = derivative_span(vandermonde(n));
        CHECK(span.dimension() == factorial(n));
        std::vector<long> expected;
        const QPolynomial qf = q_factorial(n);
        for (const auto& c : qf.coefficients()) expected.push_back(c.get_si());
        CHECK(span.hilbert_series() == expected);
        const CharacterTable table = graded_character(span, n);
        const auto mult = irreducible_multiplicities(table);
        for (const auto& lambda : enumerate_partitions(n)) {
            long sum = 0;
            for (int i = 0; i <= n * (n - 1) / 2; ++i) {
                auto it = mult.find({i, 0});
                long m = 0;
                if (it != mult.end() && it->second.count(lambda)) m = it->second.at(lambda);
                CHECK(m == maj_multiplicity(lambda, i));
                sum += m;
            }
            CHECK(sum == count_syt(lambda));
        }
        if (n >= 2) CHECK(mult.at({0, 0}) == std::map<Partition, long>{{Partition{n}, 1}});
    }
}

TEST_CASE("n! theorem for n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            const GradedSpan span = derivative_span(gh_determinant(mu), n);
            CHECK(span.dimension() == factorial(n));
            CHECK(span.closed_under_derivatives());
            CHECK(graded_character(span, n).total().back() == factorial(n));
        }
}
