#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "algcomb/diagcoinv.hpp"
#include "algcomb/linalg.hpp"

using namespace algcomb;

namespace {

std::vector<Monomial> monomials_of_degree(int n_vars, int d) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == n_vars - 1) {
            m.exp[v] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.exp[v] = static_cast<std::uint8_t>(e);
            rec(v + 1, left - e);
        }
        m.exp[v] = 0;
    };
    rec(0, d);
    return out;
}

// dim (B/I)_d = dim B_d - dim I_d, with I_d spanned by monomial multiples of
// the homogeneous generators.
std::vector<long> macaulay_hilbert(const std::vector<MultiPoly>& gens, int n_vars, int max_degree) {
    std::vector<long> series;
    for (int d = 0; d <= max_degree; ++d) {
        EchelonSpace ideal(n_vars);
        for (const auto& g : gens) {
            const int gd = g.total_degree();
            if (gd > d) continue;
            for (const auto& m : monomials_of_degree(n_vars, d - gd)) ideal.insert(MultiPoly::monomial(n_vars, m) * g);
        }
        series.push_back(static_cast<long>(monomials_of_degree(n_vars, d).size() - ideal.dimension()));
    }
    while (!series.empty() && series.back() == 0) series.pop_back();
    return series;
}

} // namespace

TEST_CASE("generators") {
    const auto g1 = diagonal_invariant_generators(1);
    REQUIRE(g1.size() == 2);
    CHECK(g1[0] == MultiPoly::variable(2, 0));
    CHECK(g1[1] == MultiPoly::variable(2, 1));
    const auto g2 = diagonal_invariant_generators(2);
    REQUIRE(g2.size() == 5);
    const MultiPoly x1 = MultiPoly::variable(4, 0), x2 = MultiPoly::variable(4, 1);
    const MultiPoly y1 = MultiPoly::variable(4, 2), y2 = MultiPoly::variable(4, 3);
    CHECK(g2[0] == x1 + x2);
    CHECK(g2[1] == y1 + y2);
    CHECK(g2[2] == x1 * x1 + x2 * x2);
    CHECK(g2[3] == x1 * y1 + x2 * y2);
    CHECK(g2[4] == y1 * y1 + y2 * y2);
    for (int n = 1; n <= 4; ++n) {
        const auto gens = diagonal_invariant_generators(n);
        CHECK(static_cast<int>(gens.size()) == n * (n + 3) / 2);
        for (const auto& cls : conjugacy_classes(n))
            for (const auto& g : gens) CHECK(g.permuted(diagonal_action(cls.representative, true)) == g);
    }
}

TEST_CASE("groebner basics") {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const GroebnerBasis gx = groebner_basis({2, {x * mpq_class(3)}});
    REQUIRE(gx.polys().size() == 1);
    CHECK(gx.polys()[0] == x);
    CHECK_THROWS_AS(gx.standard_monomials(), std::domain_error);
    const GroebnerBasis gxy = groebner_basis({2, {x, y}});
    CHECK(gxy.standard_monomials().size() == 1);
    CHECK_THROWS_AS(groebner_basis({2, {MultiPoly(2)}}), std::invalid_argument);
    // Classic example: (x^2 - y, xy - 1) has reduced grevlex basis with quotient dimension 3.
    const GroebnerBasis g = groebner_basis({2, {x * x - y, x * y - MultiPoly::constant(2, 1)}});
    CHECK(g.standard_monomials().size() == 3);
    for (const auto& p : g.polys()) CHECK(g.normal_form(p).is_zero());
    GroebnerOptions tiny;
    tiny.pair_budget = 0;
    CHECK_THROWS_AS(groebner_basis({2, {x * x - y, x * y - MultiPoly::constant(2, 1)}}, tiny), ResourceCapError);
    CHECK(groebner_basis({2, {x - MultiPoly::constant(2, 1), x}}).standard_monomials().empty());
}

TEST_CASE("grevlex and deglex orders") {
    Monomial a, b;
    a.exp = {1, 0, 1};  // x1 x3
    b.exp = {0, 2, 0};  // x2^2
    CHECK(order_greater(MonomialOrder::Deglex, a, b));
    CHECK_FALSE(order_greater(MonomialOrder::Grevlex, a, b));
    CHECK(order_greater(MonomialOrder::Grevlex, b, a));
}

TEST_CASE("diagonal coinvariants n = 1, 2") {
    const auto q1 = diagonal_coinvariants(1);
    CHECK(q1.basis.total() == 1);
    const auto q2 = diagonal_coinvariants(2);
    CHECK(q2.basis.dimensions() == std::map<Bidegree, long>{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    std::set<Monomial> expect;
    Monomial one, x2, y2;
    x2.exp[1] = 1;
    y2.exp[3] = 1;
    expect = {one, x2, y2};
    CHECK(std::set<Monomial>(q2.basis.monomials.begin(), q2.basis.monomials.end()) == expect);
    // Any graded order gives the same bigraded dimensions.
    CHECK(diagonal_coinvariants(2, MonomialOrder::Deglex).basis.dimensions() == q2.basis.dimensions());
    CHECK_THROWS_AS(diagonal_coinvariants(5), ResourceCapError);
}

TEST_CASE("diagonal coinvariants n = 3: total, symmetry, Macaulay oracle, Catalan") {
    const auto q3 = diagonal_coinvariants(3);
    CHECK(q3.basis.total() == 16);
    const auto dims = q3.basis.dimensions();
    for (const auto& [bd, d] : dims) CHECK(dims.at({bd.second, bd.first}) == d);
    CHECK(q3.basis.hilbert_series() == macaulay_hilbert(diagonal_invariant_generators(3), 6, 5));
    CHECK(diagonal_coinvariants(3, MonomialOrder::Deglex).basis.dimensions() == dims);
    const auto table = quotient_character(q3);
    CHECK(table.total().back() == 16);
    const auto gamma = antiinvariant_dimensions(table);
    CHECK(gamma.total == 5);
    CHECK(gamma.by_bidegree.count({0, 0}) == 0);
    CHECK(antiinvariant_dimensions(2).total == 2);
    CHECK(antiinvariant_dimensions(1).total == 1);
}

TEST_CASE("normal form properties") {
    const auto q = diagonal_coinvariants(2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly f(4), g(4);
        for (int t = 0; t < 4; ++t) {
            Monomial a, b;
            for (int v = 0; v < 4; ++v) {
                a.exp[v] = static_cast<std::uint8_t>(rng() % 3);
                b.exp[v] = static_cast<std::uint8_t>(rng() % 2);
            }
            f.add_term(a, static_cast<long>(rng() % 7) - 3);
            g.add_term(b, static_cast<long>(rng() % 5) - 2);
        }
        const MultiPoly nf = q.groebner.normal_form(f);
        CHECK(q.groebner.normal_form(nf) == nf);
        CHECK(q.groebner.normal_form(f * g) == q.groebner.normal_form(nf * q.groebner.normal_form(g)));
        for (const auto& [m, c] : nf.terms()) CHECK(q.groebner.is_standard(m));
    }
}

TEST_CASE("single-set degeneration recovers n! and [n]_q!") {
    for (int n = 1; n <= 5; ++n) {
        const auto q = classical_coinvariants(n);
        CHECK(q.basis.total() == factorial(n));
        std::vector<long> expected;
        const QPolynomial qf = q_factorial(n);
        for (const auto& c : qf.coefficients()) expected.push_back(c.get_si());
        CHECK(q.basis.hilbert_series() == expected);
        if (n <= 4) {
            const auto table = quotient_character(q);
            const auto total = table.total();
            for (std::size_t c = 0; c + 1 < total.size(); ++c) CHECK(total[c] == 0);
        }
    }
}

TEST_CASE("parking functions") {
    CHECK(count_parking_functions(0) == 1);
    CHECK(count_parking_functions(1) == 1);
    CHECK(count_parking_functions(2) == 3);
    CHECK(count_parking_functions(3) == 16);
    for (int n = 1; n <= 9; ++n) {
        mpz_class expected = 1;
        for (int k = 0; k < n - 1; ++k) expected *= n + 1;
        CHECK(count_parking_functions(n) == expected);
        if (n <= 6) CHECK(count_parking_functions_brute(n) == expected);
    }
    CHECK_THROWS_AS(count_parking_functions(10), std::invalid_argument);
    CHECK(catalan(3) == 5);
}

namespace {

// dim of the bidegree (i, j) piece of B/I by linear algebra on the ideal's
// bihomogeneous component, independent of any Groebner computation.
long macaulay_bigraded(const std::vector<MultiPoly>& gens, int n, int i, int j) {
    std::vector<Monomial> piece;
    for (const auto& mx : monomials_of_degree(n, i))
        for (const auto& my : monomials_of_degree(n, j)) {
            Monomial m = mx;
            for (int v = 0; v < n; ++v) m.exp[n + v] = my.exp[v];
            piece.push_back(m);
        }
    EchelonSpace ideal(2 * n);
    for (const auto& g : gens) {
        const Bidegree gd = bidegree_of(g.terms().begin()->first, n);
        if (gd.first > i || gd.second > j) continue;
        for (const auto& mx : monomials_of_degree(n, i - gd.first))
            for (const auto& my : monomials_of_degree(n, j - gd.second)) {
                Monomial m = mx;
                for (int v = 0; v < n; ++v) m.exp[n + v] = my.exp[v];
                ideal.insert(MultiPoly::monomial(2 * n, m) * g);
            }
    }
    return static_cast<long>(piece.size() - ideal.dimension());
}

} // namespace

TEST_CASE("diagonal coinvariants n = 4") {
    const auto q4 = diagonal_coinvariants(4);
    CHECK(q4.basis.total() == 125);
    const auto dims = q4.basis.dimensions();
    const auto gens = diagonal_invariant_generators(4);
    for (int i = 0; i <= 7; ++i)
        for (int j = 0; i + j <= 7; ++j) {
            auto it = dims.find({i, j});
            CHECK(macaulay_bigraded(gens, 4, i, j) == (it == dims.end() ? 0 : it->second));
        }
    // 2 f^211 + f^22 + f^31 = 2*3 + 2 + 3 = 11.
    CHECK(dims.at({2, 1}) == 11);
    const auto table = quotient_character(q4);
    const auto mult = irreducible_multiplicities(table);
    CHECK(mult.at({2, 1}) == std::map<Partition, long>{{Partition{2, 1, 1}, 2}, {Partition{2, 2}, 1}, {Partition{3, 1}, 1}});
    CHECK(antiinvariant_dimensions(table).total == 14);
}
