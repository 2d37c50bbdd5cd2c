#include <doctest.h>

#include <functional>

#include "algcomb/horn.hpp"
#include "algcomb/symfunc.hpp"

using namespace algcomb;

namespace {

SpectrumTriple triple(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    SpectrumTriple t;
    for (int v : a) t.alpha.emplace_back(v);
    for (int v : b) t.beta.emplace_back(v);
    for (int v : c) t.gamma.emplace_back(v);
    return t;
}

// Weakly decreasing nonnegative vectors of length n with entries <= max.
std::vector<Partition> boxed(int n, int max) {
    std::vector<Partition> out;
    std::vector<int> cur(n);
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, max);
    return out;
}

} // namespace

TEST_CASE("horn systems") {
    const HornSystem two = horn_system(2);
    REQUIRE(two.inequalities.size() == 3);
    CHECK(two.inequalities[0].to_string() == "g1 <= a1+b1");
    CHECK(two.inequalities[1].to_string() == "g2 <= a2+b1");
    CHECK(two.inequalities[2].to_string() == "g2 <= a1+b2");
    CHECK(two.trace_equality);
    const HornSystem three = horn_system(3);
    CHECK(three.inequalities.size() == 12);
    for (const auto& ineq : three.inequalities) {
        CHECK(ineq.I.size() == ineq.J.size());
        CHECK(ineq.J.size() == ineq.K.size());
    }
    CHECK_THROWS_AS(horn_system(4), std::domain_error);
}

TEST_CASE("horn feasibility examples") {
    CHECK(horn_feasible(triple({1, 0}, {1, 0}, {1, 1})));
    CHECK_FALSE(horn_feasible(triple({2, 0}, {0, 0}, {1, 1})));
    CHECK(horn_feasible(triple({0, 0}, {0, 0}, {0, 0})));
    CHECK(horn_feasible(triple({0, 0, 0}, {0, 0, 0}, {0, 0, 0})));
    CHECK_FALSE(horn_feasible(triple({1, 0}, {1, 0}, {1, 0})));  // trace
    CHECK_THROWS_AS(horn_feasible(triple({0, 1}, {0, 0}, {0, 1})), std::invalid_argument);
    // Rational spectra.
    SpectrumTriple r;
    r.alpha = {mpq_class(1, 2), mpq_class(-1, 2)};
    r.beta = {mpq_class(1, 3), mpq_class(0)};
    r.gamma = {mpq_class(2, 3), mpq_class(-1, 3)};
    CHECK(horn_feasible(r));
}

TEST_CASE("hermitian feasibility via LR nonvanishing") {
    CHECK(hermitian_feasible_integer({1}, {1}, {2}));
    CHECK_FALSE(hermitian_feasible_integer({2}, {}, {1, 1}));
    CHECK(hermitian_feasible_integer({3, 1}, {}, {3, 1}));
}

TEST_CASE("horn and LR agree on small boxes") {
    for (int n = 2; n <= 3; ++n) {
        const auto parts = boxed(n, 3);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    const bool horn = horn_feasible(SpectrumTriple::from_partitions(a, b, c, n));
                    CHECK(horn == hermitian_feasible_integer(a, b, c));
                }
    }
}

TEST_CASE("saturation scan") {
    CHECK(lr_coefficient({3}, {3}, {6}) != 0);
    const SaturationReport small = saturation_scan(4, 3);
    CHECK(small.violations.empty());
    CHECK(small.triples_checked > 0);
    const SaturationReport m1 = saturation_scan(3, 1);
    CHECK(m1.violations.empty());
}
