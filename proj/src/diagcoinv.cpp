#include "algcomb/diagcoinv.hpp"

#include <functional>
#include <stdexcept>

#include "algcomb/symfunc.hpp"

namespace algcomb {

std::vector<MultiPoly> diagonal_invariant_generators(int n) {
    if (n < 1) throw std::invalid_argument("diagonal_invariant_generators: n must be positive");
    if (2 * n > kMaxVars) throw std::invalid_argument("diagonal_invariant_generators: n too large");
    std::vector<MultiPoly> gens;
    for (int d = 1; d <= n; ++d)
        for (int h = d; h >= 0; --h) {
            MultiPoly p(2 * n);
            for (int r = 0; r < n; ++r) {
                Monomial m;
                m.exp[r] = static_cast<std::uint8_t>(h);
                m.exp[n + r] = static_cast<std::uint8_t>(d - h);
                p.add_term(m, 1);
            }
            gens.push_back(std::move(p));
        }
    return gens;
}

std::vector<MultiPoly> elementary_generators(int n) {
    std::vector<MultiPoly> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(elementary_symmetric(k, n));
    return gens;
}

std::map<Bidegree, long> QuotientBasis::dimensions() const {
    std::map<Bidegree, long> dims;
    for (const auto& m : monomials) ++dims[bidegree_of(m, x_vars)];
    return dims;
}

std::vector<long> QuotientBasis::hilbert_series() const {
    std::vector<long> series;
    for (const auto& m : monomials) {
        const auto d = static_cast<std::size_t>(m.degree());
        if (series.size() <= d) series.resize(d + 1, 0);
        ++series[d];
    }
    return series;
}

namespace {

CoinvariantQuotient build_quotient(int n, bool two_sets, std::vector<MultiPoly> gens, MonomialOrder order,
                                   const GroebnerOptions& options) {
    const int n_vars = two_sets ? 2 * n : n;
    PolyIdeal ideal{n_vars, std::move(gens), order};
    GroebnerBasis gb = groebner_basis(ideal, options);
    QuotientBasis basis{n_vars, n, gb.standard_monomials()};
    return CoinvariantQuotient{n, two_sets, std::move(gb), std::move(basis)};
}

} // namespace

CoinvariantQuotient diagonal_coinvariants(int n, MonomialOrder order, const GroebnerOptions& options, int n_cap) {
    if (n > n_cap)
        throw ResourceCapError("diagonal_coinvariants: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(n_cap));
    return build_quotient(n, true, diagonal_invariant_generators(n), order, options);
}

CoinvariantQuotient classical_coinvariants(int n, MonomialOrder order, const GroebnerOptions& options) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("classical_coinvariants: n out of range");
    return build_quotient(n, false, elementary_generators(n), order, options);
}

std::map<Bidegree, long> bigraded_dimensions(int n, int n_cap) {
    return diagonal_coinvariants(n, MonomialOrder::Grevlex, {}, n_cap).basis.dimensions();
}

CharacterTable quotient_character(const CoinvariantQuotient& q) {
    CharacterTable table;
    table.n = q.n;
    table.classes = conjugacy_classes(q.n);
    const auto& mons = q.basis.monomials;
    std::map<Bidegree, std::vector<mpz_class>> traces;
    for (const auto& m : mons) traces.try_emplace(bidegree_of(m, q.basis.x_vars), table.classes.size(), 0);

    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto perm = diagonal_action(table.classes[c].representative, q.two_sets);
        std::vector<MultiPoly> images;
        images.reserve(mons.size());
        for (const auto& m : mons) images.push_back(MultiPoly::monomial(q.basis.n_vars, m).permuted(perm));
        const std::vector<MultiPoly> nfs = q.groebner.normal_forms(images);
        std::map<Bidegree, mpq_class> sums;
        for (std::size_t k = 0; k < mons.size(); ++k) sums[bidegree_of(mons[k], q.basis.x_vars)] += nfs[k].coefficient(mons[k]);
        for (const auto& [bd, s] : sums) {
            if (s.get_den() != 1) throw std::logic_error("quotient_character: non-integer trace");
            traces[bd][c] = s.get_num();
        }
    }
    table.traces = std::move(traces);
    return table;
}

AntiinvariantDimensions antiinvariant_dimensions(const CharacterTable& table) {
    AntiinvariantDimensions out;
    const mpz_class order = factorial(table.n);
    for (const auto& [bd, tr] : table.traces) {
        mpz_class inner = 0;
        for (std::size_t c = 0; c < tr.size(); ++c) inner += table.classes[c].size * table.classes[c].sign * tr[c];
        if (inner % order != 0 || inner < 0) throw std::logic_error("antiinvariant_dimensions: projection is not a nonnegative integer");
        const long d = mpz_class(inner / order).get_si();
        if (d != 0) out.by_bidegree[bd] = d;
        out.total += d;
    }
    return out;
}

AntiinvariantDimensions antiinvariant_dimensions(int n, int n_cap) {
    return antiinvariant_dimensions(quotient_character(diagonal_coinvariants(n, MonomialOrder::Grevlex, {}, n_cap)));
}

mpz_class count_parking_functions(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("count_parking_functions: n must be in [0, 9]");
    // ways(v, used): positions filled so far with values < v; value v takes c
    // more positions, and at least v positions must hold values <= v.
    std::function<mpz_class(int, int)> ways = [&](int v, int used) -> mpz_class {
        if (v > n) return used == n ? 1 : 0;
        mpz_class total = 0;
        for (int c = std::max(0, v - used); used + c <= n; ++c) total += binomial(n - used, c) * ways(v + 1, used + c);
        return total;
    };
    return ways(1, 0);
}

mpz_class count_parking_functions_brute(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("count_parking_functions_brute: n must be in [0, 7]");
    std::vector<int> a(n, 1);
    long count = 0;
    while (true) {
        std::vector<int> s = a;
        std::sort(s.begin(), s.end());
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (s[i] > i + 1) ok = false;
        if (ok) ++count;
        int k = 0;
        while (k < n && a[k] == n) a[k++] = 1;
        if (k == n) break;
        ++a[k];
    }
    return count;
}

mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

} // namespace algcomb
