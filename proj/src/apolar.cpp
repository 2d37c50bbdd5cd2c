#include "algcomb/apolar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace algcomb {

Bidegree bidegree_of(const Monomial& m, int x_vars) {
    return {m.degree_range(0, x_vars), m.degree_range(x_vars, kMaxVars)};
}

std::size_t GradedSpan::dimension() const {
    std::size_t d = 0;
    for (const auto& [bd, space] : components) d += space.dimension();
    return d;
}

std::map<Bidegree, std::size_t> GradedSpan::dimensions() const {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [bd, space] : components) out[bd] = space.dimension();
    return out;
}

std::vector<long> GradedSpan::hilbert_series() const {
    std::vector<long> series;
    for (const auto& [bd, space] : components) {
        const int d = bd.first + bd.second;
        if (static_cast<int>(series.size()) <= d) series.resize(d + 1, 0);
        series[d] += static_cast<long>(space.dimension());
    }
    return series;
}

bool GradedSpan::closed_under_derivatives() const {
    for (const auto& [bd, space] : components) {
        for (const auto& b : space.basis()) {
            for (int v = 0; v < n_vars; ++v) {
                const MultiPoly d = b.derivative(v);
                if (d.is_zero()) continue;
                auto it = components.find(bidegree_of(d.terms().begin()->first, x_vars));
                if (it == components.end() || !it->second.contains(d)) return false;
            }
        }
    }
    return true;
}

GradedSpan derivative_span(const MultiPoly& p, int x_vars) {
    if (p.is_zero()) throw std::invalid_argument("derivative_span: zero polynomial");
    if (x_vars < 0 || x_vars > p.n_vars()) throw std::invalid_argument("derivative_span: bad x-variable count");
    const Bidegree top = bidegree_of(p.terms().begin()->first, x_vars);
    for (const auto& [m, c] : p.terms())
        if (bidegree_of(m, x_vars) != top)
            throw std::invalid_argument("derivative_span: polynomial is not bihomogeneous");

    GradedSpan span;
    span.n_vars = p.n_vars();
    span.x_vars = x_vars;
    span.components.emplace(top, EchelonSpace(p.n_vars())).first->second.insert(p);

    // Differentiation lowers total degree by one, so each level is complete
    // once the level above it has been differentiated.
    for (int d = top.first + top.second; d > 0; --d) {
        std::vector<Bidegree> level;
        for (const auto& [bd, space] : span.components)
            if (bd.first + bd.second == d) level.push_back(bd);
        for (const auto& bd : level) {
            const std::vector<MultiPoly> basis = span.components.at(bd).basis();
            for (const auto& b : basis) {
                for (int v = 0; v < p.n_vars(); ++v) {
                    MultiPoly der = b.derivative(v);
                    if (der.is_zero()) continue;
                    const Bidegree target = v < x_vars ? Bidegree{bd.first - 1, bd.second} : Bidegree{bd.first, bd.second - 1};
                    span.components.try_emplace(target, p.n_vars()).first->second.insert(der);
                }
            }
        }
    }
    return span;
}

MultiPoly vandermonde(int n) {
    if (n < 1) throw std::invalid_argument("vandermonde: n must be positive");
    MultiPoly v = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v = v * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
    return v;
}

MultiPoly gh_determinant(const std::vector<CellCoord>& cells, int n) {
    if (static_cast<int>(cells.size()) != n) throw std::invalid_argument("gh_determinant: need exactly n cells");
    if (2 * n > kMaxVars) throw std::invalid_argument("gh_determinant: n too large for the variable universe");
    if (std::set<CellCoord>(cells.begin(), cells.end()).size() != cells.size())
        throw std::invalid_argument("gh_determinant: repeated cells give a zero determinant");

    // Distinct cells make every permutation contribute a distinct monomial,
    // so the expansion has exactly n! terms and nothing cancels.
    MultiPoly det(2 * n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (sigma[a] > sigma[b]) ++inversions;
        Monomial m;
        for (int r = 0; r < n; ++r) {
            m.exp[r] = static_cast<std::uint8_t>(cells[sigma[r]].row_index);
            m.exp[n + r] = static_cast<std::uint8_t>(cells[sigma[r]].col_index);
        }
        det.add_term(m, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    std::vector<ConjugacyClass> out;
    const mpz_class nfact = factorial(n);
    for (const auto& rho : enumerate_partitions(n)) {
        ConjugacyClass cls;
        cls.cycle_type = rho;
        cls.representative.resize(n);
        int pos = 0;
        for (int part : rho.parts()) {
            for (int k = 0; k < part; ++k) cls.representative[pos + k] = pos + (k + 1) % part;
            pos += part;
        }
        cls.sign = (n - rho.length()) % 2 ? -1 : 1;
        mpz_class z = 1;
        std::map<int, int> mult;
        for (int part : rho.parts()) ++mult[part];
        for (const auto& [part, m] : mult) {
            for (int k = 0; k < m; ++k) z *= part;
            z *= factorial(m);
        }
        cls.size = nfact / z;
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<int> diagonal_action(const std::vector<int>& w, bool two_sets) {
    const int n = static_cast<int>(w.size());
    std::vector<int> perm(two_sets ? 2 * n : n);
    for (int i = 0; i < n; ++i) {
        perm[i] = w[i];
        if (two_sets) perm[n + i] = n + w[i];
    }
    return perm;
}

std::vector<mpz_class> CharacterTable::total() const {
    std::vector<mpz_class> sum(classes.size(), 0);
    for (const auto& [bd, tr] : traces)
        for (std::size_t c = 0; c < tr.size(); ++c) sum[c] += tr[c];
    return sum;
}

CharacterTable graded_character(const GradedSpan& span, int n) {
    const bool two_sets = span.n_vars == 2 * n && span.x_vars == n;
    if (!two_sets && !(span.n_vars == n && span.x_vars == n))
        throw std::invalid_argument("graded_character: span variables do not match S_n acting on x (and y)");

    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[i], s[i + 1]);
        const auto perm = diagonal_action(s, two_sets);
        for (const auto& [bd, space] : span.components)
            for (const auto& b : space.basis())
                if (!space.contains(b.permuted(perm)))
                    throw std::invalid_argument("graded_character: span is not invariant under S_n");
    }

    CharacterTable table;
    table.n = n;
    table.classes = conjugacy_classes(n);
    for (const auto& [bd, space] : span.components) {
        std::vector<mpz_class> tr;
        for (const auto& cls : table.classes) {
            const auto perm = diagonal_action(cls.representative, two_sets);
            mpq_class trace = 0;
            for (std::size_t k = 0; k < space.dimension(); ++k)
                trace += space.basis()[k].permuted(perm).coefficient(space.pivots()[k]);
            if (trace.get_den() != 1) throw std::logic_error("graded_character: non-integer trace");
            tr.push_back(trace.get_num());
        }
        table.traces.emplace(bd, std::move(tr));
    }
    return table;
}

mpz_class mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("mn_character: |lambda| != |rho|");
    std::map<std::pair<Partition, int>, mpz_class> memo;
    // Beta numbers: removing a border strip of length r moves one bead from b
    // to an empty position b - r, with sign (-1)^(beads strictly between).
    std::function<mpz_class(const Partition&, int)> rec = [&](const Partition& shape, int k) -> mpz_class {
        if (k == rho.length()) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int r = rho[k];
        const int len = shape.length();
        std::vector<int> beta(len);
        for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);
        const std::set<int> beads(beta.begin(), beta.end());
        mpz_class total = 0;
        for (int b : beta) {
            const int target = b - r;
            if (target < 0 || beads.count(target)) continue;
            int between = 0;
            for (int other : beta)
                if (other > target && other < b) ++between;
            std::vector<int> moved = beta;
            *std::find(moved.begin(), moved.end(), b) = target;
            std::sort(moved.rbegin(), moved.rend());
            std::vector<int> parts(len);
            for (int i = 0; i < len; ++i) parts[i] = moved[i] - (len - 1 - i);
            const mpz_class sub = rec(Partition(std::move(parts)), k + 1);
            total += between % 2 ? -sub : sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(lambda, 0);
}

std::map<Partition, long> decompose_character(int n, const std::vector<ConjugacyClass>& classes,
                                              const std::vector<mpz_class>& traces) {
    const mpz_class order = factorial(n);
    std::map<Partition, long> out;
    for (const auto& lambda : enumerate_partitions(n)) {
        mpz_class inner = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
            inner += classes[c].size * traces[c] * mn_character(lambda, classes[c].cycle_type);
        if (inner % order != 0 || inner < 0)
            throw std::logic_error("irreducible multiplicity of " + lambda.to_string() + " is not a nonnegative integer");
        const mpz_class mult = inner / order;
        if (mult != 0) out[lambda] = mult.get_si();
    }
    return out;
}

std::map<Bidegree, std::map<Partition, long>> irreducible_multiplicities(const CharacterTable& table) {
    std::map<Bidegree, std::map<Partition, long>> out;
    for (const auto& [bd, tr] : table.traces) out[bd] = decompose_character(table.n, table.classes, tr);
    return out;
}

} // namespace algcomb
