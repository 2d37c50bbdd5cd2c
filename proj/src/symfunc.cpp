#include "algcomb/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "algcomb/linalg.hpp"

namespace algcomb {

namespace {

// Every kappa with lambda/kappa a horizontal strip: lambda_{i+1} <= kappa_i <= lambda_i.
void for_each_horizontal_strip(const Partition& lambda, const std::function<void(const Partition&)>& fn) {
    const int len = lambda.length();
    std::vector<int> kappa(len);
    std::function<void(int)> rec = [&](int i) {
        if (i == len) {
            fn(Partition(kappa));
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            kappa[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

std::vector<Partition> dominant_partitions(const MultiPoly& p) {
    std::vector<Partition> out;
    for (const auto& [m, c] : p.terms()) {
        bool sorted = true;
        for (int i = 1; i < p.n_vars(); ++i)
            if (m.exp[i] > m.exp[i - 1]) sorted = false;
        if (!sorted) continue;
        std::vector<int> parts(m.exp.begin(), m.exp.begin() + p.n_vars());
        out.emplace_back(std::move(parts));
    }
    return out;
}

Monomial monomial_of(const Partition& lambda) {
    Monomial m;
    for (int i = 0; i < lambda.length(); ++i) m.exp[i] = static_cast<std::uint8_t>(lambda[i]);
    return m;
}

} // namespace

MultiPoly elementary_symmetric(int k, int n_vars) {
    MultiPoly out(n_vars);
    if (k < 0 || k > n_vars) return out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == k) {
            Monomial m;
            for (int i : chosen) m.exp[i] = 1;
            out.add_term(m, 1);
            return;
        }
        for (int i = start; i < n_vars; ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

MultiPoly schur_poly(const Partition& lambda, int n_vars, int degree_cap) {
    if (lambda.size() > degree_cap)
        throw std::domain_error("schur_poly: |lambda| = " + std::to_string(lambda.size()) +
                                " exceeds degree cap " + std::to_string(degree_cap));
    if (lambda.length() > n_vars) return MultiPoly(n_vars);

    // s_lambda(x_1..x_k) = sum over horizontal strips lambda/kappa of
    // s_kappa(x_1..x_{k-1}) * x_k^{|lambda/kappa|}; the cells of the strip hold entry k.
    std::map<std::pair<Partition, int>, MultiPoly> memo;
    std::function<const MultiPoly&(const Partition&, int)> build = [&](const Partition& shape, int k) -> const MultiPoly& {
        auto key = std::make_pair(shape, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        MultiPoly result(n_vars);
        if (shape.empty()) {
            result = MultiPoly::constant(n_vars, 1);
        } else if (shape.length() <= k) {
            for_each_horizontal_strip(shape, [&](const Partition& kappa) {
                if (kappa.length() > k - 1) return;
                const MultiPoly& sub = build(kappa, k - 1);
                const int strip = shape.size() - kappa.size();
                for (const auto& [m, c] : sub.terms()) {
                    Monomial shifted = m;
                    shifted.exp[k - 1] = static_cast<std::uint8_t>(strip);
                    result.add_term(shifted, c);
                }
            });
        }
        return memo.emplace(std::move(key), std::move(result)).first->second;
    };
    return build(lambda, n_vars);
}

mpq_class schur_bialternant_eval(const Partition& lambda, std::span<const mpq_class> point) {
    const int n = static_cast<int>(point.size());
    if (lambda.length() > n) return 0;
    std::vector<std::vector<mpq_class>> num(n, std::vector<mpq_class>(n));
    std::vector<std::vector<mpq_class>> den(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mpq_class a = 1, b = 1;
            const int ea = lambda[j] + n - 1 - j;
            const int eb = n - 1 - j;
            for (int e = 0; e < ea; ++e) a *= point[i];
            for (int e = 0; e < eb; ++e) b *= point[i];
            num[i][j] = a;
            den[i][j] = b;
        }
    }
    const mpq_class d = determinant(std::move(den));
    if (d == 0) throw std::invalid_argument("schur_bialternant_eval: coordinates must be distinct");
    return determinant(std::move(num)) / d;
}

const MultiPoly& SchurCache::get(const Partition& lambda) {
    if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
    return cache_.emplace(lambda, schur_poly(lambda, n_vars_, degree_cap_)).first->second;
}

mpz_class kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    std::map<std::pair<Partition, int>, mpz_class> memo;
    // Remove the cells holding the largest entry (a horizontal strip) one content value at a time.
    std::function<mpz_class(const Partition&, int)> rec = [&](const Partition& shape, int k) -> mpz_class {
        if (k == 0) return shape.empty() ? 1 : 0;
        if (shape.length() > k) return 0;
        auto key = std::make_pair(shape, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        mpz_class total = 0;
        const int want = mu[k - 1];
        for_each_horizontal_strip(shape, [&](const Partition& kappa) {
            if (shape.size() - kappa.size() == want) total += rec(kappa, k - 1);
        });
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(lambda, mu.length());
}

mpz_class lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!mu.contained_in(lambda)) return 0;
    if (nu.empty()) return 1;

    // Cells of lambda/mu in reverse reading order: rows top to bottom, right to left.
    std::vector<CellCoord> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.push_back({i, j});

    std::vector<std::vector<int>> filling(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) filling[i].assign(lambda[i], 0);
    std::vector<int> count(nu.length() + 1, 0);
    mpz_class total = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [row, col] = cells[idx];
        int hi = nu.length();
        if (col + 1 < lambda[row]) hi = std::min(hi, filling[row][col + 1]);
        int lo = 1;
        if (row > 0 && col >= mu[row - 1]) lo = filling[row - 1][col] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            filling[row][col] = v;
            rec(idx + 1);
            --count[v];
        }
        filling[row][col] = 0;
    };
    rec(0);
    return total;
}

bool is_symmetric(const MultiPoly& p) {
    const int n = p.n_vars();
    std::vector<int> perm(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        if (!(p.permuted(perm) == p)) return false;
    }
    return true;
}

SchurExpansion schur_expand(const MultiPoly& p, int degree_cap) {
    if (!is_symmetric(p)) throw std::invalid_argument("schur_expand: polynomial is not symmetric");
    if (p.total_degree() > degree_cap)
        throw std::domain_error("schur_expand: degree exceeds cap " + std::to_string(degree_cap));
    SchurCache cache(p.n_vars(), degree_cap);

    // A symmetric polynomial is determined by its coefficients at partition
    // exponents; eliminate lex-leading ones first (s_lambda = x^lambda + lower).
    std::map<Partition, mpq_class> remainder;
    for (const auto& lambda : dominant_partitions(p)) remainder[lambda] = p.coefficient(monomial_of(lambda));

    SchurExpansion out;
    while (!remainder.empty()) {
        auto lead = std::prev(remainder.end());
        const Partition lambda = lead->first;
        const mpq_class c = lead->second;
        out[lambda] = c;
        const MultiPoly& s = cache.get(lambda);
        for (const auto& kappa : dominant_partitions(s)) {
            auto& slot = remainder[kappa];
            slot -= c * s.coefficient(monomial_of(kappa));
            if (slot == 0) remainder.erase(kappa);
        }
        if (remainder.count(lambda)) throw std::logic_error("schur_expand: elimination did not clear leading term");
    }

    MultiPoly rebuilt(p.n_vars());
    for (const auto& [lambda, c] : out) rebuilt += cache.get(lambda) * c;
    if (!(rebuilt == p)) throw std::logic_error("schur_expand: reconstruction does not reproduce input");
    return out;
}

SchurExpansion schur_product_expansion(const Partition& mu, const Partition& nu) {
    const int n = std::max(1, mu.size() + nu.size());
    const int cap = std::max(kDefaultSchurDegreeCap, mu.size() + nu.size());
    return schur_expand(schur_poly(mu, n, cap) * schur_poly(nu, n, cap), cap);
}

} // namespace algcomb
