#include "algcomb/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace algcomb {

bool order_greater(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    if (order == MonomialOrder::Deglex) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
        return false;
    }
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
}

namespace {

struct Greater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return order_greater(order, a, b); }
};

using Work = std::map<Monomial, mpq_class, Greater>;

// Polynomial as terms sorted by decreasing monomial.
struct Sorted {
    std::vector<Monomial> mons;
    std::vector<mpq_class> coefs;
    const Monomial& lead() const { return mons.front(); }
    bool empty() const { return mons.empty(); }
};

Sorted to_sorted(const MultiPoly& f, MonomialOrder order) {
    Work w(Greater{order});
    for (const auto& [m, c] : f.terms()) w.emplace(m, c);
    Sorted s;
    for (auto& [m, c] : w) {
        s.mons.push_back(m);
        s.coefs.push_back(c);
    }
    return s;
}

MultiPoly to_multi(const Sorted& s, int n_vars) {
    MultiPoly f(n_vars);
    for (std::size_t i = 0; i < s.mons.size(); ++i) f.add_term(s.mons[i], s.coefs[i]);
    return f;
}

void make_monic(Sorted& s) {
    if (s.empty() || s.coefs.front() == 1) return;
    const mpq_class inv = 1 / s.coefs.front();
    for (auto& c : s.coefs) c *= inv;
}

// Full reduction of w by the monic polynomials in `basis`, skipping index `skip`.
Sorted reduce(Work w, const std::vector<Sorted>& basis, std::size_t skip = SIZE_MAX) {
    Sorted out;
    while (!w.empty()) {
        auto it = w.begin();
        const Sorted* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].empty()) continue;
            if (basis[k].lead().divides(it->first)) {
                divisor = &basis[k];
                break;
            }
        }
        if (!divisor) {
            out.mons.push_back(it->first);
            out.coefs.push_back(std::move(it->second));
            w.erase(it);
            continue;
        }
        const Monomial q = divisor->lead().quotient_of(it->first);
        const mpq_class c = it->second;
        w.erase(it);
        for (std::size_t t = 1; t < divisor->mons.size(); ++t) {
            const Monomial m = divisor->mons[t] * q;
            auto [pos, inserted] = w.try_emplace(m, 0);
            pos->second -= c * divisor->coefs[t];
            if (pos->second == 0) w.erase(pos);
        }
    }
    return out;
}

Work to_work(const Sorted& s, MonomialOrder order) {
    Work w(Greater{order});
    for (std::size_t i = 0; i < s.mons.size(); ++i) w.emplace(s.mons[i], s.coefs[i]);
    return w;
}

Work s_polynomial(const Sorted& f, const Sorted& g, MonomialOrder order) {
    const Monomial l = Monomial::lcm(f.lead(), g.lead());
    const Monomial qf = f.lead().quotient_of(l), qg = g.lead().quotient_of(l);
    Work w(Greater{order});
    for (std::size_t i = 1; i < f.mons.size(); ++i) w.emplace(f.mons[i] * qf, f.coefs[i]);
    for (std::size_t i = 1; i < g.mons.size(); ++i) {
        auto [pos, inserted] = w.try_emplace(g.mons[i] * qg, 0);
        pos->second -= g.coefs[i];
        if (pos->second == 0) w.erase(pos);
    }
    return w;
}

std::size_t max_bits(const Sorted& s) {
    std::size_t bits = 0;
    for (const auto& c : s.coefs)
        bits = std::max({bits, mpz_sizeinbase(c.get_num_mpz_t(), 2), mpz_sizeinbase(c.get_den_mpz_t(), 2)});
    return bits;
}

struct Pair {
    Monomial lcm;
    std::size_t i, j;
};

} // namespace

Monomial leading_monomial(const MultiPoly& f, MonomialOrder order) {
    if (f.is_zero()) throw std::invalid_argument("leading_monomial: zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order_greater(order, m, *best)) best = &m;
    return *best;
}

GroebnerBasis::GroebnerBasis(int n_vars, MonomialOrder order, std::vector<MultiPoly> polys)
    : n_vars_(n_vars), order_(order), polys_(std::move(polys)) {
    for (const auto& p : polys_) leads_.push_back(leading_monomial(p, order_));
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const { return normal_forms({f}).front(); }

std::vector<MultiPoly> GroebnerBasis::normal_forms(const std::vector<MultiPoly>& fs) const {
    std::vector<Sorted> basis;
    for (const auto& p : polys_) basis.push_back(to_sorted(p, order_));
    std::vector<MultiPoly> out;
    for (const auto& f : fs) {
        Work w(Greater{order_});
        for (const auto& [m, c] : f.terms()) w.emplace(m, c);
        out.push_back(to_multi(reduce(std::move(w), basis), f.n_vars()));
    }
    return out;
}

bool GroebnerBasis::is_standard(const Monomial& m) const noexcept {
    for (const auto& l : leads_)
        if (l.divides(m)) return false;
    return true;
}

bool GroebnerBasis::zero_dimensional() const noexcept {
    for (const auto& l : leads_)
        if (l.degree() == 0) return true;
    for (int v = 0; v < n_vars_; ++v) {
        bool found = false;
        for (const auto& l : leads_)
            if (l.exp[v] > 0 && l.degree() == l.exp[v]) found = true;
        if (!found) return false;
    }
    return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials(std::size_t cap) const {
    if (!zero_dimensional()) throw std::domain_error("standard_monomials: quotient is infinite-dimensional");
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    std::deque<Monomial> queue;
    if (is_standard(Monomial{})) {
        queue.push_back(Monomial{});
        seen.insert(Monomial{});
    }
    while (!queue.empty()) {
        const Monomial m = queue.front();
        queue.pop_front();
        out.push_back(m);
        if (out.size() > cap) throw ResourceCapError("standard_monomials: more than " + std::to_string(cap) + " monomials");
        for (int v = 0; v < n_vars_; ++v) {
            Monomial next = m;
            ++next.exp[v];
            if (is_standard(next) && seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order_greater(order_, b, a); });
    return out;
}

GroebnerBasis groebner_basis(const PolyIdeal& ideal, const GroebnerOptions& options) {
    const MonomialOrder order = ideal.order;
    std::vector<Sorted> g;
    for (const auto& f : ideal.generators) {
        if (f.n_vars() != ideal.n_vars) throw std::invalid_argument("groebner_basis: generator arity mismatch");
        if (f.is_zero()) continue;
        Sorted s = to_sorted(f, order);
        make_monic(s);
        g.push_back(std::move(s));
    }
    if (g.empty()) throw std::invalid_argument("groebner_basis: no nonzero generators");

    // Pending pairs ordered by lcm (normal selection), ties by index.
    auto cmp = [order](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return order_greater(order, b.lcm, a.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(cmp)> pending(cmp);
    std::set<std::pair<std::size_t, std::size_t>> pending_ids;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pending.insert(Pair{Monomial::lcm(g[i].lead(), g[j].lead()), i, j});
            pending_ids.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

    long reduced = 0, skipped = 0;
    auto is_pending = [&](std::size_t a, std::size_t b) { return pending_ids.count({std::min(a, b), std::max(a, b)}) > 0; };
    while (!pending.empty()) {
        const Pair pr = *pending.begin();
        pending.erase(pending.begin());
        pending_ids.erase({pr.i, pr.j});
        const Sorted& fi = g[pr.i];
        const Sorted& fj = g[pr.j];
        if (pr.lcm == fi.lead() * fj.lead()) {
            ++skipped;
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (g[k].lead().divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
        }
        if (chain) {
            ++skipped;
            continue;
        }
        if (++reduced > options.pair_budget)
            throw ResourceCapError("groebner_basis: S-pair budget of " + std::to_string(options.pair_budget) + " exceeded");
        Sorted h = reduce(s_polynomial(fi, fj, order), g);
        if (h.empty()) continue;
        make_monic(h);
        if (max_bits(h) > options.coefficient_bits)
            throw ResourceCapError("groebner_basis: coefficient size exceeded " + std::to_string(options.coefficient_bits) + " bits");
        g.push_back(std::move(h));
        add_pairs_for(g.size() - 1);
    }

    // Minimal basis, then tail-reduce each element against the others.
    std::sort(g.begin(), g.end(), [&](const Sorted& a, const Sorted& b) { return order_greater(order, b.lead(), a.lead()); });
    std::vector<Sorted> minimal;
    for (auto& s : g) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (m.lead().divides(s.lead())) redundant = true;
        if (!redundant) minimal.push_back(std::move(s));
    }
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        Sorted r = reduce(to_work(minimal[k], order), minimal, k);
        make_monic(r);
        out.push_back(to_multi(r, ideal.n_vars));
    }
    GroebnerBasis gb(ideal.n_vars, order, std::move(out));
    gb.pairs_reduced = reduced;
    gb.pairs_skipped = skipped;
    return gb;
}

} // namespace algcomb
