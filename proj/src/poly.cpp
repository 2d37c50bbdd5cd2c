#include "algcomb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algcomb {

int Monomial::degree() const noexcept {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

int Monomial::degree_range(int begin, int end) const noexcept {
    int d = 0;
    for (int i = begin; i < end; ++i) d += exp[i];
    return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] + other.exp[i]);
    return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(other.exp[i] - exp[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ULL;
    return h;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0 || n_vars > kMaxVars)
        throw std::invalid_argument("MultiPoly: variable count out of range [0, 16]");
}

MultiPoly MultiPoly::constant(int n_vars, const mpq_class& c) {
    MultiPoly p(n_vars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw std::out_of_range("MultiPoly::variable: index out of range");
    Monomial m;
    m.exp[index] = 1;
    return monomial(n_vars, m);
}

MultiPoly MultiPoly::monomial(int n_vars, const Monomial& m, const mpq_class& c) {
    MultiPoly p(n_vars);
    p.add_term(m, c);
    return p;
}

int MultiPoly::total_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MultiPoly::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

mpq_class MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.n_vars_ != n_vars_) throw std::invalid_argument("MultiPoly: variable universe mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.n_vars_ != n_vars_) throw std::invalid_argument("MultiPoly: variable universe mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MultiPoly: variable universe mismatch");
    MultiPoly out(a.n_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(n_vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        --d.exp[var];
        out.terms_.emplace_hint(out.terms_.end(), d, c * m.exp[var]);
    }
    return out;
}

MultiPoly MultiPoly::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_vars_) throw std::invalid_argument("permuted: wrong permutation size");
    MultiPoly out(n_vars_);
    for (const auto& [m, c] : terms_) {
        Monomial r;
        for (int i = 0; i < n_vars_; ++i) r.exp[perm[i]] = m.exp[i];
        out.terms_.emplace(r, c);
    }
    return out;
}

MultiPoly MultiPoly::drop_last_variable_at_zero() const {
    if (n_vars_ == 0) throw std::invalid_argument("drop_last_variable_at_zero: no variables");
    MultiPoly out(n_vars_ - 1);
    for (const auto& [m, c] : terms_)
        if (m.exp[n_vars_ - 1] == 0) out.terms_.emplace(m, c);
    return out;
}

MultiPoly MultiPoly::widened(int n_vars) const {
    if (n_vars < n_vars_) throw std::invalid_argument("widened: cannot shrink the variable universe");
    MultiPoly out(n_vars);
    out.terms_ = terms_;
    return out;
}

mpq_class MultiPoly::evaluate(std::span<const mpq_class> point) const {
    if (static_cast<int>(point.size()) != n_vars_) throw std::invalid_argument("evaluate: wrong point size");
    mpq_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < n_vars_; ++i)
            for (int k = 0; k < m.exp[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool unit = m.degree() > 0 && (c == 1 || c == -1);
        if (c < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        first = false;
        if (!unit) os << abs(c);
        bool need_star = !unit;
        for (int i = 0; i < n_vars_; ++i) {
            if (m.exp[i] == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            if (i < static_cast<int>(names.size())) os << names[i];
            else os << "v" << (i + 1);
            if (m.exp[i] > 1) os << '^' << static_cast<int>(m.exp[i]);
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, int e) {
    MultiPoly r = MultiPoly::constant(p.n_vars(), 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

std::vector<std::string> variable_names(int n, bool two_sets) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (two_sets)
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

} // namespace algcomb
