#include "algcomb/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace algcomb {

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

MultiPoly EchelonSpace::reduce(const MultiPoly& v) const {
    if (v.n_vars() != n_vars_) throw std::invalid_argument("EchelonSpace: variable universe mismatch");
    MultiPoly r = v;
    for (const auto& [m, c] : v.terms()) {
        auto it = pivot_index_.find(m);
        if (it == pivot_index_.end()) continue;
        r -= basis_[it->second] * c;
    }
    return r;
}

bool EchelonSpace::insert(const MultiPoly& v) {
    MultiPoly r = reduce(v);
    if (r.is_zero()) return false;
    const Monomial pm = r.terms().rbegin()->first;
    const mpq_class inv = 1 / r.terms().rbegin()->second;
    r *= inv;
    for (auto& b : basis_) {
        const mpq_class c = b.coefficient(pm);
        if (c != 0) b -= r * c;
    }
    pivot_index_.emplace(pm, basis_.size());
    pivots_.push_back(pm);
    basis_.push_back(std::move(r));
    return true;
}

} // namespace algcomb
