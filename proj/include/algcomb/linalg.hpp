#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "algcomb/poly.hpp"

namespace algcomb {

/// Determinant over Q by Gaussian elimination.
mpq_class determinant(std::vector<std::vector<mpq_class>> m);

/// Exact subspace of polynomial space kept in reduced row-echelon form.
/// Each basis vector has coefficient 1 at its pivot monomial and 0 at every
/// other pivot, so the coordinates of a member v are v's coefficients at the
/// pivots.
class EchelonSpace {
public:
    explicit EchelonSpace(int n_vars) : n_vars_(n_vars) {}

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(const MultiPoly& v);
    /// v minus its projection along the current pivots; zero iff v is in the span.
    MultiPoly reduce(const MultiPoly& v) const;
    bool contains(const MultiPoly& v) const { return reduce(v).is_zero(); }

    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<MultiPoly>& basis() const noexcept { return basis_; }
    const std::vector<Monomial>& pivots() const noexcept { return pivots_; }
    int n_vars() const noexcept { return n_vars_; }

private:
    int n_vars_;
    std::vector<MultiPoly> basis_;
    std::vector<Monomial> pivots_;
    std::map<Monomial, std::size_t> pivot_index_;
};

} // namespace algcomb
