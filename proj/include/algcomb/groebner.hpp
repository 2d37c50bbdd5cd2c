#pragma once

#include <vector>

#include "algcomb/errors.hpp"
#include "algcomb/poly.hpp"

namespace algcomb {

/// Graded orders with variable 0 largest. In the two-set rings the x block
/// (indices 0..n-1) therefore precedes the y block.
enum class MonomialOrder { Grevlex, Deglex };

/// a > b in the given order.
bool order_greater(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;

struct PolyIdeal {
    int n_vars = 0;
    std::vector<MultiPoly> generators;
    MonomialOrder order = MonomialOrder::Grevlex;
};

struct GroebnerOptions {
    long pair_budget = 100000;       // S-pairs actually reduced
    std::size_t coefficient_bits = 1 << 16;  // abort on coefficient blow-up
};

/// Reduced Groebner basis with monic elements sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(int n_vars, MonomialOrder order, std::vector<MultiPoly> polys);

    int n_vars() const noexcept { return n_vars_; }
    MonomialOrder order() const noexcept { return order_; }
    const std::vector<MultiPoly>& polys() const noexcept { return polys_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

    MultiPoly normal_form(const MultiPoly& f) const;
    std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& fs) const;
    bool is_standard(const Monomial& m) const noexcept;
    /// Every variable has a pure power among the leading monomials.
    bool zero_dimensional() const noexcept;
    /// Monomials outside the leading-term ideal, sorted by degree then order.
    /// Throws std::domain_error if the quotient is infinite and
    /// ResourceCapError past `cap` monomials.
    std::vector<Monomial> standard_monomials(std::size_t cap = 200000) const;

    long pairs_reduced = 0;
    long pairs_skipped = 0;

private:
    int n_vars_;
    MonomialOrder order_;
    std::vector<MultiPoly> polys_;
    std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the product and chain criteria and normal
/// pair selection. Throws std::invalid_argument on an empty or all-zero
/// generator list and ResourceCapError when a budget is exceeded.
GroebnerBasis groebner_basis(const PolyIdeal& ideal, const GroebnerOptions& options = {});

/// Leading monomial of a nonzero polynomial.
Monomial leading_monomial(const MultiPoly& f, MonomialOrder order);

} // namespace algcomb
