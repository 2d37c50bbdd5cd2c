#pragma once

#include <map>
#include <span>
#include <unordered_map>

#include "algcomb/poly.hpp"
#include "algcomb/tableaux.hpp"

namespace algcomb {

/// Coefficients of a symmetric polynomial in the Schur basis.
using SchurExpansion = std::map<Partition, mpq_class>;

inline constexpr int kDefaultSchurDegreeCap = 12;

/// e_k in n_vars variables; the zero polynomial when k > n_vars.
MultiPoly elementary_symmetric(int k, int n_vars);

/// s_lambda(x_1..x_n) as a sum of x^content over semistandard tableaux,
/// organized by the branching of the largest entry into horizontal strips.
/// Zero when length(lambda) > n_vars. Throws std::domain_error when
/// |lambda| exceeds `degree_cap`.
MultiPoly schur_poly(const Partition& lambda, int n_vars, int degree_cap = kDefaultSchurDegreeCap);

/// s_lambda evaluated at `point` as det(x_i^{lambda_j+n-j}) / det(x_i^{n-j}).
/// Coordinates must be pairwise distinct.
mpq_class schur_bialternant_eval(const Partition& lambda, std::span<const mpq_class> point);

/// Memoizes schur_poly for batch work. Not shared across threads.
class SchurCache {
public:
    explicit SchurCache(int n_vars, int degree_cap = kDefaultSchurDegreeCap)
        : n_vars_(n_vars), degree_cap_(degree_cap) {}
    const MultiPoly& get(const Partition& lambda);
    int n_vars() const noexcept { return n_vars_; }

private:
    int n_vars_;
    int degree_cap_;
    std::unordered_map<Partition, MultiPoly, PartitionHash> cache_;
};

/// Number of SSYT of shape lambda and content mu; 0 on size mismatch.
mpz_class kostka(const Partition& lambda, const Partition& mu);

/// c^lambda_{mu,nu} counted as LR skew tableaux of shape lambda/mu and content
/// nu. The lattice condition is checked on the reverse reading word
/// (right to left along each row, rows top to bottom).
mpz_class lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// True when p is invariant under every adjacent transposition of its variables.
bool is_symmetric(const MultiPoly& p);

/// Triangular elimination of a symmetric polynomial against Schur polynomials
/// in the same variable universe. Throws std::invalid_argument when p is not
/// symmetric, std::logic_error if the reconstruction fails to reproduce p.
SchurExpansion schur_expand(const MultiPoly& p, int degree_cap = kDefaultSchurDegreeCap);

/// s_mu * s_nu expanded in |mu|+|nu| variables, so that every partition of
/// that size is represented.
SchurExpansion schur_product_expansion(const Partition& mu, const Partition& nu);

} // namespace algcomb
