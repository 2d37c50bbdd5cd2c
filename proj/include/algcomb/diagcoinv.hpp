#pragma once

#include <map>
#include <vector>

#include "algcomb/apolar.hpp"
#include "algcomb/groebner.hpp"

namespace algcomb {

/// Largest n handled without an explicit opt-in.
inline constexpr int kDiagonalDefaultCap = 4;

/// Polarized power sums p_{h,k} = sum_r x_r^h y_r^k, 1 <= h+k <= n, over
/// x1..xn, y1..yn, ordered by h+k then decreasing h.
std::vector<MultiPoly> diagonal_invariant_generators(int n);

/// e_1..e_n in x1..xn.
std::vector<MultiPoly> elementary_generators(int n);

/// Standard monomials of B/I with their bidegrees.
struct QuotientBasis {
    int n_vars = 0;
    int x_vars = 0;
    std::vector<Monomial> monomials;

    std::map<Bidegree, long> dimensions() const;
    long total() const { return static_cast<long>(monomials.size()); }
    /// Coefficients of sum_d dim(total degree d) q^d.
    std::vector<long> hilbert_series() const;
};

/// B/I for S_n acting on `x_vars` = n variables (and n more y variables in
/// the two-set case).
struct CoinvariantQuotient {
    int n = 0;
    bool two_sets = true;
    GroebnerBasis groebner;
    QuotientBasis basis;
};

/// Diagonal coinvariants R^(2) for x1..xn, y1..yn. Throws ResourceCapError
/// for n > `n_cap` (default 4) or when the Groebner budget is exceeded.
CoinvariantQuotient diagonal_coinvariants(int n, MonomialOrder order = MonomialOrder::Grevlex,
                                          const GroebnerOptions& options = {}, int n_cap = kDiagonalDefaultCap);

/// Single-set coinvariants C[x1..xn]/(e_1..e_n).
CoinvariantQuotient classical_coinvariants(int n, MonomialOrder order = MonomialOrder::Grevlex,
                                           const GroebnerOptions& options = {});

/// dim R^(2)_{ij} for every bidegree.
std::map<Bidegree, long> bigraded_dimensions(int n, int n_cap = kDiagonalDefaultCap);

/// Character of S_n on each bidegree of the quotient, traced through normal
/// forms of permuted standard monomials.
CharacterTable quotient_character(const CoinvariantQuotient& q);

struct AntiinvariantDimensions {
    std::map<Bidegree, long> by_bidegree;  // nonzero entries only
    long total = 0;
};

/// Sign-isotypic dimension per bidegree: (1/n!) sum_w sgn(w) tr(w).
AntiinvariantDimensions antiinvariant_dimensions(const CharacterTable& table);
AntiinvariantDimensions antiinvariant_dimensions(int n, int n_cap = kDiagonalDefaultCap);

/// Sequences in [1..n]^n whose sorted values satisfy a_(i) <= i, counted
/// by value multiplicities. Throws std::invalid_argument unless 0 <= n <= 9.
mpz_class count_parking_functions(int n);

/// Same count by enumerating all n^n sequences. n <= 7.
mpz_class count_parking_functions_brute(int n);

mpz_class catalan(int n);

} // namespace algcomb
