#pragma once

#include <map>
#include <utility>
#include <vector>

#include "algcomb/linalg.hpp"
#include "algcomb/poly.hpp"
#include "algcomb/tableaux.hpp"

namespace algcomb {

/// (x-degree, y-degree). One-variable-set spans use y-degree 0.
using Bidegree = std::pair<int, int>;

/// Span of a polynomial and all of its partial derivatives, one echelon
/// basis per bidegree. Variables [0, x_vars) are x's, the rest y's.
struct GradedSpan {
    int n_vars = 0;
    int x_vars = 0;
    std::map<Bidegree, EchelonSpace> components;

    std::size_t dimension() const;
    std::map<Bidegree, std::size_t> dimensions() const;
    /// Coefficients of sum_d dim(total degree d) q^d.
    std::vector<long> hilbert_series() const;
    /// Every first partial of every basis element lies in the span.
    bool closed_under_derivatives() const;
};

Bidegree bidegree_of(const Monomial& m, int x_vars);

/// Closure of P under partial derivatives, built top-down one total degree
/// at a time. P must be nonzero and bihomogeneous (homogeneous for one set).
GradedSpan derivative_span(const MultiPoly& p, int x_vars);
inline GradedSpan derivative_span(const MultiPoly& p) { return derivative_span(p, p.n_vars()); }

/// prod_{i<j} (x_i - x_j) in n variables.
MultiPoly vandermonde(int n);

/// det(x_r^{i_s} y_r^{j_s}) over 2n variables x1..xn, y1..yn, columns in the
/// given cell order. Throws std::invalid_argument on repeated cells or |cells| != n.
MultiPoly gh_determinant(const std::vector<CellCoord>& cells, int n);

/// D_mu with columns in row-major diagram order.
inline MultiPoly gh_determinant(const Partition& mu) { return gh_determinant(diagram_coords(mu), mu.size()); }

struct ConjugacyClass {
    Partition cycle_type;
    mpz_class size;
    int sign = 1;
    std::vector<int> representative;  // 0-based one-line notation
};

/// Classes of S_n in enumerate_partitions order.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Variable permutation for the diagonal action of w on x1..xn (and y1..yn
/// when `two_sets`): x_i -> x_{w(i)}, y_i -> y_{w(i)}.
std::vector<int> diagonal_action(const std::vector<int>& w, bool two_sets);

/// Traces of one representative per conjugacy class on each bidegree.
struct CharacterTable {
    int n = 0;
    std::vector<ConjugacyClass> classes;
    std::map<Bidegree, std::vector<mpz_class>> traces;

    /// Sum of traces over all bidegrees.
    std::vector<mpz_class> total() const;
};

/// Throws std::invalid_argument when the span is not invariant under the
/// diagonal S_n action.
CharacterTable graded_character(const GradedSpan& span, int n);

/// chi^lambda(rho) by border-strip removal. Throws on size mismatch.
mpz_class mn_character(const Partition& lambda, const Partition& rho);

/// Multiplicity of M_lambda in a single character given as class traces.
std::map<Partition, long> decompose_character(int n, const std::vector<ConjugacyClass>& classes,
                                              const std::vector<mpz_class>& traces);

/// Per bidegree, every nonzero multiplicity of M_lambda. Throws
/// std::logic_error if an inner product is not a nonnegative integer.
std::map<Bidegree, std::map<Partition, long>> irreducible_multiplicities(const CharacterTable& table);

} // namespace algcomb
