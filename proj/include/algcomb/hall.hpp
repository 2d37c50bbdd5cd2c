#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "algcomb/errors.hpp"
#include "algcomb/tableaux.hpp"

namespace algcomb {

inline constexpr long kDefaultGroupCap = 4096;

/// Z/p^{lambda_1} x Z/p^{lambda_2} x ... with elements numbered 0..order-1
/// in mixed radix (first component fastest).
class AbelianPGroup {
public:
    /// Throws ResourceCapError when p^{|lambda|} exceeds `cap`.
    AbelianPGroup(int p, Partition type, long cap = kDefaultGroupCap);

    int p() const noexcept { return p_; }
    const Partition& type() const noexcept { return type_; }
    int order() const noexcept { return order_; }

    int add(int a, int b) const noexcept;
    int scale(int a, long k) const noexcept;
    std::vector<int> components(int a) const;

private:
    int p_;
    Partition type_;
    int order_;
    std::vector<int> moduli_;
    std::vector<int> strides_;
    std::vector<std::uint16_t> digits_;  // order_ x rank, row-major
};

struct SubgroupRecord {
    std::vector<int> elements;  // sorted ascending
    Partition type;
    Partition quotient_type;
};

/// Every subgroup exactly once, in discovery order (breadth first by order).
std::vector<SubgroupRecord> enumerate_subgroups(const AbelianPGroup& g);

/// Type of the subgroup with the given elements, from ranks of p^k H / p^{k+1} H.
Partition subgroup_type(const AbelianPGroup& g, const std::vector<int>& elements);

/// Number of subgroups of each (type, quotient type) for G of type lambda.
std::map<std::pair<Partition, Partition>, long> subgroup_type_counts(const Partition& lambda, int p,
                                                                    long cap = kDefaultGroupCap);

/// g^lambda_{mu,nu}(p): subgroups of type mu with quotient of type nu.
long hall_count(const Partition& lambda, const Partition& mu, const Partition& nu, int p,
                long cap = kDefaultGroupCap);

/// Integer-coefficient polynomial in t.
using IntPolynomial = QPolynomial;

struct HallPolynomialResult {
    IntPolynomial polynomial;
    std::vector<std::pair<int, long>> counts;  // (p, g(p)) for every prime used
    int held_out_prime = 0;
};

/// Interpolates through (p, hall_count) with degree grown until the next
/// prime's count is reproduced. Throws std::invalid_argument with fewer than
/// two primes, std::runtime_error when the primes run out before a held-out
/// check succeeds, and std::logic_error on non-integer coefficients.
HallPolynomialResult hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu,
                                     const std::vector<int>& primes, long cap = kDefaultGroupCap);

/// g^lambda_{mu,nu} evaluated at an arbitrary t through products in the Hall
/// algebra, built from the closed form for quotients that are elementary
/// (lambda/mu a vertical strip). Agrees with hall_count at every prime.
mpq_class hall_algebra_value(const Partition& lambda, const Partition& mu, const Partition& nu, long t);

/// Interpolates hall_algebra_value at t = 2, 3, ... with degree grown until
/// `checks` further points all agree. Not limited by group size.
/// `held_out_prime` holds the first held-out t.
HallPolynomialResult hall_polynomial_algebraic(const Partition& lambda, const Partition& mu, const Partition& nu,
                                               int checks = 3);

/// Coefficients of g(t+1) are all nonnegative.
bool maley_positivity(const IntPolynomial& g);

/// g(t+1) expanded.
IntPolynomial shift_by_one(const IntPolynomial& g);

} // namespace algcomb
