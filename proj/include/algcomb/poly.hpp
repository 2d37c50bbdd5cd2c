#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace algcomb {

inline constexpr int kMaxVars = 16;

/// Dense fixed-arity exponent vector. Unused trailing slots stay zero, so
/// comparison and hashing never need the arity.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> exp{};

    int degree() const noexcept;
    int degree_range(int begin, int end) const noexcept;
    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const noexcept;
    /// other / *this; requires this->divides(other).
    Monomial quotient_of(const Monomial& other) const noexcept;
    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept;

    auto operator<=>(const Monomial&) const = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial over Q in a fixed number of variables. Terms are kept
/// in lexicographic exponent order; zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, mpq_class>;

    explicit MultiPoly(int n_vars = 0);
    static MultiPoly constant(int n_vars, const mpq_class& c);
    static MultiPoly variable(int n_vars, int index);
    static MultiPoly monomial(int n_vars, const Monomial& m, const mpq_class& c = 1);

    int n_vars() const noexcept { return n_vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    int total_degree() const noexcept;
    bool is_homogeneous() const noexcept;

    mpq_class coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    MultiPoly derivative(int var) const;
    /// Substitutes x_i -> x_{perm[i]} for every variable index i.
    MultiPoly permuted(std::span<const int> perm) const;
    /// Sets the last variable to zero and drops it from the universe.
    MultiPoly drop_last_variable_at_zero() const;
    /// Same polynomial in a wider universe; new variables appended.
    MultiPoly widened(int n_vars) const;
    mpq_class evaluate(std::span<const mpq_class> point) const;

    std::string to_string(std::span<const std::string> names = {}) const;

    bool operator==(const MultiPoly& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }

private:
    int n_vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, int e);

/// Names x1..xn, or x1..xn,y1..yn when `two_sets` is set (arity 2n).
std::vector<std::string> variable_names(int n, bool two_sets);

} // namespace algcomb
