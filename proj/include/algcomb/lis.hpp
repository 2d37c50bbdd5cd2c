#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "algcomb/tableaux.hpp"

namespace algcomb {

/// One-line word a_1..a_n of a bijection on {1..n}.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `word` uses each of 1..n once.
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    /// Digits of a string such as "274163958" (n <= 9).
    static Permutation from_digits(const std::string& digits);

    const std::vector<int>& word() const noexcept { return word_; }
    int size() const noexcept { return static_cast<int>(word_.size()); }
    int operator[](int i) const { return word_[i]; }
    /// Sum of i (1-based) with a_i > a_{i+1}.
    int major_index() const;

private:
    std::vector<int> word_;
};

/// Longest increasing subsequence length of any integer sequence (patience sorting).
int is_length(const std::vector<int>& word);
inline int is_length(const Permutation& w) { return is_length(w.word()); }

/// Insertion and recording tableaux of row insertion.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w);

/// Shape of the RSK tableaux.
Partition greene_shape(const Permutation& w);

/// Largest union of k increasing subsequences, by DP over the minimum
/// number of increasing subsequences covering each subset. n <= 10.
int greene_bruteforce(const Permutation& w, int k);

/// E(n) = (1/n!) sum_{lambda |- n} lambda_1 (f^lambda)^2. 1 <= n <= 60.
mpq_class expected_is_exact(int n);

/// Average of is_length over all of S_n. n <= 9.
mpq_class expected_is_bruteforce(int n);

/// Power series with rational coefficients truncated after x^order.
class TruncSeries {
public:
    explicit TruncSeries(int order) : coef_(static_cast<std::size_t>(order) + 1) {}
    int order() const noexcept { return static_cast<int>(coef_.size()) - 1; }
    const mpq_class& operator[](int i) const { return coef_.at(static_cast<std::size_t>(i)); }
    mpq_class& operator[](int i) { return coef_.at(static_cast<std::size_t>(i)); }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    /// Throws std::domain_error when the constant term is zero.
    TruncSeries inverse() const;

private:
    std::vector<mpq_class> coef_;
};

/// B_i(x) = sum_n x^{2n+i} / (n! (n+i)!).
TruncSeries bessel_series(int i, int order);

struct GesselResult {
    TruncSeries series;
    std::vector<mpz_class> counts;  // u_k(0..order/2)
};

/// det(B_{|i-j|}(x))_{k x k} truncated at x^order, with u_k(n) = n!^2 [x^{2n}].
/// Throws std::invalid_argument unless k >= 1 and order is even and
/// nonnegative, and std::logic_error if an extracted count is not a
/// nonnegative integer.
GesselResult gessel_series(int k, int order);

/// Permutations of n with is_length <= k by enumeration. n <= 9.
mpz_class uk_bruteforce(int k, int n);

/// (1/((n+1)^2 (n+2))) sum_j C(2j,j) C(n+1,j+1) C(n+2,j+1); `as_printed`
/// uses C(n+2,j+2) in the last factor instead.
mpq_class u3_closed_form(int n, bool as_printed = false);

/// chi = (is - 2 sqrt(n)) / n^{1/6}.
double chi_statistic(int is, int n);

/// Uniform permutation of 1..n from a seed and sample index; the same pair
/// always gives the same permutation.
std::vector<int> random_permutation(int n, std::uint64_t seed, std::uint64_t index);

/// chi_n of `samples` random permutations, sample i drawn from (seed, i).
/// Output is identical for every thread count.
std::vector<double> sample_chi_n(int n, long samples, std::uint64_t seed, int threads = 1);

/// chi_n over every permutation of S_n in lexicographic order. n <= 9.
std::vector<double> chi_all_permutations(int n);

} // namespace algcomb
