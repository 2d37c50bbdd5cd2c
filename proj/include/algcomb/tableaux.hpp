#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace algcomb {

/// Integer partition stored without trailing zeros.
///
/// Construction normalizes away zero parts and rejects any sequence that is
/// not weakly decreasing or contains negative entries.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    Partition scaled(int m) const;
    /// True when every part of *this fits inside `outer`.
    bool contained_in(const Partition& outer) const noexcept;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Parses "3,2,1" (or "" / "0" for the empty partition).
Partition parse_partition(const std::string& text);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct CellCoord {
    int row_index = 0;
    int col_index = 0;
    auto operator<=>(const CellCoord&) const = default;
};

/// Standard Young tableau; rows[i][j] is the entry in row i, column j.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    Partition shape() const;
    int size() const noexcept;
    /// Row index (0-based) holding the value v.
    int row_of(int v) const;

    bool operator==(const StandardTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// True when rows/columns increase strictly and entries are exactly 1..n.
bool is_standard(const std::vector<std::vector<int>>& rows);

/// Univariate polynomial in q with integer coefficients, coefficients_[i] at q^i.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<mpz_class> coefficients);

    const std::vector<mpz_class>& coefficients() const noexcept { return coefficients_; }
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    mpz_class coefficient(int i) const;
    mpz_class evaluate(const mpz_class& q) const;

    QPolynomial operator*(const QPolynomial& other) const;
    QPolynomial operator+(const QPolynomial& other) const;
    bool operator==(const QPolynomial&) const = default;

private:
    void trim();
    std::vector<mpz_class> coefficients_;
};

/// All partitions of n in reverse lexicographic order, optionally capped in length.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length = std::nullopt);

/// Hook length of the cell (row, col) of lambda.
int hook_length(const Partition& lambda, int row, int col);

/// f^lambda via the hook-length product.
mpz_class count_syt(const Partition& lambda);

std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

/// Sum of i such that i+1 lies in a strictly lower row than i.
int major_index(const StandardTableau& t);

int maj_multiplicity(const Partition& lambda, int i);

/// Generating polynomial sum_T q^{MAJ(T)} over SYT of shape lambda.
QPolynomial maj_generating_function(const Partition& lambda);

/// (1+q)(1+q+q^2)...(1+q+...+q^{n-1}).
QPolynomial q_factorial(int n);

/// Cells of the diagram in row-major order.
std::vector<CellCoord> diagram_coords(const Partition& mu);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

} // namespace algcomb
