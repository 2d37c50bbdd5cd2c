#include "algcomb/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace algcomb {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[j];
    return Partition(std::move(conj));
}

Partition Partition::scaled(int m) const {
    std::vector<int> out = parts_;
    for (int& p : out) p *= m;
    return Partition(std::move(out));
}

bool Partition::contained_in(const Partition& outer) const noexcept {
    if (length() > outer.length()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > outer[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad partition entry '" + token + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
}

// ---------------------------------------------------------------------------

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (!is_standard(rows_)) throw std::invalid_argument("not a standard Young tableau");
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int StandardTableau::size() const noexcept {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

int StandardTableau::row_of(int v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (std::find(rows_[i].begin(), rows_[i].end(), v) != rows_[i].end()) return static_cast<int>(i);
    throw std::out_of_range("value not present in tableau");
}

bool is_standard(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
        n += static_cast<int>(rows[i].size());
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (j > 0 && rows[i][j - 1] >= v) return false;
            if (i > 0 && rows[i - 1][j] >= v) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

QPolynomial::QPolynomial(std::vector<mpz_class> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

void QPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

mpz_class QPolynomial::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coefficients_.size())) return 0;
    return coefficients_[i];
}

mpz_class QPolynomial::evaluate(const mpz_class& q) const {
    mpz_class acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
    if (coefficients_.empty() || other.coefficients_.empty()) return {};
    std::vector<mpz_class> out(coefficients_.size() + other.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            out[i + j] += coefficients_[i] * other.coefficients_[j];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
    std::vector<mpz_class> out(std::max(coefficients_.size(), other.coefficients_.size()), 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] += other.coefficients_[i];
    return QPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_length) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    const int cap = max_length.value_or(n);
    // Largest first part first gives reverse lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) >= cap) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int hook_length(const Partition& lambda, int row, int col) {
    const Partition conj = lambda.conjugate();
    return (lambda[row] - col - 1) + (conj[col] - row - 1) + 1;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class count_syt(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(lambda.length());
    // Place 1..n in turn into any cell that keeps the filled region a partition.
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 0; i < lambda.length(); ++i) {
            const int filled = static_cast<int>(rows[i].size());
            if (filled >= lambda[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= filled) continue;
            rows[i].push_back(next);
            rec(next + 1);
            rows[i].pop_back();
        }
    };
    rec(1);
    return out;
}

int major_index(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row(n + 1);
    for (std::size_t i = 0; i < t.rows().size(); ++i)
        for (int v : t.rows()[i]) row[v] = static_cast<int>(i);
    int maj = 0;
    for (int i = 1; i < n; ++i)
        if (row[i + 1] > row[i]) maj += i;
    return maj;
}

int maj_multiplicity(const Partition& lambda, int i) {
    int count = 0;
    for (const auto& t : enumerate_syt(lambda))
        if (major_index(t) == i) ++count;
    return count;
}

QPolynomial maj_generating_function(const Partition& lambda) {
    std::vector<mpz_class> coeffs;
    for (const auto& t : enumerate_syt(lambda)) {
        const int m = major_index(t);
        if (static_cast<int>(coeffs.size()) <= m) coeffs.resize(m + 1, 0);
        coeffs[m] += 1;
    }
    return QPolynomial(std::move(coeffs));
}

QPolynomial q_factorial(int n) {
    if (n < 1) throw std::invalid_argument("q_factorial: n must be positive");
    QPolynomial acc(std::vector<mpz_class>{1});
    for (int k = 2; k <= n; ++k) acc = acc * QPolynomial(std::vector<mpz_class>(k, 1));
    return acc;
}

std::vector<CellCoord> diagram_coords(const Partition& mu) {
    std::vector<CellCoord> cells;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.push_back({i, j});
    return cells;
}

} // namespace algcomb
