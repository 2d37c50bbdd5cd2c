#include "algcomb/lis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "algcomb/parallel.hpp"

namespace algcomb {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int a : word_) {
        if (a < 1 || a > static_cast<int>(word_.size()) || seen[a])
            throw std::invalid_argument("Permutation: word is not a bijection on 1..n");
        seen[a] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_digits(const std::string& digits) {
    std::vector<int> w;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("Permutation: expected digits 1-9");
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

int Permutation::major_index() const {
    int maj = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (word_[i] > word_[i + 1]) maj += i + 1;
    return maj;
}

int is_length(const std::vector<int>& word) {
    std::vector<int> tops;  // tops[k]: smallest tail of an increasing run of length k+1
    for (int a : word) {
        auto it = std::lower_bound(tops.begin(), tops.end(), a);
        if (it == tops.end())
            tops.push_back(a);
        else
            *it = a;
    }
    return static_cast<int>(tops.size());
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int i = 0; i < w.size(); ++i) {
        int x = w[i];
        std::size_t row = 0;
        while (true) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({i + 1});
                break;
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(i + 1);
                break;
            }
            std::swap(x, *it);
            ++row;
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Partition greene_shape(const Permutation& w) { return rsk(w).first.shape(); }

int greene_bruteforce(const Permutation& w, int k) {
    const int n = w.size();
    if (n > 10) throw std::invalid_argument("greene_bruteforce: n must be at most 10");
    if (k < 0) throw std::invalid_argument("greene_bruteforce: k must be nonnegative");
    const int full = 1 << n;
    std::vector<bool> increasing(full, true);
    for (int s = 1; s < full; ++s) {
        int last = 0;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1) {
                if (w[i] < last) {
                    increasing[s] = false;
                    break;
                }
                last = w[i];
            }
    }
    // cover[s]: fewest increasing subsequences whose union is s. The
    // subsequence through the lowest position of s is chosen first.
    std::vector<int> cover(full, n + 1);
    cover[0] = 0;
    for (int s = 1; s < full; ++s) {
        const int low = s & -s;
        const int rest = s ^ low;
        for (int t = rest;; t = (t - 1) & rest) {
            const int piece = t | low;
            if (increasing[piece]) cover[s] = std::min(cover[s], 1 + cover[s ^ piece]);
            if (t == 0) break;
        }
    }
    int best = 0;
    for (int s = 0; s < full; ++s)
        if (cover[s] <= k) best = std::max(best, __builtin_popcount(static_cast<unsigned>(s)));
    return best;
}

mpq_class expected_is_exact(int n) {
    if (n < 1 || n > 60) throw std::invalid_argument("expected_is_exact: n must be in [1, 60]");
    mpz_class sum = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
        const mpz_class f = count_syt(lambda);
        sum += lambda[0] * f * f;
    }
    mpq_class e(sum, factorial(n));
    e.canonicalize();
    return e;
}

namespace {

template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do f(w);
    while (std::next_permutation(w.begin(), w.end()));
}

} // namespace

mpq_class expected_is_bruteforce(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("expected_is_bruteforce: n must be in [1, 9]");
    long total = 0;
    for_each_permutation(n, [&](const std::vector<int>& w) {
        int best = 0;
        // Every subset, checked directly: no patience sorting involved.
        for (int s = 1; s < (1 << n); ++s) {
            int last = 0, len = 0;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (s >> i & 1) {
                    ok = w[i] > last;
                    last = w[i];
                    ++len;
                }
            if (ok) best = std::max(best, len);
        }
        total += best;
    });
    mpq_class e(total, factorial(n));
    e.canonicalize();
    return e;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
    for (int i = 0; i <= order(); ++i) coef_[i] += o.coef_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
    for (int i = 0; i <= order(); ++i) coef_[i] -= o.coef_[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch");
    TruncSeries c(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coef_[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j)
            if (b.coef_[j] != 0) c.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    return c;
}

TruncSeries TruncSeries::inverse() const {
    if (coef_[0] == 0) throw std::domain_error("TruncSeries: constant term is zero");
    TruncSeries inv(order());
    inv.coef_[0] = 1 / coef_[0];
    for (int n = 1; n <= order(); ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= n; ++i) s += coef_[i] * inv.coef_[n - i];
        inv.coef_[n] = -s * inv.coef_[0];
    }
    return inv;
}

TruncSeries bessel_series(int i, int order) {
    if (i < 0) throw std::invalid_argument("bessel_series: index must be nonnegative");
    TruncSeries b(order);
    for (int n = 0; 2 * n + i <= order; ++n) {
        mpq_class c(1, factorial(n) * factorial(n + i));
        c.canonicalize();
        b[2 * n + i] = c;
    }
    return b;
}

GesselResult gessel_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("gessel_series: k must be positive");
    if (order < 0 || order % 2 != 0) throw std::invalid_argument("gessel_series: order must be even and nonnegative");
    std::vector<TruncSeries> bessel;
    for (int i = 0; i < k; ++i) bessel.push_back(bessel_series(i, order));
    std::vector<std::vector<TruncSeries>> m(k, std::vector<TruncSeries>(k, TruncSeries(order)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = bessel[std::abs(i - j)];

    // Modulo x the matrix is the identity, so every pivot stays invertible.
    TruncSeries det(order);
    det[0] = 1;
    for (int c = 0; c < k; ++c) {
        const TruncSeries inv = m[c][c].inverse();
        det = det * m[c][c];
        for (int r = c + 1; r < k; ++r) {
            const TruncSeries factor = m[r][c] * inv;
            for (int j = c; j < k; ++j) m[r][j] -= factor * m[c][j];
        }
    }

    GesselResult result{det, {}};
    for (int n = 0; 2 * n <= order; ++n) {
        const mpz_class nf = factorial(n);
        const mpq_class u = det[2 * n] * nf * nf;
        if (u.get_den() != 1 || u < 0)
            throw std::logic_error("gessel_series: u_" + std::to_string(k) + "(" + std::to_string(n) + ") is not a nonnegative integer");
        result.counts.push_back(u.get_num());
    }
    return result;
}

mpz_class uk_bruteforce(int k, int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("uk_bruteforce: n must be in [0, 9]");
    long count = 0;
    for_each_permutation(n, [&](const std::vector<int>& w) {
        if (is_length(w) <= k) ++count;
    });
    return count;
}

mpq_class u3_closed_form(int n, bool as_printed) {
    if (n < 0) throw std::invalid_argument("u3_closed_form: n must be nonnegative");
    mpz_class sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += binomial(2 * j, j) * binomial(n + 1, j + 1) * binomial(n + 2, as_printed ? j + 2 : j + 1);
    mpq_class r(sum, mpz_class(n + 1) * (n + 1) * (n + 2));
    r.canonicalize();
    return r;
}

double chi_statistic(int is, int n) {
    return (static_cast<double>(is) - 2.0 * std::sqrt(static_cast<double>(n))) / std::cbrt(std::sqrt(static_cast<double>(n)));
}

std::vector<int> random_permutation(int n, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(w[i], w[pick(rng)]);
    }
    return w;
}

std::vector<double> sample_chi_n(int n, long samples, std::uint64_t seed, int threads) {
    if (n < 1) throw std::invalid_argument("sample_chi_n: n must be positive");
    if (samples < 1) throw std::invalid_argument("sample_chi_n: samples must be positive");
    std::vector<double> out(static_cast<std::size_t>(samples));
    parallel_for(out.size(), threads, [&](std::size_t i) {
        out[i] = chi_statistic(is_length(random_permutation(n, seed, i)), n);
    });
    return out;
}

std::vector<double> chi_all_permutations(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("chi_all_permutations: n must be in [1, 9]");
    std::vector<double> out;
    for_each_permutation(n, [&](const std::vector<int>& w) { out.push_back(chi_statistic(is_length(w), n)); });
    return out;
}

} // namespace algcomb
