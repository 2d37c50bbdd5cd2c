#include "algcomb/hall.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace algcomb {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : b) h = (h ^ w) * 1099511628211ULL ^ (w >> 29);
        return h;
    }
};

inline bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1ULL; }
inline void set(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }

long ipow(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

int log_p(long value, int p) {
    int k = 0;
    while (value > 1) {
        if (value % p != 0) throw std::logic_error("log_p: not a power of p");
        value /= p;
        ++k;
    }
    return k;
}

// Partition whose conjugate is the rank sequence r_0 >= r_1 >= ...
Partition from_ranks(std::vector<int> ranks) {
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return Partition(std::move(ranks)).conjugate();
}

Bits to_bits(const std::vector<int>& elements, int order) {
    Bits b((order + 63) / 64, 0);
    for (int e : elements) set(b, e);
    return b;
}

std::vector<int> multiples(const AbelianPGroup& g, const std::vector<int>& elements, long factor) {
    Bits seen((g.order() + 63) / 64, 0);
    std::vector<int> out;
    for (int e : elements) {
        const int m = g.scale(e, factor);
        if (!test(seen, m)) {
            set(seen, m);
            out.push_back(m);
        }
    }
    return out;
}

Partition quotient_type(const AbelianPGroup& g, const Bits& h_bits, const std::vector<std::vector<int>>& pk_g) {
    // |p^k (G/H)| = |p^k G + H| / |H|, and |S + H| = |S| |H| / |S ∩ H|.
    std::vector<long> sizes;
    for (const auto& s : pk_g) {
        long inter = 0;
        for (int e : s) inter += test(h_bits, e);
        sizes.push_back(static_cast<long>(s.size()) / inter);
    }
    std::vector<int> ranks;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) ranks.push_back(log_p(sizes[k] / sizes[k + 1], g.p()));
    return from_ranks(std::move(ranks));
}

} // namespace

AbelianPGroup::AbelianPGroup(int p, Partition type, long cap) : p_(p), type_(std::move(type)) {
    if (p < 2) throw std::invalid_argument("AbelianPGroup: p must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("AbelianPGroup: p must be a prime");
    long order = 1;
    for (int part : type_.parts()) {
        const long m = ipow(p, part);
        if (m > cap || order > cap / m)
            throw ResourceCapError("AbelianPGroup: group of type " + type_.to_string() + " at p = " +
                                   std::to_string(p) + " exceeds the order cap " + std::to_string(cap));
        moduli_.push_back(static_cast<int>(m));
        strides_.push_back(static_cast<int>(order));
        order *= m;
    }
    if (order > 65535) throw ResourceCapError("AbelianPGroup: group orders above 65535 are not supported");
    order_ = static_cast<int>(order);
    const std::size_t rank = moduli_.size();
    digits_.resize(static_cast<std::size_t>(order_) * rank);
    for (int a = 0; a < order_; ++a)
        for (std::size_t i = 0; i < rank; ++i)
            digits_[a * rank + i] = static_cast<std::uint16_t>((a / strides_[i]) % moduli_[i]);
}

int AbelianPGroup::add(int a, int b) const noexcept {
    const std::size_t rank = moduli_.size();
    int r = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        int d = digits_[a * rank + i] + digits_[b * rank + i];
        if (d >= moduli_[i]) d -= moduli_[i];
        r += d * strides_[i];
    }
    return r;
}

int AbelianPGroup::scale(int a, long k) const noexcept {
    const std::size_t rank = moduli_.size();
    int r = 0;
    for (std::size_t i = 0; i < rank; ++i) r += static_cast<int>((digits_[a * rank + i] * (k % moduli_[i])) % moduli_[i]) * strides_[i];
    return r;
}

std::vector<int> AbelianPGroup::components(int a) const {
    const std::size_t rank = moduli_.size();
    return std::vector<int>(digits_.begin() + a * rank, digits_.begin() + (a + 1) * rank);
}

Partition subgroup_type(const AbelianPGroup& g, const std::vector<int>& elements) {
    std::vector<int> ranks;
    std::vector<int> current = elements;
    while (current.size() > 1) {
        std::vector<int> next = multiples(g, current, g.p());
        ranks.push_back(log_p(static_cast<long>(current.size() / next.size()), g.p()));
        current = std::move(next);
    }
    return from_ranks(std::move(ranks));
}

std::vector<SubgroupRecord> enumerate_subgroups(const AbelianPGroup& g) {
    const int order = g.order();
    const int p = g.p();

    std::vector<int> all(order);
    for (int i = 0; i < order; ++i) all[i] = i;
    std::vector<std::vector<int>> pk_g{all};
    while (pk_g.back().size() > 1) pk_g.push_back(multiples(g, pk_g.back(), p));

    std::vector<SubgroupRecord> out;
    std::unordered_map<Bits, std::size_t, BitsHash> index;
    std::deque<std::size_t> queue;

    auto record = [&](std::vector<int> elements, Bits bits) {
        std::sort(elements.begin(), elements.end());
        SubgroupRecord rec;
        rec.type = subgroup_type(g, elements);
        rec.quotient_type = quotient_type(g, bits, pk_g);
        rec.elements = std::move(elements);
        index.emplace(std::move(bits), out.size());
        queue.push_back(out.size());
        out.push_back(std::move(rec));
    };
    record({0}, to_bits({0}, order));

    // Every subgroup is reached from a subgroup of index p by adjoining one
    // element g with p*g already inside; distinct extensions are found by
    // skipping candidates already covered by an earlier extension.
    while (!queue.empty()) {
        const std::size_t hi = queue.front();
        queue.pop_front();
        const std::vector<int> h = out[hi].elements;
        const Bits h_bits = to_bits(h, order);
        Bits covered = h_bits;
        for (int cand = 0; cand < order; ++cand) {
            if (test(covered, cand)) continue;
            if (!test(h_bits, g.scale(cand, p))) continue;
            std::vector<int> k_elems;
            k_elems.reserve(h.size() * p);
            Bits k_bits((order + 63) / 64, 0);
            int shift = 0;
            for (int step = 0; step < p; ++step) {
                for (int e : h) {
                    const int s = g.add(e, shift);
                    set(k_bits, s);
                    set(covered, s);
                    k_elems.push_back(s);
                }
                shift = g.add(shift, cand);
            }
            if (!index.count(k_bits)) record(std::move(k_elems), std::move(k_bits));
        }
    }
    return out;
}

std::map<std::pair<Partition, Partition>, long> subgroup_type_counts(const Partition& lambda, int p, long cap) {
    const AbelianPGroup g(p, lambda, cap);
    std::map<std::pair<Partition, Partition>, long> counts;
    for (const auto& s : enumerate_subgroups(g)) ++counts[{s.type, s.quotient_type}];
    return counts;
}

long hall_count(const Partition& lambda, const Partition& mu, const Partition& nu, int p, long cap) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    const auto counts = subgroup_type_counts(lambda, p, cap);
    auto it = counts.find({mu, nu});
    return it == counts.end() ? 0 : it->second;
}

namespace {

// Monomial-basis coefficients of the interpolant through (xs[i], ys[i]).
std::vector<mpq_class> interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> dd = ys;  // Newton divided differences
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<mpq_class> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs = coeffs * (t - xs[k]) + dd[k]
        std::vector<mpq_class> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs[i] == 0) continue;
            if (i + 1 < n) next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * xs[k];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

mpq_class eval(const std::vector<mpq_class>& coeffs, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

} // namespace

HallPolynomialResult hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu,
                                     const std::vector<int>& primes, long cap) {
    if (primes.size() < 2) throw std::invalid_argument("hall_polynomial: at least two primes are required");
    HallPolynomialResult result;
    std::vector<mpq_class> xs, ys;
    for (int p : primes) {
        const long count = hall_count(lambda, mu, nu, p, cap);
        result.counts.emplace_back(p, count);
        xs.emplace_back(p);
        ys.emplace_back(count);
    }
    for (std::size_t points = 1; points < xs.size(); ++points) {
        const std::vector<mpq_class> fit = interpolate({xs.begin(), xs.begin() + points}, {ys.begin(), ys.begin() + points});
        bool agrees = true;
        for (std::size_t i = points; i < xs.size(); ++i)
            if (eval(fit, xs[i]) != ys[i]) agrees = false;
        if (!agrees) continue;
        std::vector<mpz_class> ints;
        for (const auto& c : fit) {
            if (c.get_den() != 1)
                throw std::logic_error("hall_polynomial: interpolant for " + lambda.to_string() + "," + mu.to_string() +
                                       "," + nu.to_string() + " has non-integer coefficients");
            ints.push_back(c.get_num());
        }
        result.polynomial = IntPolynomial(std::move(ints));
        result.held_out_prime = primes[points];
        return result;
    }
    throw std::runtime_error("hall_polynomial: not enough primes to confirm the interpolation degree for " +
                             lambda.to_string() + "," + mu.to_string() + "," + nu.to_string());
}

IntPolynomial shift_by_one(const IntPolynomial& g) {
    const auto& c = g.coefficients();
    std::vector<mpz_class> out(c.size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j) out[j] += c[k] * binomial(static_cast<int>(k), static_cast<int>(j));
    return IntPolynomial(std::move(out));
}

bool maley_positivity(const IntPolynomial& g) {
    const auto shifted = shift_by_one(g);
    return std::all_of(shifted.coefficients().begin(), shifted.coefficients().end(),
                       [](const mpz_class& c) { return c >= 0; });
}

namespace {

using HallElement = std::map<Partition, mpq_class>;

long n_statistic(const Partition& lambda) {
    long n = 0;
    for (int i = 0; i < lambda.length(); ++i) n += static_cast<long>(i) * lambda[i];
    return n;
}

mpq_class power(const mpq_class& base, long e) {
    mpq_class r = 1, b = base;
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    for (; e > 0; --e) r *= b;
    return r;
}

mpq_class gaussian_binomial(int a, int b, const mpq_class& s) {
    if (b < 0 || b > a) return 0;
    mpq_class r = 1;
    for (int k = 1; k <= b; ++k) r *= (1 - power(s, a - b + k)) / (1 - power(s, k));
    return r;
}

class HallAlgebra {
public:
    explicit HallAlgebra(long t) : t_(t) {}

    // u_mu * u_{(1^m)}
    HallElement times_column(const HallElement& x, int m) const {
        HallElement out;
        for (const auto& [mu, c] : x) {
            const int rows = mu.length() + m;
            for (long mask = 0; mask < (1L << rows); ++mask) {
                if (__builtin_popcountl(mask) != m) continue;
                std::vector<int> parts(rows);
                for (int i = 0; i < rows; ++i) parts[i] = mu[i] + ((mask >> i) & 1);
                if (!std::is_sorted(parts.rbegin(), parts.rend())) continue;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                const Partition lambda(std::move(parts));
                out[lambda] += c * column_coefficient(lambda, mu, m);
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    const HallElement& product(const Partition& mu, const Partition& nu) {
        const auto key = std::make_pair(mu, nu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        HallElement result{{mu, 1}};
        if (nu.size() > 0) {
            // u_{(1^{nu'_1})} u_{(1^{nu'_2})} ... = u_nu + (terms lex-smaller than nu)
            HallElement lead{{Partition{}, 1}};
            const Partition columns = nu.conjugate();
            for (int col : columns.parts()) {
                result = times_column(result, col);
                lead = times_column(lead, col);
            }
            if (lead[nu] != 1) throw std::logic_error("hall algebra: column product is not unitriangular");
            for (const auto& [rho, a] : lead) {
                if (rho == nu) continue;
                if (rho > nu) throw std::logic_error("hall algebra: column product has a lex-larger term");
                for (const auto& [lambda, c] : product(mu, rho)) result[lambda] -= a * c;
            }
            std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    mpq_class column_coefficient(const Partition& lambda, const Partition& mu, int m) const {
        const Partition lc = lambda.conjugate(), mc = mu.conjugate();
        mpq_class r = power(mpq_class(t_), n_statistic(lambda) - n_statistic(mu) - static_cast<long>(m) * (m - 1) / 2);
        const mpq_class s = mpq_class(1) / t_;
        for (int i = 0; i < lc.length(); ++i) r *= gaussian_binomial(lc[i] - lc[i + 1], lc[i] - mc[i], s);
        return r;
    }

    long t_;
    std::map<std::pair<Partition, Partition>, HallElement> memo_;
};

} // namespace

mpq_class hall_algebra_value(const Partition& lambda, const Partition& mu, const Partition& nu, long t) {
    if (t < 2) throw std::invalid_argument("hall_algebra_value: t must be at least 2");
    if (lambda.size() != mu.size() + nu.size()) return 0;
    HallAlgebra algebra(t);
    const HallElement& prod = algebra.product(mu, nu);
    auto it = prod.find(lambda);
    return it == prod.end() ? mpq_class(0) : it->second;
}

HallPolynomialResult hall_polynomial_algebraic(const Partition& lambda, const Partition& mu, const Partition& nu,
                                               int checks) {
    if (checks < 1) throw std::invalid_argument("hall_polynomial_algebraic: need at least one check point");
    HallPolynomialResult result;
    std::vector<mpq_class> xs, ys;
    auto value_at = [&](std::size_t i) {
        while (xs.size() <= i) {
            const long t = 2 + static_cast<long>(xs.size());
            const mpq_class v = hall_algebra_value(lambda, mu, nu, t);
            if (v.get_den() != 1 || v < 0) throw std::logic_error("hall algebra: non-integral count at t=" + std::to_string(t));
            xs.emplace_back(t);
            ys.push_back(v);
            result.counts.emplace_back(static_cast<int>(t), v.get_num().get_si());
        }
        return ys[i];
    };
    for (std::size_t points = 1; points <= 64; ++points) {
        for (std::size_t i = 0; i < points; ++i) value_at(i);
        const std::vector<mpq_class> fit = interpolate({xs.begin(), xs.begin() + points}, {ys.begin(), ys.begin() + points});
        bool agrees = true;
        for (int k = 0; k < checks && agrees; ++k)
            agrees = eval(fit, xs[0] + static_cast<long>(points + k)) == value_at(points + k);
        if (!agrees) continue;
        std::vector<mpz_class> ints;
        for (const auto& c : fit) {
            if (c.get_den() != 1) throw std::logic_error("hall_polynomial_algebraic: non-integer coefficients");
            ints.push_back(c.get_num());
        }
        result.polynomial = IntPolynomial(std::move(ints));
        result.held_out_prime = static_cast<int>(2 + points);
        return result;
    }
    throw std::runtime_error("hall_polynomial_algebraic: degree exceeds 63");
}

} // namespace algcomb
