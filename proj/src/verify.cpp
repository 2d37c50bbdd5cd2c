#include "algcomb/verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "algcomb/apolar.hpp"
#include "algcomb/diagcoinv.hpp"
#include "algcomb/hall.hpp"
#include "algcomb/horn.hpp"
#include "algcomb/lis.hpp"
#include "algcomb/symfunc.hpp"
#include "algcomb/tableaux.hpp"
#include "algcomb/tracywidom.hpp"

namespace algcomb {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Documented: return "FAIL-DOCUMENTED";
    }
    return "?";
}

CheckStatus CriterionResult::status() const {
    CheckStatus s = CheckStatus::Pass;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
        if (c.status == CheckStatus::Documented) s = CheckStatus::Documented;
    }
    return s;
}

bool VerifyReport::ok() const {
    for (const auto& c : criteria)
        if (c.status() == CheckStatus::Fail) return false;
    return true;
}

namespace {

constexpr double kTwMean = -1.7711;
constexpr double kTwVariance = 0.8132;

struct Checker {
    std::vector<SubCheck> checks;

    void check(bool ok, std::string name, std::string detail = {}) {
        checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    // A miss that matches a recorded discrepancy; anything else is a failure.
    void documented(bool ok, bool explained, std::string name, std::string detail) {
        const CheckStatus s = ok ? CheckStatus::Pass : explained ? CheckStatus::Documented : CheckStatus::Fail;
        checks.push_back({std::move(name), s, std::move(detail)});
    }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

mpq_class coefficient(const SchurExpansion& e, const Partition& lambda) {
    auto it = e.find(lambda);
    return it == e.end() ? mpq_class(0) : it->second;
}

Partition one_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

void criterion_lr(Checker& c, VerifyLevel level) {
    const auto start = std::chrono::steady_clock::now();
    const int bound = level == VerifyLevel::Full ? 8 : 6;
    long pairs = 0, compared = 0, mismatches = 0;
    for (int s = 0; s <= bound; ++s)
        for (int a = 0; a <= s; ++a)
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& nu : enumerate_partitions(s - a)) {
                    const SchurExpansion e = schur_product_expansion(mu, nu);
                    ++pairs;
                    for (const auto& lambda : enumerate_partitions(s)) {
                        ++compared;
                        if (coefficient(e, lambda) != lr_coefficient(mu, nu, lambda)) ++mismatches;
                    }
                }
    c.check(mismatches == 0, "LR rule = Schur product, |mu|+|nu| <= " + str(bound),
            str(pairs) + " pairs, " + str(compared) + " coefficients, " + str(mismatches) + " mismatches");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.check(seconds <= 300, "runtime <= 5 min");
}

void criterion_saturation(Checker& c, VerifyLevel level) {
    const int size = level == VerifyLevel::Full ? 6 : 5, m = level == VerifyLevel::Full ? 4 : 3;
    const SaturationReport r = saturation_scan(size, m);
    c.check(r.violations.empty(), "saturation, |lambda| <= " + str(size) + ", m <= " + str(m),
            str(r.triples_checked) + " triples, " + str(r.violations.size()) + " violations");
}

void criterion_horn(Checker& c, VerifyLevel level) {
    const int box = level == VerifyLevel::Full ? 6 : 4;
    for (int n = 2; n <= 3; ++n) {
        std::vector<Partition> parts;
        for (int s = 0; s <= box * n; ++s)
            for (const auto& p : enumerate_partitions(s, n))
                if (p[0] <= box) parts.push_back(p);
        long triples = 0, feasible = 0, mismatches = 0;
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& g : parts) {
                    ++triples;
                    const bool horn = horn_feasible(SpectrumTriple::from_partitions(a, b, g, n));
                    if (horn) ++feasible;
                    if (horn != hermitian_feasible_integer(a, b, g)) ++mismatches;
                }
        c.check(mismatches == 0, "Horn <=> LR, n = " + str(n) + ", entries <= " + str(box),
                str(triples) + " triples, " + str(feasible) + " feasible, " + str(mismatches) + " mismatches");
    }
}

void criterion_hall(Checker& c, VerifyLevel level) {
    const int bound = level == VerifyLevel::Full ? 5 : 4;
    long compared = 0, exceptions = 0, algebra_mismatches = 0;
    for (int p : {2, 3})
        for (int size = 1; size <= bound; ++size)
            for (const auto& lambda : enumerate_partitions(size)) {
                const auto counts = subgroup_type_counts(lambda, p);
                for (int a = 0; a <= size; ++a)
                    for (const auto& mu : enumerate_partitions(a))
                        for (const auto& nu : enumerate_partitions(size - a)) {
                            auto it = counts.find({mu, nu});
                            const long g = it == counts.end() ? 0 : it->second;
                            ++compared;
                            if ((g != 0) != (lr_coefficient(mu, nu, lambda) != 0)) ++exceptions;
                            if (hall_algebra_value(lambda, mu, nu, p) != g) ++algebra_mismatches;
                        }
            }
    c.check(exceptions == 0, "g != 0 <=> c != 0, |lambda| <= " + str(bound) + ", p in {2,3}",
            str(compared) + " triples per both primes, " + str(exceptions) + " exceptions");
    c.check(algebra_mismatches == 0, "Hall algebra evaluator = subgroup counts", str(algebra_mismatches) + " mismatches");

    const auto base = hall_polynomial_algebraic(Partition{1, 1}, Partition{1}, Partition{1});
    c.check(base.polynomial == QPolynomial({1, 1}), "g^(1,1)_(1),(1)(t) = t + 1");

    long polys = 0, negative = 0;
    int max_degree = 0;
    for (int size = 1; size <= bound; ++size)
        for (const auto& lambda : enumerate_partitions(size))
            for (int a = 0; a <= size; ++a)
                for (const auto& mu : enumerate_partitions(a))
                    for (const auto& nu : enumerate_partitions(size - a)) {
                        if (lr_coefficient(mu, nu, lambda) == 0) continue;
                        const auto g = hall_polynomial_algebraic(lambda, mu, nu).polynomial;
                        ++polys;
                        max_degree = std::max(max_degree, g.degree());
                        if (!maley_positivity(g)) ++negative;
                    }
    c.check(negative == 0, "g(t+1) coefficients nonnegative",
            str(polys) + " polynomials, max degree " + str(max_degree) + ", " + str(negative) + " with a negative coefficient");
}

void criterion_coinvariants(Checker& c, VerifyLevel level) {
    const int dim_bound = level == VerifyLevel::Full ? 6 : 5;
    const int char_bound = level == VerifyLevel::Full ? 5 : 4;
    for (int n = 1; n <= dim_bound; ++n) {
        const GradedSpan span = derivative_span(vandermonde(n));
        const bool dim_ok = span.dimension() == factorial(n);
        std::vector<long> expected;
        const QPolynomial qf = q_factorial(n);
        for (const auto& q : qf.coefficients()) expected.push_back(q.get_si());
        c.check(dim_ok && span.hilbert_series() == expected, "dim dV_" + str(n) + " = " + str(factorial(n)) + " graded by [n]_q!",
                "dim " + str(span.dimension()));
        if (n > char_bound) continue;

        const CharacterTable table = graded_character(span, n);
        const std::vector<mpz_class> total = table.total();
        bool regular = true;
        for (std::size_t k = 0; k < table.classes.size(); ++k) {
            const bool identity = table.classes[k].cycle_type == one_column(n);
            if (total[k] != (identity ? factorial(n) : mpz_class(0))) regular = false;
        }
        c.check(regular, "regular representation, n = " + str(n));

        const auto mult = irreducible_multiplicities(table);
        long cells = 0, bad = 0;
        for (const auto& lambda : enumerate_partitions(n))
            for (int i = 0; i <= n * (n - 1) / 2; ++i) {
                auto it = mult.find({i, 0});
                long m = 0;
                if (it != mult.end() && it->second.count(lambda)) m = it->second.at(lambda);
                ++cells;
                if (m != maj_multiplicity(lambda, i)) ++bad;
            }
        c.check(bad == 0, "MAJ multiplicities, n = " + str(n), str(cells) + " (lambda, degree) pairs, " + str(bad) + " mismatches");
        if (n == 5) {
            const std::map<Partition, long> r3{{Partition{4, 1}, 1}, {Partition{3, 2}, 1}, {Partition{3, 1, 1}, 1}};
            c.check(mult.count({3, 0}) && mult.at({3, 0}) == r3, "R_3 = M41 + M32 + M311 for n = 5");
        }
    }
}

void criterion_nfact(Checker& c, VerifyLevel) {
    for (const auto& mu : enumerate_partitions(5)) {
        const std::size_t dim = derivative_span(gh_determinant(mu), 5).dimension();
        c.check(dim == 120, "dim dD_" + mu.to_string() + " = 120", "dim " + str(dim));
    }
}

void criterion_diagonal(Checker& c, VerifyLevel level) {
    for (int n = 1; n <= 3; ++n) {
        const CoinvariantQuotient q = diagonal_coinvariants(n);
        const long expected = static_cast<long>(std::pow(n + 1, n - 1));
        c.check(q.basis.total() == expected, "total dim R(2), n = " + str(n) + " is " + str(expected), "got " + str(q.basis.total()));
        const long gamma = antiinvariant_dimensions(quotient_character(q)).total;
        c.check(catalan(n) == gamma, "antiinvariant total, n = " + str(n) + " is Catalan " + str(catalan(n)), "got " + str(gamma));
    }
    if (level != VerifyLevel::Full) return;
    const CoinvariantQuotient q = diagonal_coinvariants(4);
    c.check(q.basis.total() == 125, "total dim R(2), n = 4 is 125", "got " + str(q.basis.total()));
    const auto dims = q.basis.dimensions();
    const long d21 = dims.count({2, 1}) ? dims.at({2, 1}) : 0;
    // 2 dim M211 + dim M22 + dim M31 = 2*3 + 2 + 3 = 11.
    c.documented(d21 == 12, d21 == 11, "dim R(2)_{2,1} = 12 (published)",
                 "got " + str(d21) + "; the published decomposition itself has dimension 2*3+2+3 = 11");
    const CharacterTable table = quotient_character(q);
    const auto mult = irreducible_multiplicities(table);
    const std::map<Partition, long> expected{{Partition{2, 1, 1}, 2}, {Partition{2, 2}, 1}, {Partition{3, 1}, 1}};
    c.check(mult.count({2, 1}) && mult.at({2, 1}) == expected, "R(2)_{2,1} = 2 M211 + M22 + M31");
    c.check(antiinvariant_dimensions(table).total == 14, "antiinvariant total, n = 4 is 14");
}

void criterion_lis_exact(Checker& c, VerifyLevel) {
    bool e_ok = true;
    for (int n = 1; n <= 7; ++n) e_ok = e_ok && expected_is_exact(n) == expected_is_bruteforce(n);
    c.check(e_ok, "E(n) hook-sum = brute force, n <= 7", "E(7) = " + expected_is_exact(7).get_str());

    const auto u2 = gessel_series(2, 20).counts;
    bool catalan_ok = true, brute2 = true;
    for (int n = 0; n <= 10; ++n) catalan_ok = catalan_ok && u2[n] == catalan(n);
    for (int n = 0; n <= 8; ++n) brute2 = brute2 && u2[n] == uk_bruteforce(2, n);
    c.check(catalan_ok, "u2(n) = Catalan(n) via Gessel, n <= 10");
    c.check(brute2, "u2(n) = brute force, n <= 8");

    const auto u3 = gessel_series(3, 10).counts;
    const std::vector<long> published{1, 2, 6, 23, 103};
    bool three_way = true;
    std::string values;
    for (int n = 1; n <= 5; ++n) {
        const mpz_class det = u3[n], brute = uk_bruteforce(3, n);
        const mpq_class closed = u3_closed_form(n);
        three_way = three_way && det == published[n - 1] && brute == det && closed == mpq_class(det);
        values += (n > 1 ? "," : "") + det.get_str();
    }
    c.check(three_way, "u3 = 1,2,6,23,103 by determinant, brute force and closed form", "u3(1..5) = " + values);
}

void criterion_tw_constants(Checker& c, VerifyLevel) {
    const auto start = std::chrono::steady_clock::now();
    const PainleveSolution sol = painleve2_hastings_mcleod();
    const TwMoments m = tw_moments(sol);
    const double residual = painleve_residual(sol);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.check(std::fabs(m.mean - kTwMean) <= 1e-3, "mean = -1.7711 +- 1e-3", "mean " + fixed(m.mean, 10));
    c.check(std::fabs(m.variance - kTwVariance) <= 1e-3, "variance = 0.8132 +- 1e-3", "variance " + fixed(m.variance, 10));
    c.check(residual <= 1e-8, "Painleve II residual <= 1e-8", "residual " + str(residual));
    c.check(seconds <= 60, "runtime <= 1 min");
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

void criterion_monte_carlo(Checker& c, VerifyLevel level, int threads) {
    const bool full = level == VerifyLevel::Full;
    const int n = 10000;
    const long samples = full ? 100000 : 10000;
    const auto chi = sample_chi_n(n, samples, 42, threads);
    const double mean = mean_of(chi);
    // E(n) = 2 sqrt(n) - 1.7711 n^{1/6} + 1/2 + o(1), so the finite-n mean
    // sits about n^{-1/6}/2 above the limit.
    const double scaled_offset = (mean - kTwMean) * std::pow(n, 1.0 / 6.0);
    c.documented(std::fabs(mean - kTwMean) <= 0.1, std::fabs(scaled_offset - 0.5) <= 0.1,
                 "chi_n mean within 0.1 of -1.7711 (n = " + str(n) + ", " + str(samples) + " samples)",
                 "mean " + fixed(mean) + ", (mean + 1.7711) n^{1/6} = " + fixed(scaled_offset, 3));

    const PainleveSolution sol = painleve2_hastings_mcleod();
    auto cdf = [&](double t) { return tw_cdf_at(sol, t); };
    c.check(true, "chi_n vs F reported", "KS " + fixed(ks_distance(chi, cdf), 4));

    const int gue_n = full ? 200 : 100;
    const long gue_samples = full ? 2000 : 1000;
    const auto alpha = gue_scaled_eigenvalue(gue_n, gue_samples, 7, 1, threads);
    const double ks = ks_distance(alpha, cdf);
    c.check(ks <= 0.08, "GUE KS <= 0.08 (n = " + str(gue_n) + ", " + str(gue_samples) + " samples)",
            "KS " + fixed(ks, 4) + ", mean " + fixed(mean_of(alpha), 4));
}

void properties_tableaux(Checker& c, bool full) {
    bool ok = true;
    for (int n = 1; n <= (full ? 12 : 9); ++n) {
        mpz_class sum = 0;
        QPolynomial maj_sum;
        for (const auto& lambda : enumerate_partitions(n)) {
            const mpz_class f = count_syt(lambda);
            sum += f * f;
            if (n <= 7) {
                ok = ok && static_cast<long>(enumerate_syt(lambda).size()) == f;
                std::vector<mpz_class> scale{f};
                maj_sum = maj_sum + maj_generating_function(lambda) * QPolynomial(scale);
            }
        }
        ok = ok && sum == factorial(n);
        if (n <= 7) ok = ok && maj_sum == q_factorial(n);
    }
    c.check(ok, "tableaux: hook formula = enumeration, sum f^2 = n!, sum f maj = [n]_q!");
}

void properties_symfunc(Checker& c, bool full) {
    bool ok = true;
    const int bound = full ? 7 : 5;
    for (int n = 1; n <= bound; ++n)
        for (const auto& lambda : enumerate_partitions(n)) ok = ok && kostka(lambda, one_column(n)) == count_syt(lambda);
    for (int s = 0; s <= bound - 1; ++s)
        for (int a = 0; a <= s; ++a)
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& nu : enumerate_partitions(s - a))
                    for (const auto& lambda : enumerate_partitions(s)) {
                        const mpz_class v = lr_coefficient(mu, nu, lambda);
                        ok = ok && v == lr_coefficient(nu, mu, lambda) &&
                             v == lr_coefficient(mu.conjugate(), nu.conjugate(), lambda.conjugate());
                    }
    c.check(ok, "symfunc: K(lambda, 1^n) = f^lambda, LR symmetric and conjugation invariant");
}

void properties_hall(Checker& c, bool full) {
    bool ok = true;
    for (int p : {2, 3})
        for (int size = 1; size <= (full ? 4 : 3); ++size)
            for (const auto& lambda : enumerate_partitions(size)) {
                const AbelianPGroup g(p, lambda);
                const auto counts = subgroup_type_counts(lambda, p);
                long total = 0;
                for (const auto& [types, k] : counts) {
                    total += k;
                    auto dual = counts.find({types.second, types.first});
                    ok = ok && dual != counts.end() && dual->second == k;
                }
                ok = ok && total == static_cast<long>(enumerate_subgroups(g).size());
            }
    c.check(ok, "hall: sum of g = number of subgroups, g(mu,nu) = g(nu,mu)");
}

void properties_apolar(Checker& c, bool full) {
    bool ok = true;
    for (int n = 1; n <= (full ? 4 : 3); ++n) {
        ok = ok && derivative_span(vandermonde(n)).closed_under_derivatives();
        for (const auto& mu : enumerate_partitions(n)) ok = ok && derivative_span(gh_determinant(mu), n).closed_under_derivatives();
    }
    for (int n = 1; n <= (full ? 7 : 5); ++n) {
        const auto classes = conjugacy_classes(n);
        const auto parts = enumerate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                mpz_class s = 0;
                for (const auto& k : classes) s += k.size * mn_character(a, k.cycle_type) * mn_character(b, k.cycle_type);
                ok = ok && s == (a == b ? factorial(n) : mpz_class(0));
            }
    }
    c.check(ok, "apolar: spans closed under derivatives, character orthogonality");
}

void properties_diagcoinv(Checker& c, bool) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        const auto dims = bigraded_dimensions(n);
        for (const auto& [bd, d] : dims) {
            auto it = dims.find({bd.second, bd.first});
            ok = ok && it != dims.end() && it->second == d;
        }
        const CoinvariantQuotient q = classical_coinvariants(n);
        ok = ok && q.basis.total() == factorial(n);
    }
    for (int n = 0; n <= 6; ++n) ok = ok && count_parking_functions(n) == count_parking_functions_brute(n);
    c.check(ok, "diagcoinv: dim(i,j) = dim(j,i), single-set quotient has n! monomials, parking counts");
}

void properties_lis(Checker& c, bool full, int threads) {
    bool ok = true;
    for (int n = 1; n <= (full ? 6 : 5); ++n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        do {
            const Permutation perm(w);
            const Partition shape = greene_shape(perm);
            const auto [p, q] = rsk(perm);
            ok = ok && p.shape() == q.shape() && shape[0] == is_length(perm);
            int partial = 0;
            for (int k = 1; k <= shape.length(); ++k) {
                partial += shape[k - 1];
                ok = ok && greene_bruteforce(perm, k) == partial;
            }
        } while (std::next_permutation(w.begin(), w.end()));
    }
    ok = ok && sample_chi_n(500, 64, 3, 1) == sample_chi_n(500, 64, 3, std::max(2, threads));
    c.check(ok, "lis: Greene shape = RSK shape, sampling independent of thread count");
}

void properties_tracywidom(Checker& c, bool full, int threads) {
    const PainleveSolution sol = painleve2_hastings_mcleod();
    bool ok = true;
    try {
        tw_cdf(sol, -8, 8, 1.0 / 128);
    } catch (const std::runtime_error&) {
        ok = false;
    }
    const int points = full ? 10000 : 2000;
    std::vector<double> sample;
    for (int i = 0; i < points; ++i) sample.push_back(tw_quantile(sol, (i + 0.5) / points));
    const double self_ks = ks_distance(sample, [&](double t) { return tw_cdf_at(sol, t); });
    ok = ok && self_ks <= 0.02;
    for (int n : {5, 40}) {
        const auto a = gue_matrix(n, 3, static_cast<std::uint64_t>(n));
        const auto ev = hermitian_eigenvalues(a, n);
        double trace = 0, trace2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) trace += a[static_cast<std::size_t>(i) * n + i].real();
                trace2 += std::norm(a[static_cast<std::size_t>(i) * n + j]);
            }
        double s = 0, s2 = 0;
        for (double x : ev) {
            s += x;
            s2 += x * x;
        }
        ok = ok && std::fabs(s - trace) <= 1e-9 * n && std::fabs(s2 - trace2) <= 1e-9 * trace2;
        ok = ok && std::is_sorted(ev.rbegin(), ev.rend());
    }
    ok = ok && gue_scaled_eigenvalue(30, 16, 5, 1, 1) == gue_scaled_eigenvalue(30, 16, 5, 1, std::max(2, threads));
    c.check(ok, "tracywidom: F monotone, quantile sample KS <= 0.02, spectra keep tr M and tr M^2",
            "self KS " + fixed(self_ks, 5));
}

void criterion_properties(Checker& c, VerifyLevel level, int threads) {
    const bool full = level == VerifyLevel::Full;
    properties_tableaux(c, full);
    properties_symfunc(c, full);
    properties_hall(c, full);
    properties_apolar(c, full);
    properties_diagcoinv(c, full);
    properties_lis(c, full, threads);
    properties_tracywidom(c, full, threads);
}

const char* kTitles[kCriterionCount] = {
    "LR dual-algorithm agreement",
    "saturation scan",
    "Horn inequalities vs LR",
    "Hall polynomials",
    "coinvariants and the MAJ theorem",
    "n! theorem",
    "diagonal coinvariants",
    "LIS exact layer",
    "Tracy-Widom constants",
    "Monte Carlo bridge",
    "property suites",
};

} // namespace

CriterionResult run_criterion(int id, VerifyLevel level, int threads) {
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("run_criterion: id must be in 1..11");
    CriterionResult result;
    result.id = id;
    result.title = kTitles[id - 1];
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1: criterion_lr(c, level); break;
        case 2: criterion_saturation(c, level); break;
        case 3: criterion_horn(c, level); break;
        case 4: criterion_hall(c, level); break;
        case 5: criterion_coinvariants(c, level); break;
        case 6: criterion_nfact(c, level); break;
        case 7: criterion_diagonal(c, level); break;
        case 8: criterion_lis_exact(c, level); break;
        case 9: criterion_tw_constants(c, level); break;
        case 10: criterion_monte_carlo(c, level, threads); break;
        case 11: criterion_properties(c, level, threads); break;
        }
    } catch (const std::exception& e) {
        c.check(false, "exception", e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.checks = std::move(c.checks);
    return result;
}

VerifyReport verify_all(VerifyLevel level, int threads, const std::function<void(const CriterionResult&)>& on_result) {
    VerifyReport report;
    report.level = level;
    for (int id = 1; id <= kCriterionCount; ++id) {
        report.criteria.push_back(run_criterion(id, level, threads));
        if (on_result) on_result(report.criteria.back());
    }
    return report;
}

} // namespace algcomb
