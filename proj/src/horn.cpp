#include "algcomb/horn.hpp"

#include <sstream>
#include <stdexcept>

#include "algcomb/symfunc.hpp"

namespace algcomb {

SpectrumTriple SpectrumTriple::from_partitions(const Partition& a, const Partition& b, const Partition& c, int n) {
    if (a.length() > n || b.length() > n || c.length() > n)
        throw std::invalid_argument("SpectrumTriple: partition longer than n");
    SpectrumTriple t;
    for (int i = 0; i < n; ++i) {
        t.alpha.emplace_back(a[i]);
        t.beta.emplace_back(b[i]);
        t.gamma.emplace_back(c[i]);
    }
    return t;
}

std::string HornInequality::to_string() const {
    std::ostringstream os;
    auto side = [&os](const char* name, const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "+" : "") << name << idx[i];
    };
    side("g", K);
    os << " <= ";
    side("a", I);
    os << "+";
    side("b", J);
    return os.str();
}

HornSystem horn_system(int n) {
    HornSystem sys;
    sys.n = n;
    if (n == 2) {
        sys.inequalities = {
            {{1}, {1}, {1}},
            {{2}, {1}, {2}},
            {{1}, {2}, {2}},
        };
    } else if (n == 3) {
        sys.inequalities = {
            {{1}, {1}, {1}},
            {{1}, {2}, {2}},
            {{2}, {1}, {2}},
            {{1}, {3}, {3}},
            {{2}, {2}, {3}},
            {{3}, {1}, {3}},
            {{1, 2}, {1, 2}, {1, 2}},
            {{1, 2}, {1, 3}, {1, 3}},
            {{1, 3}, {1, 2}, {1, 3}},
            {{1, 2}, {2, 3}, {2, 3}},
            {{1, 3}, {1, 3}, {2, 3}},
            {{2, 3}, {1, 2}, {2, 3}},
        };
    } else {
        throw std::domain_error("horn_system: only n = 2 and n = 3 are supported, got n = " + std::to_string(n));
    }
    return sys;
}

namespace {

void require_decreasing(const std::vector<mpq_class>& v, const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) throw std::invalid_argument(std::string("horn_feasible: ") + name + " is not weakly decreasing");
}

} // namespace

bool horn_feasible(const SpectrumTriple& t) {
    const int n = t.n();
    if (static_cast<int>(t.beta.size()) != n || static_cast<int>(t.gamma.size()) != n)
        throw std::invalid_argument("horn_feasible: alpha, beta, gamma must have equal length");
    require_decreasing(t.alpha, "alpha");
    require_decreasing(t.beta, "beta");
    require_decreasing(t.gamma, "gamma");
    const HornSystem sys = horn_system(n);

    mpq_class trace = 0;
    for (int i = 0; i < n; ++i) trace += t.alpha[i] + t.beta[i] - t.gamma[i];
    if (trace != 0) return false;

    for (const auto& ineq : sys.inequalities) {
        mpq_class lhs = 0, rhs = 0;
        for (int k : ineq.K) lhs += t.gamma[k - 1];
        for (int i : ineq.I) rhs += t.alpha[i - 1];
        for (int j : ineq.J) rhs += t.beta[j - 1];
        if (lhs > rhs) return false;
    }
    return true;
}

bool hermitian_feasible_integer(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    return lr_coefficient(alpha, beta, gamma) != 0;
}

SaturationReport saturation_scan(int size_bound, int m_max) {
    SaturationReport report;
    report.size_bound = size_bound;
    report.m_max = m_max;
    for (int d = 0; d <= size_bound; ++d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            for (int a = 0; a <= d; ++a) {
                for (const auto& mu : enumerate_partitions(a)) {
                    if (!mu.contained_in(lambda)) continue;
                    for (const auto& nu : enumerate_partitions(d - a)) {
                        ++report.triples_checked;
                        const mpz_class c = lr_coefficient(mu, nu, lambda);
                        if (c != 0) ++report.nonzero_triples;
                        for (int m = 1; m <= m_max; ++m) {
                            const mpz_class cm = lr_coefficient(mu.scaled(m), nu.scaled(m), lambda.scaled(m));
                            if ((c != 0) != (cm != 0)) report.violations.push_back({mu, nu, lambda, m, c, cm});
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace algcomb
