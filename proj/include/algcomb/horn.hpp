#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "algcomb/tableaux.hpp"

namespace algcomb {

/// Eigenvalue triple (alpha, beta, gamma) of A + B = C, each weakly decreasing.
struct SpectrumTriple {
    std::vector<mpq_class> alpha, beta, gamma;

    int n() const noexcept { return static_cast<int>(alpha.size()); }
    /// Pads each partition with zeros to length n.
    static SpectrumTriple from_partitions(const Partition& a, const Partition& b, const Partition& c, int n);
};

/// sum_{k in K} gamma_k <= sum_{i in I} alpha_i + sum_{j in J} beta_j, 1-based indices.
struct HornInequality {
    std::vector<int> I, J, K;
    std::string to_string() const;
};

struct HornSystem {
    int n = 0;
    std::vector<HornInequality> inequalities;
    bool trace_equality = true;
};

/// The explicit inequality lists for n = 2 (3 inequalities) and n = 3 (12,
/// with every min(...) bound split into separate inequalities). Throws
/// std::domain_error for other n.
HornSystem horn_system(int n);

/// Trace equality and every inequality of horn_system(n). Throws
/// std::invalid_argument when a vector is not weakly decreasing or lengths differ.
bool horn_feasible(const SpectrumTriple& t);

/// c^gamma_{alpha,beta} != 0 for partitions of length at most n.
bool hermitian_feasible_integer(const Partition& alpha, const Partition& beta, const Partition& gamma);

struct SaturationViolation {
    Partition mu, nu, lambda;
    int m = 0;
    mpz_class c, c_scaled;
};

struct SaturationReport {
    int size_bound = 0;
    int m_max = 0;
    long triples_checked = 0;
    long nonzero_triples = 0;
    std::vector<SaturationViolation> violations;
};

/// For every (mu, nu, lambda) with |lambda| = |mu|+|nu| <= size_bound and
/// 1 <= m <= m_max, compares c != 0 with c(m mu, m nu, m lambda) != 0.
SaturationReport saturation_scan(int size_bound, int m_max);

} // namespace algcomb
