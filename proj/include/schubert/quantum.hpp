#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "schubert/core.hpp"
#include "schubert/lr.hpp"

// Quantum products of Schubert classes: extremal q-degrees and the rotated
// partitions that reduce extremal Gromov-Witten invariants to classical LR
// numbers, plus a full quantum-product oracle via n-rim-hook reduction of the
// classical expansion over partitions with at most k rows.

namespace schubert {

/// Least q-power in sigma_lambda * sigma_mu:
/// -min_i { phi_i(lambda) + phi_{-i}(mu) }, i = 1..n.
int d_min(const BoundedPartition& lambda, const BoundedPartition& mu);

/// Greatest q-power: -max_i { phi_{-i}(lambda) + phi_{i-(n-k)}(mu) }, i = 1..n.
int d_max(const BoundedPartition& lambda, const BoundedPartition& mu);

struct ExtremalData {
    int d_min = 0;
    int d_max = 0;
    int a = 0; // least index in [1, n] with d_min + phi_a(lambda) + phi_{-a}(mu) = 0
    int b = 0; // least index in [1, n] with d_max + phi_{-b}(lambda) + phi_{b-(n-k)}(mu) = 0
    BoundedPartition lambda_min; // S^a(lambda)
    BoundedPartition mu_min;     // S^{-a}(mu)
    BoundedPartition lambda_max; // S^b(lambda complement)
    BoundedPartition mu_max;     // S^{n-k-b}(mu complement)
};

ExtremalData extremal_data(const BoundedPartition& lambda, const BoundedPartition& mu);

struct RimHookReduction {
    int d = 0;    // number of n-rim-hooks removed
    int sign = 1; // product of (-1)^(k - rows occupied) over removals
    BoundedPartition reduced;
};

/// Repeatedly removes the n-rim-hook starting at cell (1, nu_1) and running
/// along the rim toward the southwest, until nu_1 <= n-k.  Returns nullopt if
/// fewer than n rim cells are available or a removal leaves a non-partition.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& nu, const RectContext& ctx);

/// Integer combination of q^d sigma_nu terms; keys ordered by (d, nu).
struct QuantumClassSum {
    RectContext ctx;
    std::map<std::pair<int, Partition>, long long> terms;

    long long coeff(int d, const Partition& nu) const;
};

QuantumClassSum quantum_product(const BoundedPartition& lambda, const BoundedPartition& mu);

/// Gromov-Witten invariant c_{lambda,mu}^nu(d).  At d = d_min/d_max this is
/// computed by the rotation rule and cross-checked against the rim-hook
/// route; a disagreement throws internal_error.
long long gw_invariant(const BoundedPartition& lambda, const BoundedPartition& mu,
                       const BoundedPartition& nu, int d);

/// Set of q-powers appearing in the quantum product.
std::set<int> q_support(const BoundedPartition& lambda, const BoundedPartition& mu);

} // namespace schubert
