#pragma once

#include <string>
#include <vector>

#include "schubert/core.hpp"

// Exhaustive desk-scale verification over all (ordered) pairs of classes of
// one Grassmannian, with deterministic machine-readable reports.  Work is
// partitioned by pair across worker threads and merged in pair order, so
// reports are identical for any worker count.

namespace schubert {

enum class CheckStatus { pass, fail, anomaly };

struct CaseRecord {
    std::string inputs;
    std::string expected;
    std::string actual;

    bool operator==(const CaseRecord&) const = default;
};

struct VerificationReport {
    RectContext ctx;
    std::string check_name;
    long long cases_run = 0;
    long long cases_skipped = 0;
    std::vector<CaseRecord> failures;
    std::vector<CaseRecord> anomalies;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
    CheckStatus status = CheckStatus::pass;
};

std::string to_string(CheckStatus s);

struct VerifyOptions {
    int jobs = 1;
    bool unordered = false; // enumerate unordered pairs only (halved run)
};

/// All partitions inside the k x (n-k) rectangle, in decreasing lexicographic
/// order; count = binomial(n, k).
std::vector<BoundedPartition> all_bounded_partitions(const RectContext& ctx);

/// For every nonoverlapping ordered pair: the constructed class has LR
/// coefficient exactly 1 and the slide witness is a valid LR filling.
VerificationReport verify_classical(const RectContext& ctx, const VerifyOptions& opt = {});

/// For every pair: both extremal-degree slices of the quantum product match
/// the classical products of the rotated pairs for every nu, and the
/// constructed classes give coefficient 1 at d_min and d_max.
VerificationReport verify_extremal(const RectContext& ctx, const VerifyOptions& opt = {});

/// For every pair: q-support = toric support = the full interval
/// [d_min, d_max]; the product is nonzero and nonzero mod 2.
VerificationReport verify_support(const RectContext& ctx, const VerifyOptions& opt = {});

/// For every nonoverlapping ordered pair: iterated Pieri multiplications by
/// the conjugate gap parts land on point coefficient exactly 1, and the gap
/// recomputation after the first step drops to the next conjugate part.
VerificationReport verify_chain(const RectContext& ctx, const VerifyOptions& opt = {});

/// For every pair and every degree in [d_min, d_max]: the quantum slide
/// produces a class with Gromov-Witten invariant 1.  Failures are reported
/// as potential counterexamples; geometric anomalies are reported separately.
VerificationReport verify_conjecture(const RectContext& ctx, const VerifyOptions& opt = {});

} // namespace schubert
