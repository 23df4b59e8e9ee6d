#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "schubert/core.hpp"
#include "schubert/lr.hpp"
#include "schubert/quantum.hpp"
#include "schubert/slide.hpp"
#include "schubert/verify.hpp"

// Structured command output: a single top-level object with schema_version,
// context and a command-specific payload.  Partitions serialize as arrays of
// integers, the empty partition as [].  The text format elsewhere is
// human-oriented and non-contractual; this one round-trips.

namespace schubert {

inline constexpr const char* kSchemaVersion = "1.0";

struct OutputRecord {
    std::string schema_version = kSchemaVersion;
    RectContext context; // {0, 0} when no rectangle applies (bare lrcoef)
    nlohmann::json payload;

    bool operator==(const OutputRecord&) const = default;
};

nlohmann::json partition_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json tableau_json(const SkewTableau& t);
nlohmann::json trace_json(const SlideTrace& t);
nlohmann::json report_json(const VerificationReport& r);

OutputRecord make_product_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                 const ClassSum& sum);
OutputRecord make_qproduct_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                  const QuantumClassSum& sum);
OutputRecord make_bounds_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                const ExtremalData& ex);
OutputRecord make_nu_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                            std::optional<int> d, const BoundedPartition& nu,
                            const SkewTableau* witness, const SlideTrace* trace);
OutputRecord make_lrcoef_record(const RectContext& ctx, const Partition& lambda,
                                const Partition& mu, const Partition& nu, long long coeff);
OutputRecord make_verify_record(const VerificationReport& report);

/// One-line JSON with sorted keys; byte-deterministic for fixed inputs.
std::string dump_record(const OutputRecord& rec);

/// Inverse of dump_record; throws std::invalid_argument on malformed input.
OutputRecord parse_output_record(const std::string& text);

} // namespace schubert
