#include "schubert/output.hpp"

namespace schubert {

using nlohmann::json;

json partition_json(const Partition& p) {
    return json(p.parts());
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition json must be an array");
    return Partition(j.get<std::vector<int>>());
}

json tableau_json(const SkewTableau& t) {
    return json{{"outer", partition_json(t.shape().outer)},
                {"inner", partition_json(t.shape().inner)},
                {"rows", t.rows()}};
}

json trace_json(const SlideTrace& t) {
    json stages = json::array();
    for (const auto& [name, diagram] : t.stages)
        stages.push_back(json{{"name", name},
                              {"width", diagram.width},
                              {"offsets", diagram.offsets},
                              {"labels", diagram.labels}});
    return json{{"stages", stages}};
}

json report_json(const VerificationReport& r) {
    auto records = [](const std::vector<CaseRecord>& v) {
        json arr = json::array();
        for (const auto& c : v)
            arr.push_back(json{{"inputs", c.inputs}, {"expected", c.expected},
                               {"actual", c.actual}});
        return arr;
    };
    // No wall-clock fields: command output is byte-deterministic.
    return json{{"type", "report"},
                {"check", r.check_name},
                {"cases_run", r.cases_run},
                {"cases_skipped", r.cases_skipped},
                {"failures", records(r.failures)},
                {"anomalies", records(r.anomalies)},
                {"notes", r.notes},
                {"status", to_string(r.status)}};
}

namespace {

OutputRecord wrap(const RectContext& ctx, json payload) {
    return OutputRecord{kSchemaVersion, ctx, std::move(payload)};
}

} // namespace

OutputRecord make_product_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                 const ClassSum& sum) {
    json terms = json::array();
    for (const auto& [nu, c] : sum.terms)
        terms.push_back(json{{"nu", partition_json(nu)}, {"coeff", c}});
    return wrap(lambda.ctx(), json{{"type", "product"},
                                   {"lambda", partition_json(lambda.partition())},
                                   {"mu", partition_json(mu.partition())},
                                   {"terms", terms}});
}

OutputRecord make_qproduct_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                  const QuantumClassSum& sum) {
    json terms = json::array();
    for (const auto& [key, c] : sum.terms)
        terms.push_back(
            json{{"d", key.first}, {"nu", partition_json(key.second)}, {"coeff", c}});
    return wrap(lambda.ctx(), json{{"type", "qproduct"},
                                   {"lambda", partition_json(lambda.partition())},
                                   {"mu", partition_json(mu.partition())},
                                   {"terms", terms}});
}

OutputRecord make_bounds_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                                const ExtremalData& ex) {
    return wrap(lambda.ctx(),
                json{{"type", "bounds"},
                     {"lambda", partition_json(lambda.partition())},
                     {"mu", partition_json(mu.partition())},
                     {"d_min", ex.d_min},
                     {"d_max", ex.d_max},
                     {"a", ex.a},
                     {"b", ex.b},
                     {"lambda_min", partition_json(ex.lambda_min.partition())},
                     {"mu_min", partition_json(ex.mu_min.partition())},
                     {"lambda_max", partition_json(ex.lambda_max.partition())},
                     {"mu_max", partition_json(ex.mu_max.partition())}});
}

OutputRecord make_nu_record(const BoundedPartition& lambda, const BoundedPartition& mu,
                            std::optional<int> d, const BoundedPartition& nu,
                            const SkewTableau* witness, const SlideTrace* trace) {
    json payload{{"type", "nu"},
                 {"lambda", partition_json(lambda.partition())},
                 {"mu", partition_json(mu.partition())},
                 {"d", d ? json(*d) : json(nullptr)},
                 {"nu", partition_json(nu.partition())},
                 {"witness", witness ? tableau_json(*witness) : json(nullptr)},
                 {"trace", trace ? trace_json(*trace) : json(nullptr)}};
    return wrap(lambda.ctx(), std::move(payload));
}

OutputRecord make_lrcoef_record(const RectContext& ctx, const Partition& lambda,
                                const Partition& mu, const Partition& nu, long long coeff) {
    return wrap(ctx, json{{"type", "lrcoef"},
                          {"lambda", partition_json(lambda)},
                          {"mu", partition_json(mu)},
                          {"nu", partition_json(nu)},
                          {"coefficient", coeff}});
}

OutputRecord make_verify_record(const VerificationReport& report) {
    return wrap(report.ctx, report_json(report));
}

std::string dump_record(const OutputRecord& rec) {
    json j{{"schema_version", rec.schema_version},
           {"context", json{{"k", rec.context.k}, {"n", rec.context.n}}},
           {"payload", rec.payload}};
    return j.dump();
}

OutputRecord parse_output_record(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version") || !j.contains("context") ||
        !j.contains("payload"))
        throw std::invalid_argument("record must have schema_version, context, payload");
    OutputRecord rec;
    rec.schema_version = j["schema_version"].get<std::string>();
    rec.context.k = j["context"].at("k").get<int>();
    rec.context.n = j["context"].at("n").get<int>();
    rec.payload = j["payload"];
    return rec;
}

} // namespace schubert
