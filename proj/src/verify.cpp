#include "schubert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "schubert/cylindric.hpp"
#include "schubert/lr.hpp"
#include "schubert/quantum.hpp"
#include "schubert/slide.hpp"

namespace schubert {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::anomaly:
        return "anomaly";
    }
    return "unknown";
}

namespace {

void all_parts_rec(const RectContext& ctx, int row, int max_part, std::vector<int>& current,
                   std::vector<BoundedPartition>& out) {
    for (int p = max_part; p >= 1; --p) {
        current.push_back(p);
        if (row + 1 < ctx.k)
            all_parts_rec(ctx, row + 1, p, current, out);
        else
            out.emplace_back(Partition(std::vector<int>(current)), ctx);
        current.pop_back();
    }
    out.emplace_back(Partition(std::vector<int>(current)), ctx);
}

} // namespace

std::vector<BoundedPartition> all_bounded_partitions(const RectContext& ctx) {
    std::vector<BoundedPartition> out;
    std::vector<int> current;
    all_parts_rec(ctx, 0, ctx.width(), current, out);
    return out;
}

namespace {

struct PairOutcome {
    bool skipped = false;
    std::vector<CaseRecord> failures;
    std::vector<CaseRecord> anomalies;
    long long tally_hit = 0; // optional per-check bookkeeping
    long long tally_total = 0;
    std::exception_ptr error;
};

std::string pair_label(const BoundedPartition& a, const BoundedPartition& b) {
    return "lambda=" + to_string(a.partition()) + " mu=" + to_string(b.partition());
}

using PairWork = std::function<void(const BoundedPartition&, const BoundedPartition&, PairOutcome&)>;

VerificationReport run_over_pairs(const RectContext& ctx, std::string check_name,
                                  const VerifyOptions& opt, const PairWork& work) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<BoundedPartition> classes = all_bounded_partitions(ctx);
    const size_t m = classes.size();

    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(opt.unordered ? m * (m + 1) / 2 : m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = opt.unordered ? i : 0; j < m; ++j)
            pairs.emplace_back(i, j);

    std::vector<PairOutcome> outcomes(pairs.size());
    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t t = lo; t < hi; ++t) {
            try {
                work(classes[pairs[t].first], classes[pairs[t].second], outcomes[t]);
            } catch (...) {
                outcomes[t].error = std::current_exception();
            }
        }
    };

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || pairs.size() < 2) {
        run_range(0, pairs.size());
    } else {
        std::vector<std::thread> workers;
        const size_t chunk = (pairs.size() + jobs - 1) / jobs;
        for (size_t lo = 0; lo < pairs.size(); lo += chunk)
            workers.emplace_back(run_range, lo, std::min(lo + chunk, pairs.size()));
        for (auto& t : workers)
            t.join();
    }

    VerificationReport report;
    report.ctx = ctx;
    report.check_name = std::move(check_name);
    long long tally_hit = 0, tally_total = 0;
    for (auto& o : outcomes) {
        if (o.error)
            std::rethrow_exception(o.error);
        if (o.skipped) {
            ++report.cases_skipped;
            continue;
        }
        ++report.cases_run;
        for (auto& f : o.failures)
            report.failures.push_back(std::move(f));
        for (auto& a : o.anomalies)
            report.anomalies.push_back(std::move(a));
        tally_hit += o.tally_hit;
        tally_total += o.tally_total;
    }
    if (report.check_name == "conjecture" && tally_total > 0)
        report.notes.push_back("nu_quantum at d_min equals nu_classical(lambda_min,mu_min) for " +
                               std::to_string(tally_hit) + " of " + std::to_string(tally_total) +
                               " pairs");
    if (!report.anomalies.empty())
        report.status = CheckStatus::anomaly;
    else
        report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

} // namespace

VerificationReport verify_classical(const RectContext& ctx, const VerifyOptions& opt) {
    return run_over_pairs(ctx, "classical", opt,
                          [](const BoundedPartition& lambda, const BoundedPartition& mu,
                             PairOutcome& out) {
        if (!is_nonoverlapping(lambda, mu)) {
            out.skipped = true;
            return;
        }
        const BoundedPartition nu = nu_classical(lambda, mu);
        const long long c =
            lr_coefficient(lambda.partition(), mu.partition(), nu.partition());
        if (c != 1)
            out.failures.push_back({pair_label(lambda, mu) + " nu=" + to_string(nu.partition()),
                                    "lr coefficient 1", std::to_string(c)});
        const SlideResult s = slide(lambda, mu);
        if (!(s.nu == nu))
            out.failures.push_back({pair_label(lambda, mu), "slide shape " + to_string(nu.partition()),
                                    to_string(s.nu.partition())});
        if (!is_lr_filling(s.witness, mu.partition()))
            out.failures.push_back(
                {pair_label(lambda, mu), "slide witness is an LR filling", "invalid filling"});
    });
}

VerificationReport verify_extremal(const RectContext& ctx, const VerifyOptions& opt) {
    const std::vector<BoundedPartition> classes = all_bounded_partitions(ctx);
    return run_over_pairs(ctx, "extremal", opt,
                          [&classes](const BoundedPartition& lambda, const BoundedPartition& mu,
                                     PairOutcome& out) {
        const ExtremalData ex = extremal_data(lambda, mu);
        const QuantumClassSum qp = quantum_product(lambda, mu);

        if (!is_nonoverlapping(ex.lambda_min, ex.mu_min) ||
            !is_nonoverlapping(ex.lambda_max, ex.mu_max)) {
            out.failures.push_back({pair_label(lambda, mu),
                                    "rotated extremal pairs are nonoverlapping", "overlap"});
            return;
        }

        const ClassSum cs_min = schubert_product(ex.lambda_min, ex.mu_min);
        const ClassSum cs_max = schubert_product(ex.lambda_max, ex.mu_max);
        for (const BoundedPartition& nu : classes) {
            const long long lhs_min = qp.coeff(ex.d_min, nu.partition());
            const long long rhs_min = cs_min.coeff(nu.partition());
            if (lhs_min != rhs_min)
                out.failures.push_back(
                    {pair_label(lambda, mu) + " nu=" + to_string(nu.partition()) +
                         " d=" + std::to_string(ex.d_min),
                     "quantum slice = rotated classical (" + std::to_string(rhs_min) + ")",
                     std::to_string(lhs_min)});
            const long long lhs_max = qp.coeff(ex.d_max, nu.partition());
            const long long rhs_max = cs_max.coeff(complement(nu).partition());
            if (lhs_max != rhs_max)
                out.failures.push_back(
                    {pair_label(lambda, mu) + " nu=" + to_string(nu.partition()) +
                         " d=" + std::to_string(ex.d_max),
                     "quantum slice = rotated classical of complement (" +
                         std::to_string(rhs_max) + ")",
                     std::to_string(lhs_max)});
        }

        const BoundedPartition nu_min = nu_classical(ex.lambda_min, ex.mu_min);
        if (qp.coeff(ex.d_min, nu_min.partition()) != 1)
            out.failures.push_back(
                {pair_label(lambda, mu) + " nu=" + to_string(nu_min.partition()),
                 "coefficient 1 at d_min",
                 std::to_string(qp.coeff(ex.d_min, nu_min.partition()))});
        const BoundedPartition nu_max = complement(nu_classical(ex.lambda_max, ex.mu_max));
        if (qp.coeff(ex.d_max, nu_max.partition()) != 1)
            out.failures.push_back(
                {pair_label(lambda, mu) + " nu=" + to_string(nu_max.partition()),
                 "coefficient 1 at d_max",
                 std::to_string(qp.coeff(ex.d_max, nu_max.partition()))});
    });
}

VerificationReport verify_support(const RectContext& ctx, const VerifyOptions& opt) {
    return run_over_pairs(ctx, "support", opt,
                          [](const BoundedPartition& lambda, const BoundedPartition& mu,
                             PairOutcome& out) {
        const int lo = d_min(lambda, mu), hi = d_max(lambda, mu);
        std::set<int> interval;
        for (int d = lo; d <= hi; ++d)
            interval.insert(d);

        const QuantumClassSum qp = quantum_product(lambda, mu);
        std::set<int> qs;
        bool odd_term = false;
        for (const auto& [key, c] : qp.terms) {
            qs.insert(key.first);
            odd_term = odd_term || (c % 2 != 0);
        }
        const std::set<int> ts = toric_support(lambda, mu);

        auto set_str = [](const std::set<int>& s) {
            std::string r = "{";
            for (int d : s)
                r += (r.size() > 1 ? "," : "") + std::to_string(d);
            return r + "}";
        };
        if (qs != interval)
            out.failures.push_back({pair_label(lambda, mu), "q-support " + set_str(interval),
                                    set_str(qs)});
        if (ts != interval)
            out.failures.push_back({pair_label(lambda, mu), "toric support " + set_str(interval),
                                    set_str(ts)});
        if (qp.terms.empty())
            out.failures.push_back({pair_label(lambda, mu), "nonzero product", "zero"});
        if (!odd_term)
            out.failures.push_back(
                {pair_label(lambda, mu), "nonzero mod 2", "all coefficients even"});
    });
}

VerificationReport verify_chain(const RectContext& ctx, const VerifyOptions& opt) {
    return run_over_pairs(ctx, "chain", opt,
                          [](const BoundedPartition& lambda, const BoundedPartition& mu,
                             PairOutcome& out) {
        if (!is_nonoverlapping(lambda, mu)) {
            out.skipped = true;
            return;
        }
        const RectContext c = lambda.ctx();
        const Partition rho_parts = rho(lambda, mu);
        const Partition rho_conj = conjugate(rho_parts);

        ClassSum state{c, {}};
        state.add(lambda.partition(), 1);
        for (size_t step = 0; step < rho_conj.length(); ++step) {
            ClassSum next{c, {}};
            for (const auto& [alpha, coeff] : state.terms) {
                const ClassSum strip =
                    pieri_row(BoundedPartition(alpha, c), rho_conj.parts()[step]);
                for (const auto& [beta, one] : strip.terms)
                    next.add(beta, checked_mul(coeff, one));
            }
            state = std::move(next);
        }
        const long long point = state.coeff(complement(mu).partition());
        if (point != 1)
            out.failures.push_back({pair_label(lambda, mu) + " rho'=" + to_string(rho_conj),
                                    "point coefficient 1", std::to_string(point)});

        if (!rho_conj.empty()) {
            // lambda with the longest horizontal strip avoiding rotated mu.
            const Partition lam_conj = conjugate(lambda.partition());
            const Partition mu_conj = conjugate(mu.partition());
            const int w = c.width();
            std::vector<int> grown(w);
            for (int j = 0; j < w; ++j) {
                const int gap = c.k - lam_conj.part(j) - mu_conj.part(w - 1 - j);
                grown[j] = lam_conj.part(j) + (gap > 0 ? 1 : 0);
            }
            std::vector<int> parts(c.k, 0);
            for (int row = 0; row < c.k; ++row)
                parts[row] = static_cast<int>(std::count_if(
                    grown.begin(), grown.end(), [&](int h) { return h > row; }));
            const BoundedPartition lambda_tilde(Partition(std::move(parts)), c);

            const ClassSum first = pieri_row(lambda, rho_conj.parts()[0]);
            if (first.coeff(lambda_tilde.partition()) != 1)
                out.failures.push_back(
                    {pair_label(lambda, mu),
                     "Pieri step contains " + to_string(lambda_tilde.partition()),
                     "missing"});
            const Partition rho_next = conjugate(rho(lambda_tilde, mu));
            if (rho_next.part(0) != rho_conj.part(1))
                out.failures.push_back({pair_label(lambda, mu),
                                        "regrown gap part " + std::to_string(rho_conj.part(1)),
                                        std::to_string(rho_next.part(0))});
        }
    });
}

VerificationReport verify_conjecture(const RectContext& ctx, const VerifyOptions& opt) {
    return run_over_pairs(ctx, "conjecture", opt,
                          [](const BoundedPartition& lambda, const BoundedPartition& mu,
                             PairOutcome& out) {
        const ExtremalData ex = extremal_data(lambda, mu);
        for (int d = ex.d_min; d <= ex.d_max; ++d) {
            try {
                const BoundedPartition nu = nu_quantum(lambda, mu, d);
                const long long c = gw_invariant(lambda, mu, nu, d);
                if (c != 1)
                    out.failures.push_back({pair_label(lambda, mu) + " d=" + std::to_string(d) +
                                                " nu=" + to_string(nu.partition()),
                                            "1", std::to_string(c)});
                if (d == ex.d_min) {
                    ++out.tally_total;
                    if (nu == nu_classical(ex.lambda_min, ex.mu_min))
                        ++out.tally_hit;
                }
            } catch (const geometry_anomaly& e) {
                out.anomalies.push_back({pair_label(lambda, mu) + " d=" + std::to_string(d),
                                         "well-formed sliding region", e.what()});
            }
        }
    });
}

} // namespace schubert
