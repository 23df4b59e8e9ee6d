// Acceptance suite: one line per criterion, nonzero exit if any proposition
// criterion fails.  Criterion 9 is an empirical sweep; counterexamples are
// printed in full but do not affect the exit code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/cylindric.hpp"
#include "schubert/lr.hpp"
#include "schubert/quantum.hpp"
#include "schubert/slide.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Partition P(std::vector<int> v) {
    return Partition(std::move(v));
}

int failures = 0;

struct Criterion {
    int number;
    std::string name;
    double budget_ms;
    std::function<bool(std::string&)> body;
};

void run(const Criterion& c) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ms > c.budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                  std::to_string(c.budget_ms) + " ms";
    }
    std::printf("%s  criterion %d: %s (%.2f ms)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond)
        detail += (detail.empty() ? "" : "; ") + what;
    return cond;
}

} // namespace

int main() {
    const RectContext g511 = make_context(5, 11);

    run({1, "border-word golden values (k=5, n=11)", 1.0, [&](std::string& detail) {
             const BoundedPartition lam(P({6, 5, 4, 2}), g511);
             bool ok = true;
             ok &= expect(word_of(lam).bits ==
                              std::vector<int>{1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
                          "word mismatch", detail);
             const std::vector<int> expected_phi{1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5};
             for (int i = 1; i <= 11; ++i)
                 ok &= expect(phi(lam, i) == expected_phi[i - 1],
                              "phi_" + std::to_string(i), detail);
             ok &= expect(complement(lam).partition() == P({6, 4, 2, 1}), "complement", detail);
             ok &= expect(conjugate(lam.partition()) == P({4, 4, 3, 3, 2, 1}), "conjugate",
                          detail);
             return ok;
         }});

    run({2, "rotation golden value S^2", 1.0, [&](std::string& detail) {
             const BoundedPartition lam(P({6, 5, 4, 2}), g511);
             const BoundedPartition rotated = cyclic_shift(lam, 2);
             bool ok = expect(rotated.partition() == P({5, 5, 4, 3, 1}), "S^2 shape", detail);
             ok &= expect(word_of(rotated).bits ==
                              std::vector<int>{0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0},
                          "shifted word", detail);
             return ok;
         }});

    run({3, "worked example: rho, nu, unique witness filling", 100.0,
         [&](std::string& detail) {
             const BoundedPartition lam(P({4, 3, 1}), g511), mu(P({5, 4, 4}), g511);
             bool ok = expect(rho(lam, mu) == P({2, 2, 2, 2, 1}), "rho", detail);
             const BoundedPartition nu = nu_classical(lam, mu);
             ok &= expect(nu.partition() == P({6, 6, 6, 2, 1}), "nu", detail);
             ok &= expect(
                 lr_coefficient(lam.partition(), mu.partition(), nu.partition()) == 1,
                 "lr coefficient", detail);
             const auto fillings =
                 lr_fillings(lam.partition(), mu.partition(), nu.partition());
             ok &= expect(fillings.size() == 1, "exactly one filling", detail);
             const SlideResult s = slide(lam, mu);
             ok &= expect(!fillings.empty() && fillings[0] == s.witness,
                          "filling equals the slide witness", detail);
             return ok;
         }});

    run({4, "conjecture worked example and support cross-validation", 5000.0,
         [&](std::string& detail) {
             const BoundedPartition lam(P({6, 5, 4, 2}), g511), mu(P({6, 4, 3, 3, 2}), g511);
             bool ok = expect(nu_quantum(lam, mu, 2).partition() == P({6, 6, 1}),
                              "nu(lambda,mu,2)", detail);
             ok &= expect(gw_invariant(lam, mu, BoundedPartition(P({6, 6, 1}), g511), 2) == 1,
                          "gw invariant", detail);
             ok &= expect(d_min(lam, mu) == 1, "d_min", detail);
             ok &= expect(d_max(lam, mu) == 3, "d_max", detail);
             const std::set<int> expected{1, 2, 3};
             ok &= expect(toric_support(lam, mu) == expected, "toric support", detail);
             ok &= expect(q_support(lam, mu) == expected, "rim-hook support", detail);
             return ok;
         }});

    run({5, "exhaustive multiplicity-one construction", 300000.0, [&](std::string& detail) {
             bool ok = true;
             for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
                 const VerificationReport r = verify_classical(make_context(k, n));
                 ok &= expect(r.status == CheckStatus::pass,
                              "Gr_" + std::to_string(k) + "(C^" + std::to_string(n) + "): " +
                                  std::to_string(r.failures.size()) + " failures",
                              detail);
             }
             return ok;
         }});

    run({6, "exhaustive extremal-degree equalities", 300000.0, [&](std::string& detail) {
             bool ok = true;
             for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
                 const VerificationReport r = verify_extremal(make_context(k, n));
                 ok &= expect(r.status == CheckStatus::pass,
                              "Gr_" + std::to_string(k) + "(C^" + std::to_string(n) + "): " +
                                  std::to_string(r.failures.size()) + " failures",
                              detail);
             }
             return ok;
         }});

    run({7, "exhaustive support law", 300000.0, [&](std::string& detail) {
             bool ok = true;
             for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}}) {
                 const VerificationReport r = verify_support(make_context(k, n));
                 ok &= expect(r.status == CheckStatus::pass,
                              "Gr_" + std::to_string(k) + "(C^" + std::to_string(n) + "): " +
                                  std::to_string(r.failures.size()) + " failures",
                              detail);
             }
             return ok;
         }});

    run({8, "iterated Pieri chain lands on the point class", 60000.0,
         [&](std::string& detail) {
             const VerificationReport r = verify_chain(make_context(3, 6));
             return expect(r.status == CheckStatus::pass,
                           std::to_string(r.failures.size()) + " failures", detail);
         }});

    run({9, "conjecture sweep (empirical; counterexamples are data)", 600000.0,
         [&](std::string& detail) {
             bool clean = true;
             for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}}) {
                 const VerificationReport r = verify_conjecture(make_context(k, n));
                 for (const auto& f : r.failures) {
                     std::printf("  counterexample in Gr_%d(C^%d): %s expected %s got %s\n", k,
                                 n, f.inputs.c_str(), f.expected.c_str(), f.actual.c_str());
                     clean = false;
                 }
                 for (const auto& a : r.anomalies) {
                     std::printf("  anomaly in Gr_%d(C^%d): %s (%s)\n", k, n, a.inputs.c_str(),
                                 a.actual.c_str());
                     clean = false;
                 }
             }
             if (!clean)
                 detail = "counterexamples reported above (not a failure of this artifact)";
             return true; // empirical outcome; reported, never failing
         }});

    run({10, "property suites: exact invariants", 60000.0, [&](std::string& detail) {
             bool ok = true;
             // LR symmetry / conjugation / degree on a small sweep.
             std::vector<Partition> small;
             for (int w = 0; w <= 4; ++w)
                 for_each_partition(3, 3, w,
                                    [&](const Partition& p) { small.push_back(p); });
             for (const auto& a : small)
                 for (const auto& b : small)
                     for (const auto& c : small) {
                         const long long x = lr_coefficient(a, b, c);
                         ok &= expect(x == lr_coefficient(b, a, c), "lr symmetry", detail);
                         ok &= expect(x == lr_coefficient(conjugate(a), conjugate(b),
                                                          conjugate(c)),
                                      "lr conjugation", detail);
                         if (x != 0)
                             ok &= expect(a.weight() + b.weight() == c.weight(), "lr degree",
                                          detail);
                     }
             // Encoding involutions, rotation group law, frame agreement.
             const RectContext ctx = make_context(3, 6);
             for (const BoundedPartition& p : all_bounded_partitions(ctx)) {
                 ok &= expect(partition_of(word_of(p), ctx) == p, "word bijection", detail);
                 ok &= expect(conjugate(conjugate(p.partition())) == p.partition(),
                              "conjugate involution", detail);
                 ok &= expect(complement(complement(p)) == p, "complement involution", detail);
                 for (int i = -6; i <= 6; ++i) {
                     ok &= expect(cyclic_shift(cyclic_shift(p, i), -i) == p,
                                  "rotation group law", detail);
                     ok &= expect(phi(p, i + ctx.n) == phi(p, i) + ctx.k, "phi period",
                                  detail);
                 }
                 for (int i = 0; i <= 2 * ctx.n; ++i) {
                     const FrameView v = frame_view(p, i);
                     ok &= expect(v.partition == cyclic_shift(p, i), "frame vs rotation",
                                  detail);
                     ok &= expect(v.vertical_offset == phi(p, i), "frame vs phi", detail);
                 }
             }
             // Oracle cross-checks: Pieri against full products.
             for (const BoundedPartition& lam : all_bounded_partitions(ctx))
                 for (int s = 0; s <= ctx.width(); ++s) {
                     const ClassSum a = pieri_row(lam, s);
                     const ClassSum b = schubert_product(
                         lam, BoundedPartition(s == 0 ? P({}) : P({s}), ctx));
                     ok &= expect(a.terms == b.terms, "pieri vs product", detail);
                 }
             return ok;
         }});

    if (failures > 0) {
        std::printf("%d criterion failure(s)\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
