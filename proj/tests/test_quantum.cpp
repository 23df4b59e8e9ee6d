#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/core.hpp"
#include "schubert/lr.hpp"
#include "schubert/verify.hpp"
#include "schubert/quantum.hpp"
#include "schubert/slide.hpp"

using namespace schubert;

namespace {

Partition P(std::vector<int> v) {
    return Partition(std::move(v));
}

const RectContext g511 = make_context(5, 11);
const RectContext g24 = make_context(2, 4);

BoundedPartition B(std::vector<int> v, RectContext ctx = g511) {
    return BoundedPartition(P(std::move(v)), ctx);
}

} // namespace

TEST_CASE("extremal degrees of the running pair") {
    const BoundedPartition lam = B({6, 5, 4, 2}), mu = B({6, 4, 3, 3, 2});
    CHECK(d_min(lam, mu) == 1);
    CHECK(d_max(lam, mu) == 3);
}

TEST_CASE("extremal degrees of trivial pairs") {
    const BoundedPartition empty = B({}, g24);
    CHECK(d_min(empty, empty) == 0);
    CHECK(d_max(empty, empty) == 0);
    const BoundedPartition full = B({2, 2}, g24);
    CHECK(d_min(full, full) == 2);
    CHECK(d_max(full, full) == 2);
}

TEST_CASE("extremal data satisfies its defining identities") {
    for (const RectContext ctx : {g24, make_context(3, 6)}) {
        const auto classes = all_bounded_partitions(ctx);
        for (const auto& lam : classes)
            for (const auto& mu : classes) {
                const ExtremalData ex = extremal_data(lam, mu);
                CHECK(0 <= ex.d_min);
                CHECK(ex.d_min <= ex.d_max);
                CHECK(ex.a >= 1);
                CHECK(ex.a <= ctx.n);
                CHECK(ex.b >= 1);
                CHECK(ex.b <= ctx.n);
                CHECK(ex.d_min + phi(lam, ex.a) + phi(mu, -ex.a) == 0);
                CHECK(ex.d_max + phi(lam, -ex.b) + phi(mu, ex.b - ctx.width()) == 0);
                CHECK(ex.lambda_min == cyclic_shift(lam, ex.a));
                CHECK(ex.mu_min == cyclic_shift(mu, -ex.a));
                CHECK(ex.lambda_max == cyclic_shift(complement(lam), ex.b));
                CHECK(ex.mu_max == cyclic_shift(complement(mu), ctx.width() - ex.b));
            }
    }
}

TEST_CASE("rotated extremal pairs multiply nonzero") {
    const RectContext ctx = make_context(2, 5);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes) {
            const ExtremalData ex = extremal_data(lam, mu);
            CHECK(is_nonoverlapping(ex.lambda_min, ex.mu_min));
            CHECK(is_nonoverlapping(ex.lambda_max, ex.mu_max));
        }
}

TEST_CASE("rim hook reduction frozen walks") {
    auto red1 = rim_hook_reduce(P({4, 2}), g24);
    REQUIRE(red1.has_value());
    CHECK(red1->d == 1);
    CHECK(red1->sign == 1);
    CHECK(red1->reduced.partition() == P({1, 1}));

    auto red2 = rim_hook_reduce(P({3, 3}), g24);
    REQUIRE(red2.has_value());
    CHECK(red2->d == 1);
    CHECK(red2->sign == 1);
    CHECK(red2->reduced.partition() == P({2}));

    auto red3 = rim_hook_reduce(P({2, 1}), g24);
    REQUIRE(red3.has_value());
    CHECK(red3->d == 0);
    CHECK(red3->sign == 1);
    CHECK(red3->reduced.partition() == P({2, 1}));

    // Too few rim cells from the start: (5) has a 5-cell rim but n = 6.
    CHECK_FALSE(rim_hook_reduce(P({5}), make_context(2, 6)).has_value());
    // Removal would leave a non-partition.
    CHECK_FALSE(rim_hook_reduce(P({3, 1, 1}), make_context(3, 4)).has_value());

    CHECK_THROWS_AS(rim_hook_reduce(P({2, 1, 1}), g24), std::invalid_argument);
}

TEST_CASE("rim hook signs cancel where the support says they must") {
    // A single-row 4-hook in Gr_2(C^4) spans one row, so its sign is -1 ...
    auto flat = rim_hook_reduce(P({4}), g24);
    REQUIRE(flat.has_value());
    CHECK(flat->d == 1);
    CHECK(flat->sign == -1);
    CHECK(flat->reduced.partition() == P({}));
    // ... and cancels the +1 hook of (3,1); sigma_2 * sigma_2 stays classical.
    auto bent = rim_hook_reduce(P({3, 1}), g24);
    REQUIRE(bent.has_value());
    CHECK(bent->d == 1);
    CHECK(bent->sign == 1);
    CHECK(bent->reduced.partition() == P({}));
    const BoundedPartition two(P({2}), g24);
    const QuantumClassSum sq = quantum_product(two, two);
    CHECK(sq.terms.size() == 1);
    CHECK(sq.coeff(0, P({2, 2})) == 1);
}

TEST_CASE("quantum product frozen values") {
    const BoundedPartition a(P({2, 1}), g24);
    const QuantumClassSum prod = quantum_product(a, a);
    CHECK(prod.terms.size() == 2);
    CHECK(prod.coeff(1, P({2})) == 1);
    CHECK(prod.coeff(1, P({1, 1})) == 1);

    const QuantumClassSum by_identity =
        quantum_product(BoundedPartition(P({}), g24), BoundedPartition(P({2, 1}), g24));
    CHECK(by_identity.terms.size() == 1);
    CHECK(by_identity.coeff(0, P({2, 1})) == 1);

    const QuantumClassSum full = quantum_product(B({2, 2}, g24), B({2, 2}, g24));
    CHECK(full.terms.size() == 1);
    CHECK(full.coeff(2, P({})) == 1);
}

TEST_CASE("quantum product is commutative and extends the classical product") {
    const RectContext ctx = make_context(2, 5);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes) {
            const QuantumClassSum pq = quantum_product(lam, mu);
            CHECK(pq.terms == quantum_product(mu, lam).terms);
            const ClassSum classical = schubert_product(lam, mu);
            std::map<Partition, long long> slice0;
            for (const auto& [key, c] : pq.terms)
                if (key.first == 0)
                    slice0[key.second] = c;
            CHECK(slice0 == classical.terms);
            for (const auto& [key, c] : pq.terms) {
                CHECK(c > 0);
                CHECK(lam.partition().weight() + mu.partition().weight() ==
                      key.second.weight() + static_cast<long long>(key.first) * ctx.n);
            }
        }
}

TEST_CASE("gw invariant of the running degree-2 example") {
    const BoundedPartition lam = B({6, 5, 4, 2}), mu = B({6, 4, 3, 3, 2});
    CHECK(gw_invariant(lam, mu, B({6, 6, 1}), 2) == 1);
    CHECK(gw_invariant(lam, mu, B({6, 6, 1}), 1) == 0); // degree mismatch
    CHECK_THROWS_AS(gw_invariant(lam, mu, B({6, 6, 1}), -1), std::invalid_argument);
}

TEST_CASE("gw invariant at the extremes uses both routes") {
    const RectContext ctx = g24;
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes) {
            const ExtremalData ex = extremal_data(lam, mu);
            const BoundedPartition target = nu_classical(ex.lambda_min, ex.mu_min);
            CHECK(gw_invariant(lam, mu, target, ex.d_min) == 1);
        }
}

TEST_CASE("q support of the running pair") {
    const BoundedPartition lam = B({6, 5, 4, 2}), mu = B({6, 4, 3, 3, 2});
    CHECK(q_support(lam, mu) == std::set<int>{1, 2, 3});
    const BoundedPartition empty = B({}, g24);
    CHECK(q_support(empty, empty) == std::set<int>{0});
}

TEST_CASE("q support is a contiguous interval on a whole rectangle") {
    const RectContext ctx = make_context(2, 5);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes) {
            const std::set<int> support = q_support(lam, mu);
            REQUIRE(!support.empty());
            CHECK(*support.begin() == d_min(lam, mu));
            CHECK(*support.rbegin() == d_max(lam, mu));
            CHECK(static_cast<int>(support.size()) ==
                  d_max(lam, mu) - d_min(lam, mu) + 1);
        }
}
