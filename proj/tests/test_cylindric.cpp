#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubert/core.hpp"
#include "schubert/cylindric.hpp"
#include "schubert/lr.hpp"
#include "schubert/verify.hpp"
#include "schubert/quantum.hpp"

using namespace schubert;

namespace {

Partition P(std::vector<int> v) {
    return Partition(std::move(v));
}

const RectContext g511 = make_context(5, 11);

BoundedPartition B(std::vector<int> v, RectContext ctx = g511) {
    return BoundedPartition(P(std::move(v)), ctx);
}

} // namespace

TEST_CASE("loop heights of the running example") {
    const CylindricLoop loop{B({6, 5, 4, 2}), 0};
    CHECK(loop_height_at(loop, 0) == std::pair<long long, long long>{4, 5});
    CHECK(loop_height_at(loop, 2) == std::pair<long long, long long>{3, 4});
    CHECK(loop_height_at(loop, 3) == std::pair<long long, long long>{3, 3});
    CHECK(loop_height_at(loop, 6) == std::pair<long long, long long>{0, 1});
}

TEST_CASE("loop heights of the empty partition") {
    const CylindricLoop loop{B({}), 0};
    CHECK(loop_height_at(loop, 0) == std::pair<long long, long long>{0, 5});
    for (int c = 1; c <= 6; ++c)
        CHECK(loop_height_at(loop, c) == std::pair<long long, long long>{0, 0});
}

TEST_CASE("shifting a loop translates its heights") {
    const BoundedPartition lam = B({6, 5, 4, 2});
    for (int d : {1, 2, 5}) {
        const CylindricLoop base{lam, 0}, shifted{lam, d};
        for (int c = 0; c <= 6; ++c) {
            const auto [low, high] = loop_height_at(base, c);
            CHECK(loop_height_at(shifted, c + d) ==
                  std::pair<long long, long long>{low + d, high + d});
        }
    }
}

TEST_CASE("loop heights repeat quasi-periodically") {
    const BoundedPartition lam = B({4, 3, 3, 2}, make_context(4, 9));
    const CylindricLoop loop{lam, 0};
    const int w = 5, k = 4;
    for (int c = 1; c < w; ++c) {
        const auto [low, high] = loop_height_at(loop, c);
        CHECK(loop_height_at(loop, c + w) ==
              std::pair<long long, long long>{low - k, high - k});
        CHECK(loop_height_at(loop, c - w) ==
              std::pair<long long, long long>{low + k, high + k});
    }
}

TEST_CASE("cylindric and toric shape predicates on the running example") {
    const BoundedPartition lam = B({6, 5, 4, 2}), mu = B({4, 3, 3, 2});
    CHECK(is_cylindric_shape(mu, 2, lam));
    CHECK(is_toric(mu, 2, lam));
    CHECK(is_cylindric_shape(lam, 0, lam)); // empty strip
    CHECK(is_toric(lam, 0, lam));
    CHECK_FALSE(is_cylindric_shape(mu, -10, lam));
    CHECK_FALSE(is_toric(mu, -10, lam));
}

TEST_CASE("toric implies cylindric, and d past k is never toric") {
    const RectContext ctx = make_context(3, 6);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes)
            for (int d = -1; d <= ctx.k + 2; ++d) {
                if (is_toric(mu, d, lam))
                    CHECK(is_cylindric_shape(mu, d, lam));
                if (d > ctx.k)
                    CHECK_FALSE(is_toric(mu, d, lam));
            }
}

TEST_CASE("toric support of the running pair") {
    CHECK(toric_support(B({6, 5, 4, 2}), B({6, 4, 3, 3, 2})) == std::set<int>{1, 2, 3});
    const RectContext g24 = make_context(2, 4);
    const BoundedPartition empty(P({}), g24);
    CHECK(toric_support(empty, empty) == std::set<int>{0});
    CHECK(toric_support(BoundedPartition(P({2, 2}), g24), BoundedPartition(P({2, 2}), g24)) ==
          std::set<int>{2});
}

TEST_CASE("degree zero toric test is the nonoverlap test") {
    const RectContext ctx = make_context(3, 6);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes)
            CHECK(is_toric(complement(mu), 0, lam) == is_nonoverlapping(lam, mu));
}

TEST_CASE("toric support equals the quantum support") {
    const RectContext ctx = make_context(2, 5);
    const auto classes = all_bounded_partitions(ctx);
    for (const auto& lam : classes)
        for (const auto& mu : classes) {
            CHECK(toric_support(lam, mu) == q_support(lam, mu));
        }
}

TEST_CASE("frame view of the running example") {
    const BoundedPartition lam = B({6, 5, 4, 2});
    const FrameView v2 = frame_view(lam, 2);
    CHECK(v2.partition.partition() == P({5, 5, 4, 3, 1}));
    CHECK(v2.vertical_offset == 1);
    const FrameView v0 = frame_view(lam, 0);
    CHECK(v0.partition == lam);
    CHECK(v0.vertical_offset == 0);
    CHECK(v0.frame.anchor == LatticePoint{5, 0});
    const FrameView vn = frame_view(lam, 11);
    CHECK(vn.partition == lam);
    CHECK(vn.vertical_offset == 5);
    CHECK(vn.frame.anchor == LatticePoint{0, 6});
}

TEST_CASE("frame view agrees with rotation and phi everywhere") {
    const RectContext ctx = make_context(3, 6);
    for (const BoundedPartition& lam : all_bounded_partitions(ctx))
        for (long long i = 0; i <= 2 * ctx.n; ++i) {
            const FrameView v = frame_view(lam, i);
            CHECK(v.partition == cyclic_shift(lam, i));
            CHECK(v.vertical_offset == phi(lam, i));
        }
}
