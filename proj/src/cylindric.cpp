#include "schubert/cylindric.hpp"

#include <algorithm>

namespace schubert {

namespace {

// Level of the un-shifted border of p over column interval [x, x+1]: the
// conjugate part for 0 <= x < n-k, extended by level(x + n-k) = level(x) - k.
long long border_level(const BoundedPartition& p, long long x) {
    const int w = p.ctx().width();
    long long q = x >= 0 ? x / w : -((-x + w - 1) / w);
    int r = static_cast<int>(x - q * w); // 0 <= r < w
    return conjugate(p.partition()).part(r) - q * p.ctx().k;
}

} // namespace

long long loop_level(const CylindricLoop& loop, long long x) {
    return loop.shift + border_level(loop.base, x - loop.shift);
}

std::pair<long long, long long> loop_height_at(const CylindricLoop& loop, long long col) {
    const int w = loop.base.ctx().width(), k = loop.base.ctx().k;
    const long long x = col - loop.shift;
    // Reduce to the representative's column range [0, n-k]; x = n-k stays at
    // the top seam rather than wrapping to 0.
    long long q;
    if (x == 0)
        q = 0;
    else if (x > 0)
        q = (x - 1) / w;
    else
        q = -((-x + w - 1) / w);
    const long long x0 = x - q * w;
    const Partition conj = conjugate(loop.base.partition());
    const long long low = x0 == w ? 0 : conj.part(static_cast<size_t>(x0));
    const long long high = x0 == 0 ? k : conj.part(static_cast<size_t>(x0 - 1));
    const long long adjust = loop.shift - q * k;
    return {low + adjust, high + adjust};
}

bool is_cylindric_shape(const BoundedPartition& mu, int d, const BoundedPartition& lambda) {
    require_same_context(mu, lambda);
    const int w = mu.ctx().width();
    const CylindricLoop mu_loop{mu, d}, lambda_loop{lambda, 0};
    for (int c = 0; c < w; ++c)
        if (loop_level(mu_loop, c) < loop_level(lambda_loop, c))
            return false;
    return true;
}

bool is_toric(const BoundedPartition& mu, int d, const BoundedPartition& lambda) {
    require_same_context(mu, lambda);
    const int w = mu.ctx().width(), k = mu.ctx().k;
    const CylindricLoop mu_loop{mu, d}, lambda_loop{lambda, 0};
    for (int c = 0; c < w; ++c) {
        const long long level_mu = loop_level(mu_loop, c);
        const long long level_lambda = loop_level(lambda_loop, c);
        if (level_mu < level_lambda || level_mu > level_lambda + k)
            return false;
    }
    return true;
}

std::set<int> toric_support(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    const BoundedPartition mu_comp = complement(mu);
    std::set<int> support;
    // No shape is toric past d = k: the path would pass below the translate.
    for (int d = 0; d <= lambda.ctx().k; ++d)
        if (is_toric(mu_comp, d, lambda))
            support.insert(d);
    return support;
}

FrameView frame_view(const BoundedPartition& lambda, long long i) {
    const RectContext ctx = lambda.ctx();
    const int k = ctx.k, n = ctx.n, w = ctx.width();
    // Count up-steps among the first i steps of the border word, cyclically.
    const Word01 word = word_of(lambda);
    long long q = i >= 0 ? i / n : -((-i + n - 1) / n);
    int r = static_cast<int>(i - q * n);
    long long ups = q * k;
    for (int j = 0; j < r; ++j)
        ups += word.bits[j];
    const Frame frame{LatticePoint{k - ups, i - ups}, ctx};
    std::vector<int> heights(w);
    for (int j = 0; j < w; ++j) {
        long long h = border_level(lambda, frame.anchor.col + j) - frame.top_row();
        heights[j] = static_cast<int>(std::clamp<long long>(h, 0, k));
    }
    std::vector<int> parts(k, 0);
    for (int row = 0; row < k; ++row)
        parts[row] = static_cast<int>(
            std::count_if(heights.begin(), heights.end(), [&](int h) { return h > row; }));
    return FrameView{BoundedPartition(Partition(std::move(parts)), ctx),
                     static_cast<int>(ups), frame};
}

} // namespace schubert
