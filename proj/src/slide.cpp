#include "schubert/slide.hpp"

#include <algorithm>

#include "schubert/quantum.hpp"

namespace schubert {

namespace {

// Conjugate column heights padded to the rectangle width.
std::vector<int> column_heights(const Partition& p, int width) {
    std::vector<int> h(width, 0);
    const Partition conj = conjugate(p);
    for (int j = 0; j < width; ++j)
        h[j] = conj.part(j);
    return h;
}

struct BoxGeometry {
    int height = 0;
    std::vector<int> lam_h; // top-justified heights of the lambda role
    std::vector<int> mu_h;  // bottom-justified heights of the rotated-mu role
};

BoxGeometry classical_geometry(const BoundedPartition& lambda, const BoundedPartition& mu) {
    const int w = lambda.ctx().width();
    BoxGeometry g;
    g.height = lambda.ctx().k;
    g.lam_h = column_heights(lambda.partition(), w);
    g.mu_h = column_heights(mu.partition(), w);
    std::reverse(g.mu_h.begin(), g.mu_h.end()); // r-th column from the right
    return g;
}

BoxGeometry quantum_geometry(const BoundedPartition& lambda, const BoundedPartition& mu, int d) {
    const RectContext ctx = lambda.ctx();
    const int k = ctx.k, w = ctx.width();
    const int lo = d_min(lambda, mu), hi = d_max(lambda, mu);
    if (d < lo || d > hi)
        throw std::invalid_argument("nu_quantum: d=" + std::to_string(d) +
                                    " outside [d_min, d_max] = [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");

    const Partition lam_conj = conjugate(lambda.partition());
    // Lowest point of lambda[0] on column d; at d = 0 the representative
    // starts at the rectangle anchor (k, 0) and the box degenerates to it.
    const int p_row = d == 0 ? k : lam_conj.part(d - 1);
    const int box_top = p_row - k;

    // lambda[0] level over column interval [x, x+1], quasi-periodic.
    auto level = [&](int x) {
        int q = x >= 0 ? x / w : -((-x + w - 1) / w);
        return lam_conj.part(x - q * w) - q * k;
    };
    BoxGeometry g;
    g.height = (k + d) - box_top;
    g.lam_h.resize(w);
    g.mu_h.resize(w);
    const Partition mu_comp_conj = conjugate(complement(mu).partition());
    for (int j = 0; j < w; ++j) {
        g.lam_h[j] = std::max(0, level(d + j) - box_top);
        // The SE region below complement(mu)[d] inside the bottom frame is
        // the rotated mu, exactly as in the classical slide.
        g.mu_h[j] = k - mu_comp_conj.part(j);
    }
    return g;
}

struct BoxSlide {
    std::vector<int> nu_tilde; // all box rows, including trailing zeros
    Partition lam_box;         // the lambda-role shape, a partition
    std::vector<std::vector<int>> witness_rows;
    SlideTrace trace;
};

// Slides labeled columns of heights mu_h (sitting at the bottom of a
// height x width box) up against a top-justified shape of column heights
// lam_h, then left-justifies every row, carrying labels along.  Column j
// carries labels 1..mu_h[j] top-down throughout.
BoxSlide run_box_slide(int height, int width, const std::vector<int>& lam_h,
                       const std::vector<int>& mu_h) {
    for (int j = 0; j < width; ++j) {
        if (lam_h[j] < 0 || mu_h[j] < 0 || lam_h[j] + mu_h[j] > height)
            throw geometry_anomaly("slide: column " + std::to_string(j + 1) +
                                   " does not fit the working box");
        if (j > 0 && lam_h[j] > lam_h[j - 1])
            throw geometry_anomaly("slide: lambda-role heights not weakly decreasing");
    }

    BoxSlide out;
    auto labels_for = [&](int j) {
        std::vector<int> v(mu_h[j]);
        for (int i = 0; i < mu_h[j]; ++i)
            v[i] = i + 1;
        return v;
    };

    ColumnDiagram initial{width, {}, {}};
    ColumnDiagram slid{width, {}, {}};
    for (int j = 0; j < width; ++j) {
        initial.offsets.push_back(height - mu_h[j]);
        initial.labels.push_back(labels_for(j));
        slid.offsets.push_back(lam_h[j]);
        slid.labels.push_back(labels_for(j));
    }

    // Row r of the box is filled in column j iff r < lam_h[j] + mu_h[j];
    // left-justifying therefore sorts the filled prefix lengths.
    std::vector<int> lam_rows(height, 0), total_rows(height, 0);
    for (int r = 0; r < height; ++r)
        for (int j = 0; j < width; ++j) {
            if (lam_h[j] > r)
                ++lam_rows[r];
            if (lam_h[j] + mu_h[j] > r)
                ++total_rows[r];
        }
    out.nu_tilde = total_rows;
    out.lam_box = Partition(std::vector<int>(lam_rows));

    out.witness_rows.resize(height);
    for (int r = 0; r < height; ++r)
        for (int j = 0; j < width; ++j)
            if (lam_h[j] <= r && r < lam_h[j] + mu_h[j])
                out.witness_rows[r].push_back(r - lam_h[j] + 1);

    ColumnDiagram final_stage{0, {}, {}};
    final_stage.width = total_rows.empty() ? 0 : total_rows[0];
    for (int c = 0; c < final_stage.width; ++c) {
        int offset = 0;
        std::vector<int> labels;
        for (int r = 0; r < height; ++r) {
            if (lam_rows[r] > c)
                ++offset;
            else if (total_rows[r] > c)
                labels.push_back(out.witness_rows[r][c - lam_rows[r]]);
        }
        final_stage.offsets.push_back(offset);
        final_stage.labels.push_back(std::move(labels));
    }
    out.trace.stages.emplace_back("initial", std::move(initial));
    out.trace.stages.emplace_back("slid_up", std::move(slid));
    out.trace.stages.emplace_back("left_justified", std::move(final_stage));
    return out;
}

std::vector<int> gap_heights(const BoundedPartition& lambda, const BoundedPartition& mu) {
    const int k = lambda.ctx().k, w = lambda.ctx().width();
    const std::vector<int> lam_h = column_heights(lambda.partition(), w);
    const std::vector<int> mu_h = column_heights(mu.partition(), w);
    std::vector<int> gaps(w);
    for (int j = 0; j < w; ++j)
        gaps[j] = k - lam_h[j] - mu_h[w - 1 - j];
    return gaps;
}

} // namespace

Partition rho(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    std::vector<int> gaps = gap_heights(lambda, mu);
    for (int g : gaps)
        if (g < 0)
            throw std::invalid_argument("rho: " + to_string(lambda.partition()) + " overlaps " +
                                        to_string(mu.partition()) + " rotated");
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    return Partition(std::move(gaps));
}

BoundedPartition nu_classical(const BoundedPartition& lambda, const BoundedPartition& mu) {
    return complement(BoundedPartition(conjugate(rho(lambda, mu)), lambda.ctx()));
}

SlideResult slide(const BoundedPartition& lambda, const BoundedPartition& mu) {
    require_same_context(lambda, mu);
    if (!is_nonoverlapping(lambda, mu))
        throw std::invalid_argument("slide: " + to_string(lambda.partition()) + " overlaps " +
                                    to_string(mu.partition()) + " rotated");
    const RectContext ctx = lambda.ctx();
    const BoxGeometry g = classical_geometry(lambda, mu);
    BoxSlide box = run_box_slide(g.height, ctx.width(), g.lam_h, g.mu_h);

    Partition nu(std::vector<int>(box.nu_tilde));
    std::vector<std::vector<int>> rows(nu.length());
    for (size_t r = 0; r < nu.length(); ++r)
        rows[r] = box.witness_rows[r];
    SkewTableau witness(SkewShape(nu, lambda.partition()), std::move(rows));
    return SlideResult{BoundedPartition(std::move(nu), ctx), std::move(witness),
                       std::move(box.trace)};
}

BoundedPartition nu_quantum(const BoundedPartition& lambda, const BoundedPartition& mu, int d) {
    require_same_context(lambda, mu);
    const RectContext ctx = lambda.ctx();
    const BoxGeometry g = quantum_geometry(lambda, mu, d);
    BoxSlide box = run_box_slide(g.height, ctx.width(), g.lam_h, g.mu_h);

    std::vector<int> last(box.nu_tilde.end() - ctx.k, box.nu_tilde.end());
    return BoundedPartition(Partition(std::move(last)), ctx);
}

SlideView slide_panels(const BoundedPartition& lambda, const BoundedPartition& mu,
                       std::optional<int> d) {
    require_same_context(lambda, mu);
    if (!d && !is_nonoverlapping(lambda, mu))
        throw std::invalid_argument("slide: " + to_string(lambda.partition()) + " overlaps " +
                                    to_string(mu.partition()) + " rotated");
    const BoxGeometry g =
        d ? quantum_geometry(lambda, mu, *d) : classical_geometry(lambda, mu);
    BoxSlide box = run_box_slide(g.height, lambda.ctx().width(), g.lam_h, g.mu_h);
    return SlideView{g.height,       lambda.ctx().width(),     g.lam_h,
                     g.mu_h,         std::move(box.nu_tilde),  std::move(box.trace)};
}

} // namespace schubert
