#pragma once

#include <set>
#include <utility>

#include "schubert/core.hpp"

// Cylindric loops, frames and toric shapes: the border of a partition viewed
// on the cylinder Z^2 / Z.(-k, n-k), in matrix coordinates (the point (i,j)
// is i steps down and j steps right from the origin).

namespace schubert {

struct LatticePoint {
    long long row = 0;
    long long col = 0;

    bool operator==(const LatticePoint&) const = default;
};

/// Border path of `base` translated by (shift, shift), continued periodically
/// under translation by (-k, n-k).  The canonical planar representative runs
/// from (k+shift, shift) to (shift, shift+n-k).
struct CylindricLoop {
    BoundedPartition base;
    int shift = 0;
};

/// Translate of the rectangle; the anchor is its SW corner.
struct Frame {
    LatticePoint anchor;
    RectContext ctx;

    long long top_row() const { return anchor.row - ctx.k; }
    long long right_col() const { return anchor.col + ctx.width(); }
};

/// Row of the loop's horizontal segment over the column interval [x, x+1],
/// for any integer x; quasi-periodic: level(x + n-k) = level(x) - k.
long long loop_level(const CylindricLoop& loop, long long x);

/// Minimal and maximal row coordinates of the loop on a vertical line.  The
/// loop crosses each column in one vertical segment, possibly degenerate;
/// columns congruent to the anchor column use the representative's clamped
/// endpoints (the seam between periods).
std::pair<long long, long long> loop_height_at(const CylindricLoop& loop, long long col);

/// mu[d] weakly right and below lambda[0], columnwise over one period.
bool is_cylindric_shape(const BoundedPartition& mu, int d, const BoundedPartition& lambda);

/// mu[d] between lambda[0] and its (k,0)-translate, columnwise.
bool is_toric(const BoundedPartition& mu, int d, const BoundedPartition& lambda);

/// { d >= 0 : complement(mu)/d/lambda is toric }; equals q_support.
std::set<int> toric_support(const BoundedPartition& lambda, const BoundedPartition& mu);

struct FrameView {
    BoundedPartition partition;
    int vertical_offset = 0;
    Frame frame;
};

/// Slides the frame anchor i steps NE along lambda[0] and cuts out the
/// partition framed there; equals (S^i(lambda), phi_i(lambda)).
FrameView frame_view(const BoundedPartition& lambda, long long i);

} // namespace schubert
