#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/lr.hpp"

// The sliding construction: place the 180-degree rotation of mu in the SE
// corner, slide its columns up against lambda, left-justify all rows.  The
// resulting shape nu(lambda, mu) carries the class with coefficient exactly 1,
// and the carried labels form an LR filling witnessing it.  The quantum
// variant runs the same slide inside the union of two frames on the cylinder.

namespace schubert {

/// Raised by the quantum slide when the configured region is malformed; a
/// harness reports these separately from proposition failures.
struct geometry_anomaly : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Column-convex diagram of labeled cells: per column, the number of empty
/// rows above the first labeled cell and the labels read downward.
struct ColumnDiagram {
    int width = 0;
    std::vector<int> offsets;
    std::vector<std::vector<int>> labels;
};

/// Snapshots of the slide: initial, after the vertical slide, after
/// left-justification.  The label multiset is preserved across stages.
struct SlideTrace {
    std::vector<std::pair<std::string, ColumnDiagram>> stages;
};

struct SlideResult {
    BoundedPartition nu;
    SkewTableau witness;
    SlideTrace trace;
};

/// Heights of the spaces between the columns of lambda and rotated mu,
/// sorted decreasingly.  Requires a nonoverlapping pair.
Partition rho(const BoundedPartition& lambda, const BoundedPartition& mu);

/// nu(lambda, mu) = complement of the conjugate of rho.
BoundedPartition nu_classical(const BoundedPartition& lambda, const BoundedPartition& mu);

SlideResult slide(const BoundedPartition& lambda, const BoundedPartition& mu);

/// The conjectured degree-d class: slides the region between lambda[0] and
/// complement(mu)[d] inside the union of the frame anchored at (k+d, d) and
/// the frame anchored at the lowest point of lambda[0] on column d, then
/// keeps the last k parts.  Requires d_min <= d <= d_max.
BoundedPartition nu_quantum(const BoundedPartition& lambda, const BoundedPartition& mu, int d);

/// Working-box geometry plus the trace, for rendering the slide panels.
/// Without a degree this is the classical slide in the plain rectangle.
struct SlideView {
    int height = 0;
    int width = 0;
    std::vector<int> lam_heights; // lambda-role column heights, top-justified
    std::vector<int> mu_heights;  // mu-role column heights, bottom-justified
    std::vector<int> nu_tilde;    // resulting row lengths, all box rows
    SlideTrace trace;
};

SlideView slide_panels(const BoundedPartition& lambda, const BoundedPartition& mu,
                       std::optional<int> d);

} // namespace schubert
