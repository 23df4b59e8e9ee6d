#pragma once

#include <string>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/cylindric.hpp"
#include "schubert/slide.hpp"

// Deterministic diagram documents.  ASCII uses one character cell per
// lattice box; SVG uses a fixed unit-square grid with border paths as
// polylines (each polyline also carries its matrix coordinates in a
// data-path attribute).

namespace schubert {

enum class DiagramFormat { ascii, svg };

/// Merged direction-change vertices of the loop over columns
/// [col_from, col_to], in matrix coordinates.
std::vector<LatticePoint> loop_path_vertices(const CylindricLoop& loop, long long col_from,
                                             long long col_to);

/// Loops lambda[0] .. lambda[max_shift].
std::string render_loops(const BoundedPartition& lambda, int max_shift, DiagramFormat format);

/// The strip between lambda[0] and mu[d], with the (k,0)-translate of
/// lambda[0] for reference.
std::string render_toric(const BoundedPartition& lambda, const BoundedPartition& mu, int d,
                         DiagramFormat format);

/// The three sliding panels; with a degree, the quantum working box.
std::string render_slide(const BoundedPartition& lambda, const BoundedPartition& mu,
                         std::optional<int> d, DiagramFormat format);

/// The rectangle, lambda[0], and the frame anchored i steps NE along it.
std::string render_frames(const BoundedPartition& lambda, long long i, DiagramFormat format);

} // namespace schubert
