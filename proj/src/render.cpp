#include "schubert/render.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

namespace {

constexpr int kUnit = 20; // pixels per lattice step

char label_char(int v) {
    if (v >= 1 && v <= 9)
        return static_cast<char>('0' + v);
    if (v >= 10 && v <= 35)
        return static_cast<char>('a' + v - 10);
    return '?';
}

struct Canvas {
    long long row_min, row_max, col_min, col_max; // cell coordinate ranges, inclusive
    std::vector<std::string> lines;

    Canvas(long long r0, long long r1, long long c0, long long c1)
        : row_min(r0), row_max(r1), col_min(c0), col_max(c1),
          lines(r1 - r0 + 1, std::string(c1 - c0 + 1, ' ')) {}

    void put(long long r, long long c, char ch) {
        if (r < row_min || r > row_max || c < col_min || c > col_max)
            return;
        lines[r - row_min][c - col_min] = ch;
    }

    std::string str() const {
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }
};

struct Svg {
    std::ostringstream body;
    long long row_min, col_min;

    Svg(long long r0, long long c0) : row_min(r0), col_min(c0) {}

    long long x(long long col) const { return (col - col_min) * kUnit; }
    long long y(long long row) const { return (row - row_min) * kUnit; }

    void polyline(const std::vector<LatticePoint>& pts, const std::string& cls,
                  const std::string& extra_attrs = "") {
        body << "<polyline class=\"" << cls << "\" fill=\"none\" data-path=\"";
        for (size_t i = 0; i < pts.size(); ++i)
            body << (i ? " " : "") << pts[i].row << "," << pts[i].col;
        body << "\" points=\"";
        for (size_t i = 0; i < pts.size(); ++i)
            body << (i ? " " : "") << x(pts[i].col) << "," << y(pts[i].row);
        body << "\"" << (extra_attrs.empty() ? "" : " " + extra_attrs) << "/>\n";
    }

    void cell(long long r, long long c, const std::string& cls) {
        body << "<rect class=\"" << cls << "\" x=\"" << x(c - 1) << "\" y=\"" << y(r - 1)
             << "\" width=\"" << kUnit << "\" height=\"" << kUnit << "\"/>\n";
    }

    void rect_outline(long long r0, long long c0, long long r1, long long c1,
                      const std::string& cls) {
        body << "<rect class=\"" << cls << "\" fill=\"none\" x=\"" << x(c0) << "\" y=\"" << y(r0)
             << "\" width=\"" << (c1 - c0) * kUnit << "\" height=\"" << (r1 - r0) * kUnit
             << "\"/>\n";
    }

    void label(long long r, long long c, int v) {
        body << "<text x=\"" << x(c - 1) + kUnit / 2 << "\" y=\"" << y(r - 1) + kUnit / 2
             << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << v << "</text>\n";
    }

    void dot(long long r, long long c) {
        body << "<circle cx=\"" << x(c) << "\" cy=\"" << y(r) << "\" r=\"3\"/>\n";
    }

    std::string finish(long long row_max, long long col_max) const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (col_max - col_min) * kUnit
            << "\" height=\"" << (row_max - row_min) * kUnit << "\">\n"
            << "<style>.loop{stroke:#000;stroke-width:2}.ref{stroke:#888;stroke-width:1;"
               "stroke-dasharray:4 3}.frame{stroke:#333;stroke-width:1}.strip{fill:#bbb}"
               ".shape{fill:#ddd}text{font:12px monospace}</style>\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

} // namespace

std::vector<LatticePoint> loop_path_vertices(const CylindricLoop& loop, long long col_from,
                                             long long col_to) {
    std::vector<LatticePoint> raw;
    raw.push_back({loop_level(loop, col_from - 1), col_from});
    for (long long c = col_from; c < col_to; ++c) {
        raw.push_back({loop_level(loop, c), c});
        raw.push_back({loop_level(loop, c), c + 1});
    }
    raw.push_back({loop_level(loop, col_to), col_to});
    std::vector<LatticePoint> merged;
    for (const auto& p : raw) {
        if (!merged.empty() && merged.back() == p)
            continue;
        if (merged.size() >= 2) {
            const auto& a = merged[merged.size() - 2];
            const auto& b = merged.back();
            if ((a.row == b.row && b.row == p.row) || (a.col == b.col && b.col == p.col)) {
                merged.back() = p;
                continue;
            }
        }
        merged.push_back(p);
    }
    return merged;
}

std::string render_loops(const BoundedPartition& lambda, int max_shift, DiagramFormat format) {
    const int k = lambda.ctx().k, w = lambda.ctx().width();
    const long long col_lo = -w, col_hi = 2LL * w + max_shift;
    const long long row_lo = -k, row_hi = 2LL * k + max_shift;

    if (format == DiagramFormat::ascii) {
        Canvas canvas(row_lo + 1, row_hi, col_lo + 1, col_hi);
        for (long long r = row_lo + 1; r <= row_hi; ++r)
            for (long long c = col_lo + 1; c <= col_hi; ++c) {
                int below = 0;
                for (int s = 0; s <= max_shift; ++s)
                    if (r > loop_level(CylindricLoop{lambda, s}, c - 1))
                        ++below;
                canvas.put(r, c, below == 0 ? '.' : label_char(below));
            }
        return canvas.str();
    }

    Svg svg(row_lo, col_lo);
    svg.rect_outline(0, 0, k, w, "ref");
    for (int s = 0; s <= max_shift; ++s) {
        const CylindricLoop loop{lambda, s};
        svg.polyline(loop_path_vertices(loop, s - w, s + 2LL * w), "loop",
                     "data-shift=\"" + std::to_string(s) + "\"");
    }
    return svg.finish(row_hi, col_hi);
}

std::string render_toric(const BoundedPartition& lambda, const BoundedPartition& mu, int d,
                         DiagramFormat format) {
    require_same_context(lambda, mu);
    const int k = lambda.ctx().k, w = lambda.ctx().width();
    const CylindricLoop lam_loop{lambda, 0}, mu_loop{mu, d};
    const long long col_lo = -w, col_hi = 2LL * w;
    const long long row_lo = -k, row_hi = 2LL * k + std::max(d, 0);

    auto in_strip = [&](long long r, long long c) {
        return r > loop_level(lam_loop, c - 1) && r <= loop_level(mu_loop, c - 1);
    };
    auto above_lambda = [&](long long r, long long c) {
        return r <= loop_level(lam_loop, c - 1);
    };

    if (format == DiagramFormat::ascii) {
        Canvas canvas(row_lo + 1, row_hi, col_lo + 1, col_hi);
        for (long long r = row_lo + 1; r <= row_hi; ++r)
            for (long long c = col_lo + 1; c <= col_hi; ++c)
                canvas.put(r, c, in_strip(r, c) ? '#' : (above_lambda(r, c) ? '.' : ' '));
        return canvas.str();
    }

    Svg svg(row_lo, col_lo);
    for (long long r = row_lo + 1; r <= row_hi; ++r)
        for (long long c = col_lo + 1; c <= col_hi; ++c)
            if (in_strip(r, c))
                svg.cell(r, c, "strip");
    svg.rect_outline(0, 0, k, w, "ref");
    svg.polyline(loop_path_vertices(lam_loop, col_lo, col_hi), "loop", "data-loop=\"lambda\"");
    svg.polyline(loop_path_vertices(mu_loop, col_lo, col_hi), "loop", "data-loop=\"mu\"");
    // (k,0)-translate of lambda[0], bounding toric shapes from below.
    std::vector<LatticePoint> translate =
        loop_path_vertices(lam_loop, col_lo, col_hi);
    for (auto& p : translate)
        p.row += k;
    svg.polyline(translate, "ref", "data-loop=\"lambda-translate\"");
    return svg.finish(row_hi, col_hi);
}

std::string render_slide(const BoundedPartition& lambda, const BoundedPartition& mu,
                         std::optional<int> d, DiagramFormat format) {
    const SlideView view = slide_panels(lambda, mu, d);
    const int h = view.height, w = view.width;

    if (format == DiagramFormat::ascii) {
        std::string out;
        for (const auto& [name, diagram] : view.trace.stages) {
            out += name;
            out += ":\n";
            const bool left_justified = name == "left_justified";
            Canvas canvas(1, h, 1, w);
            for (int r = 1; r <= h; ++r)
                for (int c = 1; c <= w; ++c)
                    canvas.put(r, c, '.');
            for (int c = 1; c <= std::min(diagram.width, w); ++c) {
                // In the column panels the cells above the offset are empty;
                // in the final panel they are the lambda-role cells.
                int lam_fill = left_justified ? diagram.offsets[c - 1]
                                              : (c <= w ? view.lam_heights[c - 1] : 0);
                for (int r = 1; r <= lam_fill && !left_justified; ++r)
                    canvas.put(r, c, '#');
                if (left_justified)
                    for (int r = 1; r <= lam_fill; ++r)
                        canvas.put(r, c, '#');
                const auto& labels = diagram.labels[c - 1];
                for (size_t i = 0; i < labels.size(); ++i)
                    canvas.put(diagram.offsets[c - 1] + 1 + static_cast<long long>(i), c,
                               label_char(labels[i]));
            }
            out += canvas.str();
            out += '\n';
        }
        return out;
    }

    Svg svg(0, 0);
    long long panel_col = 0;
    for (const auto& [name, diagram] : view.trace.stages) {
        const bool left_justified = name == "left_justified";
        for (int c = 1; c <= diagram.width; ++c) {
            int lam_fill =
                left_justified ? diagram.offsets[c - 1] : view.lam_heights[c - 1];
            for (int r = 1; r <= lam_fill; ++r)
                svg.cell(r, panel_col + c, "shape");
            const auto& labels = diagram.labels[c - 1];
            for (size_t i = 0; i < labels.size(); ++i)
                svg.label(diagram.offsets[c - 1] + 1 + static_cast<long long>(i), panel_col + c,
                          labels[i]);
        }
        svg.rect_outline(0, panel_col, h, panel_col + w, "frame");
        panel_col += w + 2;
    }
    return svg.finish(h, panel_col - 2);
}

std::string render_frames(const BoundedPartition& lambda, long long i, DiagramFormat format) {
    const int k = lambda.ctx().k, w = lambda.ctx().width();
    const FrameView view = frame_view(lambda, i);
    const Frame& f = view.frame;
    const long long row_lo = std::min<long long>(0, f.top_row());
    const long long row_hi = std::max<long long>(k, f.anchor.row);
    const long long col_lo = std::min<long long>(0, f.anchor.col);
    const long long col_hi = std::max<long long>(w, f.right_col());

    if (format == DiagramFormat::ascii) {
        Canvas canvas(row_lo + 1, row_hi, col_lo + 1, col_hi);
        for (long long r = row_lo + 1; r <= row_hi; ++r)
            for (long long c = col_lo + 1; c <= col_hi; ++c) {
                const bool in_rect = r > 0 && r <= k && c > 0 && c <= w;
                const bool in_frame = r > f.top_row() && r <= f.anchor.row && c > f.anchor.col &&
                                      c <= f.right_col();
                canvas.put(r, c, in_rect && in_frame ? '#' : (in_frame ? '+' : (in_rect ? '.' : ' ')));
            }
        return canvas.str();
    }

    Svg svg(row_lo, col_lo);
    svg.rect_outline(0, 0, k, w, "ref");
    svg.rect_outline(f.top_row(), f.anchor.col, f.anchor.row, f.right_col(), "frame");
    svg.polyline(loop_path_vertices(CylindricLoop{lambda, 0}, col_lo, col_hi), "loop",
                 "data-loop=\"lambda\"");
    svg.dot(k, 0);
    svg.dot(f.anchor.row, f.anchor.col);
    return svg.finish(row_hi, col_hi);
}

} // namespace schubert
