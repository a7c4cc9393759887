#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "fiber.hpp"
#include "poly_parse.hpp"
#include "rational.hpp"
#include "system.hpp"
#include "unipoly.hpp"

namespace pinchuk {

/// Axis-aligned rational viewport with a per-axis cell count.
struct Window {
    Rational x_min, y_min, x_max, y_max;
    long resolution = 512; ///< cells per axis; the node grid is (resolution+1)^2
};

namespace detail {

inline void validate_window(const Window& w) {
    if (!(w.x_min < w.x_max) || !(w.y_min < w.y_max))
        throw std::invalid_argument("window must have positive extent");
    if (w.resolution < 2) throw std::invalid_argument("window resolution must be >= 2");
}

} // namespace detail

/// Plot-precision curve: ordered points with a label naming what the curve
/// is (the image curve "C", a preimage component, or one of A1/A2).
struct Polyline {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Exact sample row of the image curve.
struct CurvePoint {
    Rational s, a, b;
};

/// n exact samples of phi at uniform parameter steps over [s0, s1].
inline std::vector<CurvePoint> sample_curve_exact(const Rational& s0, const Rational& s1,
                                                  long n) {
    if (!(s0 < s1)) throw std::invalid_argument("curve sampling requires s0 < s1");
    if (n < 2) throw std::invalid_argument("curve sampling requires n >= 2");
    const CurveC& c = curve_c();
    std::vector<CurvePoint> rows;
    rows.reserve(static_cast<std::size_t>(n));
    Rational step((s1 - s0) / (n - 1));
    for (long i = 0; i < n; ++i) {
        Rational s(i == n - 1 ? s1 : Rational(s0 + i * step));
        rows.push_back({s, c.phi1(s), c.phi2(s)});
    }
    return rows;
}

/// The same samples converted once to plotting precision.
inline Polyline sample_curve(const Rational& s0, const Rational& s1, long n) {
    Polyline line;
    line.label = "C";
    for (const CurvePoint& row : sample_curve_exact(s0, s1, n))
        line.points.emplace_back(to_double(row.a), to_double(row.b));
    return line;
}

/// Per-node classification of a target-plane window.
enum class NodeLabel { OffEven, OffOdd, OnCurve, Exceptional };

inline const char* to_string(NodeLabel label) {
    switch (label) {
        case NodeLabel::OffEven: return "off_curve_even";
        case NodeLabel::OffOdd: return "off_curve_odd";
        case NodeLabel::OnCurve: return "on_curve";
        case NodeLabel::Exceptional: return "exceptional";
    }
    return "?";
}

/// Row-major (y outer, x inner) node labels over a window's grid.
struct LabelGrid {
    Window window;
    long nx = 0, ny = 0;
    std::vector<NodeLabel> labels;
    NodeLabel at(long i, long j) const { return labels[static_cast<std::size_t>(j * nx + i)]; }
};

/// Classify every grid node of a target-plane window exactly.  The workhorse
/// is the sign of the closed-form membership resultant; the zero locus falls
/// back to the full point classifier.
inline LabelGrid classify_grid(const Window& w) {
    detail::validate_window(w);
    LabelGrid grid;
    grid.window = w;
    grid.nx = w.resolution + 1;
    grid.ny = w.resolution + 1;
    grid.labels.reserve(static_cast<std::size_t>(grid.nx * grid.ny));
    Rational astep((w.x_max - w.x_min) / w.resolution);
    Rational bstep((w.y_max - w.y_min) / w.resolution);
    const auto& K = curve_c().K;
    for (long j = 0; j < grid.ny; ++j) {
        Rational b(j == grid.ny - 1 ? w.y_max : Rational(w.y_min + j * bstep));
        for (long i = 0; i < grid.nx; ++i) {
            Rational a(i == grid.nx - 1 ? w.x_max : Rational(w.x_min + i * astep));
            std::pair<Rational, Rational> node{a, b};
            NodeLabel label;
            if (node == K[0] || node == K[1]) {
                label = NodeLabel::Exceptional;
            } else {
                int s = sign(curve_membership_value(a, b));
                if (s > 0) {
                    label = NodeLabel::OffEven;
                } else if (s < 0) {
                    label = NodeLabel::OffOdd;
                } else if (!on_curve(a, b).empty()) {
                    label = NodeLabel::OnCurve;
                } else {
                    // The membership resultant also vanishes at the single
                    // extra Zariski point, which is off the curve.
                    label = side_of_curve(a, b) == Parity::Even ? NodeLabel::OffEven
                                                               : NodeLabel::OffOdd;
                }
            }
            grid.labels.push_back(label);
        }
    }
    return grid;
}

/// Signed shading data for a window: the per-node sign (+1/-1, exact zeros
/// folded to +1) of whatever field the producer traced.
struct ParityField {
    Window window;
    long nx = 0, ny = 0;
    std::vector<signed char> signs;
};

/// Contours of the domain plane: the preimage components of the image curve
/// (traced through the membership resultant pulled back along F) plus the
/// two curves A1 and A2 making up f^{-1}(0).
struct ContourSet {
    Window window;
    std::vector<Polyline> curves;
    ParityField parity;            ///< sign of the pulled-back membership value
    long preimage_components = 0; ///< number of "preimage_C_*" polylines
};

namespace detail {

inline double clamped_double(const Rational& v) {
    double d = to_double(v);
    if (std::isfinite(d)) return d;
    return d > 0 ? std::numeric_limits<double>::max() : -std::numeric_limits<double>::max();
}

/// March one sign field.  Chains are assembled deterministically: saddle
/// cells pair crossings by the lower-left node sign, chains are ordered by
/// their smallest participating edge id, and vertices interpolate the node
/// values (falling back to edge midpoints when the converted values
/// degenerate).
inline std::vector<std::vector<long>> march_chains(const std::vector<signed char>& sgn,
                                                   long nx, long ny) {
    const long nH = (nx - 1) * ny; // horizontal edges, id = j*(nx-1)+i
    const long nE = nH + nx * (ny - 1);
    auto hid = [nx](long i, long j) { return j * (nx - 1) + i; };
    auto vid = [nx, nH](long i, long j) { return nH + j * nx + i; };
    auto node = [nx](long i, long j) { return static_cast<std::size_t>(j * nx + i); };

    std::vector<signed char> degree(static_cast<std::size_t>(nE), 0);
    std::vector<std::array<long, 2>> adj(static_cast<std::size_t>(nE), {-1, -1});
    auto link = [&](long e1, long e2) {
        adj[static_cast<std::size_t>(e1)][degree[static_cast<std::size_t>(e1)]++] = e2;
        adj[static_cast<std::size_t>(e2)][degree[static_cast<std::size_t>(e2)]++] = e1;
    };

    for (long j = 0; j + 1 < ny; ++j) {
        for (long i = 0; i + 1 < nx; ++i) {
            signed char s00 = sgn[node(i, j)], s10 = sgn[node(i + 1, j)];
            signed char s01 = sgn[node(i, j + 1)], s11 = sgn[node(i + 1, j + 1)];
            long bottom = s00 != s10 ? hid(i, j) : -1;
            long top = s01 != s11 ? hid(i, j + 1) : -1;
            long left = s00 != s01 ? vid(i, j) : -1;
            long right = s10 != s11 ? vid(i + 1, j) : -1;
            int crossings = (bottom >= 0) + (top >= 0) + (left >= 0) + (right >= 0);
            if (crossings == 2) {
                long first = -1;
                for (long e : {bottom, top, left, right}) {
                    if (e < 0) continue;
                    if (first < 0) {
                        first = e;
                    } else {
                        link(first, e);
                    }
                }
            } else if (crossings == 4) {
                if (s00 > 0) {
                    link(left, bottom);
                    link(right, top);
                } else {
                    link(left, top);
                    link(right, bottom);
                }
            }
        }
    }

    std::vector<bool> visited(static_cast<std::size_t>(nE), false);
    std::vector<std::vector<long>> chains;
    auto walk = [&](long start) {
        std::vector<long> chain{start};
        visited[static_cast<std::size_t>(start)] = true;
        long prev = -1, cur = start;
        while (true) {
            long next = -1;
            for (int k = 0; k < degree[static_cast<std::size_t>(cur)]; ++k) {
                long cand = adj[static_cast<std::size_t>(cur)][k];
                if (cand != prev && !visited[static_cast<std::size_t>(cand)]) {
                    next = cand;
                    break;
                }
            }
            if (next < 0) break;
            visited[static_cast<std::size_t>(next)] = true;
            chain.push_back(next);
            prev = cur;
            cur = next;
        }
        return chain;
    };
    // Open chains first (endpoints have one neighbour), then closed loops;
    // both scans go by ascending edge id for reproducible output.
    for (long e = 0; e < nE; ++e)
        if (degree[static_cast<std::size_t>(e)] == 1 && !visited[static_cast<std::size_t>(e)])
            chains.push_back(walk(e));
    for (long e = 0; e < nE; ++e)
        if (degree[static_cast<std::size_t>(e)] == 2 && !visited[static_cast<std::size_t>(e)]) {
            std::vector<long> loop = walk(e);
            loop.push_back(e); // close the loop
            chains.push_back(loop);
        }
    return chains;
}

inline std::vector<Polyline> contour_polylines(const std::vector<signed char>& sgn,
                                               const std::vector<double>& val, long nx, long ny,
                                               const Window& w,
                                               const std::string& label_prefix,
                                               bool indexed_labels, long* component_count) {
    auto chains = march_chains(sgn, nx, ny);
    const long nH = (nx - 1) * ny;
    double x0 = to_double(w.x_min), y0 = to_double(w.y_min);
    double xstep = (to_double(w.x_max) - x0) / static_cast<double>(w.resolution);
    double ystep = (to_double(w.y_max) - y0) / static_cast<double>(w.resolution);
    auto vertex = [&](long e) -> std::pair<double, double> {
        long i, j;
        bool horizontal = e < nH;
        double v0, v1;
        if (horizontal) {
            i = e % (nx - 1);
            j = e / (nx - 1);
            v0 = val[static_cast<std::size_t>(j * nx + i)];
            v1 = val[static_cast<std::size_t>(j * nx + i + 1)];
        } else {
            long e2 = e - nH;
            i = e2 % nx;
            j = e2 / nx;
            v0 = val[static_cast<std::size_t>(j * nx + i)];
            v1 = val[static_cast<std::size_t>((j + 1) * nx + i)];
        }
        double denom = v0 - v1;
        double t = denom != 0.0 ? v0 / denom : 0.5;
        if (!(t >= 0.0 && t <= 1.0)) t = 0.5;
        if (horizontal) return {x0 + (static_cast<double>(i) + t) * xstep, y0 + j * ystep};
        return {x0 + i * xstep, y0 + (static_cast<double>(j) + t) * ystep};
    };

    // Deterministic component order: by smallest edge id in the chain.
    std::vector<std::pair<long, std::size_t>> order;
    for (std::size_t k = 0; k < chains.size(); ++k) {
        long smallest = chains[k][0];
        for (long e : chains[k]) smallest = std::min(smallest, e);
        order.emplace_back(smallest, k);
    }
    std::sort(order.begin(), order.end());

    std::vector<Polyline> lines;
    long index = 0;
    for (const auto& [smallest, k] : order) {
        Polyline line;
        line.label = indexed_labels ? label_prefix + std::to_string(index) : label_prefix;
        ++index;
        for (long e : chains[k]) line.points.push_back(vertex(e));
        lines.push_back(std::move(line));
    }
    if (component_count) *component_count = static_cast<long>(lines.size());
    return lines;
}

} // namespace detail

/// Trace the preimage of the image curve over a domain-plane window, along
/// with A1 and A2.  All node signs are exact; floating point enters only
/// when placing vertices along sign-change edges.
inline ContourSet preimage_curve(const Window& w) {
    detail::validate_window(w);
    const long nx = w.resolution + 1, ny = w.resolution + 1;
    const std::size_t nnodes = static_cast<std::size_t>(nx * ny);
    const PinchukSystem& sys = build_system();

    static const MultiPoly curve1 = parse_poly("x^2*y - x + 1", {"x", "y"});
    static const MultiPoly curve2 = parse_poly("(x*y - 1)^2 + y", {"x", "y"});

    std::vector<signed char> rsgn(nnodes), s1(nnodes), s2(nnodes);
    std::vector<double> rval(nnodes), v1(nnodes), v2(nnodes);

    Rational xstep((w.x_max - w.x_min) / w.resolution);
    Rational ystep((w.y_max - w.y_min) / w.resolution);
    for (long i = 0; i < nx; ++i) {
        Rational xi(i == nx - 1 ? w.x_max : Rational(w.x_min + i * xstep));
        std::map<std::string, Rational> bind{{"x", xi}};
        UniPoly pcol = specialize_to_unipoly(sys.p, "y", bind);
        UniPoly qcol = specialize_to_unipoly(sys.q, "y", bind);
        UniPoly c1col = specialize_to_unipoly(curve1, "y", bind);
        UniPoly c2col = specialize_to_unipoly(curve2, "y", bind);
        for (long j = 0; j < ny; ++j) {
            Rational yj(j == ny - 1 ? w.y_max : Rational(w.y_min + j * ystep));
            std::size_t n = static_cast<std::size_t>(j * nx + i);
            Rational rv = curve_membership_value(pcol(yj), qcol(yj));
            rsgn[n] = sign(rv) < 0 ? -1 : +1;
            rval[n] = detail::clamped_double(rv);
            Rational c1v = c1col(yj);
            s1[n] = sign(c1v) < 0 ? -1 : +1;
            v1[n] = detail::clamped_double(c1v);
            Rational c2v = c2col(yj);
            s2[n] = sign(c2v) < 0 ? -1 : +1;
            v2[n] = detail::clamped_double(c2v);
        }
    }

    ContourSet out;
    out.window = w;
    out.curves = detail::contour_polylines(rsgn, rval, nx, ny, w, "preimage_C_", true,
                                           &out.preimage_components);
    for (Polyline& line : detail::contour_polylines(s1, v1, nx, ny, w, "A1", false, nullptr))
        out.curves.push_back(std::move(line));
    for (Polyline& line : detail::contour_polylines(s2, v2, nx, ny, w, "A2", false, nullptr))
        out.curves.push_back(std::move(line));
    out.parity = ParityField{w, nx, ny, std::move(rsgn)};
    return out;
}

/// Everything one figure can hold: a domain pane (contours + parity
/// shading) and a target pane (curve polylines, node labels, marked points).
struct SvgFigure {
    const ContourSet* domain = nullptr;
    std::vector<Polyline> target_curves;
    const LabelGrid* target_grid = nullptr;
    std::vector<std::pair<double, double>> target_marks;
};

namespace detail {

inline std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/// Map window coordinates to pane-local pixels (y flipped for SVG).
struct PaneTransform {
    double x0, y0, x1, y1; // window corners
    double ox, oy, size;   // pixel origin and square size
    std::pair<double, double> operator()(double x, double y) const {
        double px = ox + (x - x0) / (x1 - x0) * size;
        double py = oy + (y1 - y) / (y1 - y0) * size;
        return {px, py};
    }
};

inline PaneTransform pane_transform(const Window& w, double ox, double oy, double size) {
    return {to_double(w.x_min), to_double(w.y_min), to_double(w.x_max), to_double(w.y_max),
            ox, oy, size};
}

inline const char* polyline_color(const std::string& label) {
    static const char* palette[] = {"#1f77b4", "#2ca02c", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2"};
    if (label == "A1") return "#d62728";
    if (label == "A2") return "#9467bd";
    if (label == "C") return "#1f77b4";
    if (label.rfind("preimage_C_", 0) == 0) {
        std::size_t idx = 0;
        for (char ch : label.substr(11)) idx = idx * 10 + static_cast<std::size_t>(ch - '0');
        return palette[idx % (sizeof palette / sizeof *palette)];
    }
    return "#333333";
}

inline void emit_pane_frame(std::ostream& out, const PaneTransform& tr, const char* title) {
    out << "<rect x=\"" << fmt6(tr.ox) << "\" y=\"" << fmt6(tr.oy) << "\" width=\""
        << fmt6(tr.size) << "\" height=\"" << fmt6(tr.size)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt6(tr.ox + tr.size / 2) << "\" y=\"" << fmt6(tr.oy - 8)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << title
        << "</text>\n";
    out << "<text x=\"" << fmt6(tr.ox) << "\" y=\"" << fmt6(tr.oy + tr.size + 16)
        << "\" font-family=\"sans-serif\" font-size=\"10\">(" << fmt6(tr.x0) << ", "
        << fmt6(tr.y0) << ")</text>\n";
    out << "<text x=\"" << fmt6(tr.ox + tr.size) << "\" y=\"" << fmt6(tr.oy - 8)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">(" << fmt6(tr.x1)
        << ", " << fmt6(tr.y1) << ")</text>\n";
}

inline void emit_polyline(std::ostream& out, const Polyline& line, const PaneTransform& tr) {
    if (line.points.size() < 2) return;
    out << "<path data-label=\"" << line.label << "\" fill=\"none\" stroke=\""
        << polyline_color(line.label) << "\" stroke-width=\"1.2\" d=\"";
    bool first = true;
    for (const auto& [x, y] : line.points) {
        auto [px, py] = tr(x, y);
        out << (first ? "M" : " L") << fmt6(px) << "," << fmt6(py);
        first = false;
    }
    out << "\"/>\n";
}

/// Run-length shading of a sign/label row: one rect per run keeps the file
/// compact without changing the rendered result.  `key` maps a node to a
/// small integer class and `fill` maps that class to its colour.
template <class Field, class KeyFn, class FillFn>
inline void emit_node_shading(std::ostream& out, const Window& w, long nx, long ny,
                              const Field& field, const PaneTransform& tr, KeyFn key,
                              FillFn fill_of) {
    double cellw = tr.size / static_cast<double>(w.resolution);
    for (long j = 0; j < ny; ++j) {
        long i = 0;
        while (i < nx) {
            long run = i + 1;
            while (run < nx && key(field, i, j) == key(field, run, j)) ++run;
            const char* fill = fill_of(key(field, i, j));
            if (fill) {
                // Node-centred cells, clipped to the pane.
                double left = tr.ox + (static_cast<double>(i) - 0.5) * cellw;
                double right = tr.ox + (static_cast<double>(run - 1) + 0.5) * cellw;
                double top = tr.oy + tr.size - (static_cast<double>(j) + 0.5) * cellw;
                left = std::max(left, tr.ox);
                right = std::min(right, tr.ox + tr.size);
                double bottom = std::min(top + cellw, tr.oy + tr.size);
                top = std::max(top, tr.oy);
                out << "<rect x=\"" << fmt6(left) << "\" y=\"" << fmt6(top) << "\" width=\""
                    << fmt6(right - left) << "\" height=\"" << fmt6(bottom - top)
                    << "\" fill=\"" << fill << "\"/>\n";
            }
            i = run;
        }
    }
}

} // namespace detail

/// Write the figure as a deterministic standalone SVG: identical inputs
/// produce byte-identical output.
inline void emit_svg(const SvgFigure& fig, std::ostream& out) {
    const double pane = 480, margin = 48, gap = 64;
    int panes = (fig.domain ? 1 : 0) +
                (!fig.target_curves.empty() || fig.target_grid || !fig.target_marks.empty() ? 1 : 0);
    if (panes == 0) throw std::invalid_argument("figure has no content");
    double width = margin * 2 + pane * panes + (panes == 2 ? gap : 0);
    double height = margin * 2 + pane;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt6(width)
        << "\" height=\"" << detail::fmt6(height) << "\" viewBox=\"0 0 "
        << detail::fmt6(width) << " " << detail::fmt6(height) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << detail::fmt6(width) << "\" height=\""
        << detail::fmt6(height) << "\" fill=\"#ffffff\"/>\n";

    double ox = margin;
    if (fig.domain) {
        const ContourSet& dom = *fig.domain;
        auto tr = detail::pane_transform(dom.window, ox, margin, pane);
        out << "<g>\n";
        auto key = [](const ParityField& f, long i, long j) {
            return static_cast<int>(f.signs[static_cast<std::size_t>(j * f.nx + i)]);
        };
        auto fill = [](int k) -> const char* { return k > 0 ? "#eef2fb" : "#fdeee0"; };
        detail::emit_node_shading(out, dom.window, dom.parity.nx, dom.parity.ny, dom.parity, tr,
                                  key, fill);
        for (const Polyline& line : dom.curves) detail::emit_polyline(out, line, tr);
        detail::emit_pane_frame(out, tr, "source plane (x, y)");
        out << "</g>\n";
        ox += pane + gap;
    }
    if (panes == 2 || !fig.domain) {
        Window tw;
        if (fig.target_grid) {
            tw = fig.target_grid->window;
        } else {
            // Bounding window of the target content.
            double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
            for (const Polyline& line : fig.target_curves)
                for (auto& [x, y] : line.points) {
                    xlo = std::min(xlo, x), xhi = std::max(xhi, x);
                    ylo = std::min(ylo, y), yhi = std::max(yhi, y);
                }
            for (auto& [x, y] : fig.target_marks) {
                xlo = std::min(xlo, x), xhi = std::max(xhi, x);
                ylo = std::min(ylo, y), yhi = std::max(yhi, y);
            }
            if (!(xlo < xhi)) xlo = -1, xhi = 1;
            if (!(ylo < yhi)) ylo = -1, yhi = 1;
            tw.x_min = Rational(xlo);
            tw.x_max = Rational(xhi);
            tw.y_min = Rational(ylo);
            tw.y_max = Rational(yhi);
            tw.resolution = 2;
        }
        auto tr = detail::pane_transform(tw, ox, margin, pane);
        out << "<g>\n";
        if (fig.target_grid) {
            auto key = [](const LabelGrid& g, long i, long j) {
                return static_cast<int>(g.at(i, j));
            };
            auto fill = [](int k) -> const char* {
                switch (static_cast<NodeLabel>(k)) {
                    case NodeLabel::OffEven: return "#eef2fb";
                    case NodeLabel::OffOdd: return "#fdeee0";
                    case NodeLabel::OnCurve: return "#c6d7f2";
                    case NodeLabel::Exceptional: return "#f5c6c6";
                }
                return "#ffffff";
            };
            detail::emit_node_shading(out, tw, fig.target_grid->nx, fig.target_grid->ny,
                                      *fig.target_grid, tr, key, fill);
        }
        for (const Polyline& line : fig.target_curves) detail::emit_polyline(out, line, tr);
        for (const auto& [x, y] : fig.target_marks) {
            auto [px, py] = tr(x, y);
            out << "<circle cx=\"" << detail::fmt6(px) << "\" cy=\"" << detail::fmt6(py)
                << "\" r=\"4\" fill=\"#d62728\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        }
        detail::emit_pane_frame(out, tr, "target plane (a, b)");
        out << "</g>\n";
    }
    out << "</svg>\n";
}

/// CSV of exact curve samples; rationals stay exact num/den text.
inline void write_curve_csv(const std::vector<CurvePoint>& rows, std::ostream& out) {
    out << "s,a,b\n";
    for (const CurvePoint& row : rows)
        out << to_string(row.s) << "," << to_string(row.a) << "," << to_string(row.b) << "\n";
}

/// CSV of exact grid labels, row-major.
inline void write_grid_csv(const LabelGrid& grid, std::ostream& out) {
    out << "x,y,label\n";
    Rational xstep((grid.window.x_max - grid.window.x_min) / grid.window.resolution);
    Rational ystep((grid.window.y_max - grid.window.y_min) / grid.window.resolution);
    for (long j = 0; j < grid.ny; ++j) {
        Rational y(j == grid.ny - 1 ? grid.window.y_max
                                    : Rational(grid.window.y_min + j * ystep));
        for (long i = 0; i < grid.nx; ++i) {
            Rational x(i == grid.nx - 1 ? grid.window.x_max
                                        : Rational(grid.window.x_min + i * xstep));
            out << to_string(x) << "," << to_string(y) << "," << to_string(grid.at(i, j))
                << "\n";
        }
    }
}

} // namespace pinchuk
