#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curve.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "fiber.hpp"
#include "render.hpp"
#include "system.hpp"

namespace pinchuk::cli {

namespace detail {

using nlohmann::json;

inline json interval_json(const IsolatingInterval& iv) {
    return {{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"exact", iv.exact}};
}

inline json box_json(const QInterval& box) {
    return {{"lo", to_string(box.lo)}, {"hi", to_string(box.hi)}};
}

inline std::string approx(const Rational& v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", to_double(v));
    return buf;
}

inline std::string interval_text(const IsolatingInterval& iv) {
    if (iv.exact) return "= " + to_string(iv.lo);
    return "in (" + to_string(iv.lo) + ", " + to_string(iv.hi) + ") (~" +
           approx(Rational((iv.lo + iv.hi) / 2)) + ")";
}

inline std::string box_text(const QInterval& box) {
    if (box.lo == box.hi) return "= " + to_string(box.lo);
    return "in [" + to_string(box.lo) + ", " + to_string(box.hi) + "] (~" +
           approx(box.midpoint()) + ")";
}

/// Cross-checks that tie the closed-form membership value and the fiber
/// polynomial back to the elimination module, appended to the core identity
/// suite by `verify`.
inline void append_cross_checks(IdentityReport& report) {
    auto add = [&](const std::string& name, bool pass, const std::string& what) {
        report.checks.push_back({name, pass, pass ? "" : what});
        report.all_pass = report.all_pass && pass;
    };

    const CurveC& c = curve_c();
    {
        bool ok = true;
        std::string what;
        const std::pair<Rational, Rational> probes[] = {
            {3, 5}, {-7, 11}, {Rational(1) / 2, Rational(-3) / 4}};
        for (const auto& [a0, b0] : probes) {
            UniPoly d({-a0, Rational(2), Rational(1)});
            UniPoly shifted = c.phi2 - UniPoly::constant(b0);
            Rational closed = curve_membership_value(a0, b0);
            if (closed != resultant(d, shifted) || closed != sylvester_resultant(d, shifted)) {
                ok = false;
                what = "mismatch at (" + to_string(a0) + ", " + to_string(b0) + ")";
                break;
            }
        }
        add("membership value matches both resultant algorithms", ok, what);
    }
    {
        bool zero_on_slice = discriminant(build_W(0, 7)) == 0 &&
                             discriminant(build_W(0, -4)) == 0 &&
                             discriminant(build_W(-1, 9)) == 0;
        add("fiber polynomial discriminant vanishes over the boundary slices", zero_on_slice,
            "a discriminant over a = 0 or a = -1 was nonzero");
        bool nonzero_generic =
            discriminant(build_W(3, 0)) != 0 && discriminant(build_W(3, 3142)) != 0;
        add("fiber polynomial discriminant is nonzero at generic targets", nonzero_generic,
            "a generic-target discriminant vanished");
    }
    {
        GridPositivityReport grid =
            jacobian_positive_on_grid(Rational(-5), Rational(5), Rational(1) / 10);
        std::string what;
        if (!grid.all_positive)
            what = "non-positive value at (" + to_string(grid.first_nonpositive->first) + ", " +
                   to_string(grid.first_nonpositive->second) + ")";
        add("Jacobian determinant positive at all " + std::to_string(grid.points_checked) +
                " grid nodes of [-5,5]^2",
            grid.all_positive, what);
    }
}

inline int run_verify(bool json_mode, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    IdentityReport report = verify_identities();
    append_cross_checks(report);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json_mode) {
        json j{{"schema", 1}, {"command", "verify"}};
        j["checks"] = json::array();
        for (const IdentityCheck& check : report.checks)
            j["checks"].push_back(
                {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
        j["all_pass"] = report.all_pass;
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
    } else {
        std::size_t failed = 0;
        for (const IdentityCheck& check : report.checks) {
            if (check.pass) {
                out << "ok   " << check.name;
                if (!check.detail.empty()) out << "  [" << check.detail << "]";
                out << "\n";
            } else {
                ++failed;
                out << "FAIL " << check.name << "  [" << check.detail << "]\n";
            }
        }
        std::ostringstream summary;
        summary.setf(std::ios::fixed);
        summary.precision(1);
        summary << ms;
        if (report.all_pass)
            out << "verify: " << report.checks.size() << " checks passed (" << summary.str()
                << " ms)\n";
        else
            out << "verify: " << failed << " of " << report.checks.size() << " checks FAILED ("
                << summary.str() << " ms)\n";
    }
    return report.all_pass ? 0 : 1;
}

inline int run_fiber(const Rational& a, const Rational& b, const Rational& eps, bool json_mode,
                     std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    FiberReport report = real_fiber(a, b, eps);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json_mode) {
        json j{{"schema", 1}, {"command", "fiber"}};
        j["point"] = {to_string(a), to_string(b)};
        j["eps"] = to_string(eps);
        j["real_count"] = report.real_count;
        j["complex_count"] = report.complex_count;
        j["zero_multiplicity"] = report.zero_multiplicity;
        j["escaping_roots"] = report.escaping_roots;
        j["boundary_contribution"] = report.boundary_contribution;
        j["genuine_roots"] = json::array();
        for (const IsolatingInterval& iv : report.genuine_roots)
            j["genuine_roots"].push_back(interval_json(iv));
        j["escaping_intervals"] = json::array();
        for (const IsolatingInterval& iv : report.escaping_intervals)
            j["escaping_intervals"].push_back(interval_json(iv));
        j["preimages"] = json::array();
        for (const FiberPreimage& pre : report.preimages)
            j["preimages"].push_back({{"source", to_string(pre.source)},
                                      {"exact", pre.exact},
                                      {"x", box_json(pre.x)},
                                      {"y", box_json(pre.y)}});
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "fiber over (" << to_string(a) << ", " << to_string(b) << ")\n";
    out << "  real preimages:    " << report.real_count << "\n";
    out << "  complex preimages: " << report.complex_count << "\n";
    if (report.zero_multiplicity)
        out << "  root f = 0 of multiplicity " << report.zero_multiplicity
            << " (carries no preimage)\n";
    for (const IsolatingInterval& iv : report.escaping_intervals)
        out << "  escaping root f " << interval_text(iv) << " (carries no preimage)\n";
    if (report.boundary_contribution)
        out << "  boundary pair through f = 0: " << report.boundary_contribution
            << " preimages\n";
    std::size_t n = 0;
    for (const FiberPreimage& pre : report.preimages) {
        ++n;
        out << "  preimage " << n << " [" << to_string(pre.source) << "]: x "
            << box_text(pre.x) << ", y " << box_text(pre.y) << "\n";
    }
    return 0;
}

inline int run_classify(const Rational& a, const Rational& b, bool json_mode,
                        std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    ClassifyResult result = classify(a, b);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json_mode) {
        json j{{"schema", 1}, {"command", "classify"}};
        j["point"] = {to_string(a), to_string(b)};
        j["kind"] = to_string(result.kind);
        if (result.side)
            j["side"] = to_string(*result.side);
        else
            j["side"] = nullptr;
        j["curve_params"] = json::array();
        for (const IsolatingInterval& iv : result.curve_params)
            j["curve_params"].push_back(interval_json(iv));
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "(" << to_string(a) << ", " << to_string(b) << "): " << to_string(result.kind);
    if (result.side) out << ", " << to_string(*result.side) << " side";
    out << "\n";
    for (const IsolatingInterval& iv : result.curve_params)
        out << "  curve parameter s " << interval_text(iv) << "\n";
    return 0;
}

inline int run_curve(const Rational& s0, const Rational& s1, long samples,
                     const std::string& out_path, bool json_mode, std::ostream& out,
                     std::ostream& err) {
    std::vector<CurvePoint> rows = sample_curve_exact(s0, s1, samples);
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        write_curve_csv(rows, file);
    }
    if (json_mode) {
        json j{{"schema", 1}, {"command", "curve"}};
        j["from"] = to_string(s0);
        j["to"] = to_string(s1);
        j["samples"] = samples;
        if (!out_path.empty()) j["out"] = out_path;
        j["rows"] = json::array();
        for (const CurvePoint& row : rows)
            j["rows"].push_back({to_string(row.s), to_string(row.a), to_string(row.b)});
        out << j.dump(2) << "\n";
    } else if (out_path.empty()) {
        write_curve_csv(rows, out);
    } else {
        out << "wrote " << out_path << " (" << rows.size() << " samples)\n";
    }
    return 0;
}

inline int run_plot(const Window& window, const std::string& out_path, bool json_mode,
                    std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    ContourSet contours = preimage_curve(window);

    // Target pane: the curve portion with first coordinate up to 10, its
    // label grid, and the two empty-fiber points.
    Rational s_lo(-43, 10), s_hi(23, 10);
    std::vector<CurvePoint> rows = sample_curve_exact(s_lo, s_hi, 600);
    Rational b_lo = rows.front().b, b_hi = rows.front().b;
    for (const CurvePoint& row : rows) {
        if (row.b < b_lo) b_lo = row.b;
        if (row.b > b_hi) b_hi = row.b;
    }
    Rational pad((b_hi - b_lo) / 20);
    Window target{Rational(-2), b_lo - pad, Rational(10), b_hi + pad,
                  std::min<long>(window.resolution, 128)};
    LabelGrid grid = classify_grid(target);

    SvgFigure fig;
    fig.domain = &contours;
    Polyline curve_line;
    curve_line.label = "C";
    for (const CurvePoint& row : rows)
        curve_line.points.emplace_back(to_double(row.a), to_double(row.b));
    fig.target_curves.push_back(std::move(curve_line));
    fig.target_grid = &grid;
    for (const auto& [ka, kb] : curve_c().K)
        fig.target_marks.emplace_back(to_double(ka), to_double(kb));

    std::ostringstream svg;
    emit_svg(fig, svg);
    std::ofstream file(out_path);
    if (!file) {
        err << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    file << svg.str();
    file.close();
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json_mode) {
        json j{{"schema", 1}, {"command", "plot"}};
        j["out"] = out_path;
        j["svg_bytes"] = svg.str().size();
        j["preimage_components"] = contours.preimage_components;
        j["window"] = {to_string(window.x_min), to_string(window.y_min),
                       to_string(window.x_max), to_string(window.y_max)};
        j["resolution"] = window.resolution;
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
    } else {
        out << "wrote " << out_path << ": " << svg.str().size() << " bytes, "
            << contours.preimage_components << " preimage components at resolution "
            << window.resolution << "\n";
    }
    return 0;
}

inline int run_sturm(const std::string& poly_text, bool json_mode, std::ostream& out,
                     std::ostream& err) {
    // Collect identifiers to infer the (single) variable.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < poly_text.size();) {
        unsigned char ch = static_cast<unsigned char>(poly_text[i]);
        if (std::isalpha(ch) || ch == '_') {
            std::size_t begin = i;
            while (i < poly_text.size() &&
                   (std::isalnum(static_cast<unsigned char>(poly_text[i])) ||
                    poly_text[i] == '_'))
                ++i;
            std::string name = poly_text.substr(begin, i - begin);
            if (std::find(names.begin(), names.end(), name) == names.end())
                names.push_back(name);
        } else {
            ++i;
        }
    }
    if (names.size() > 1) {
        err << "error: sturm requires a univariate polynomial; found variables";
        for (const std::string& name : names) err << " " << name;
        err << "\n";
        return 2;
    }
    std::string var = names.empty() ? "x" : names.front();
    UniPoly p = to_unipoly(parse_poly(poly_text, {var}));
    if (p.is_zero()) {
        err << "error: the zero polynomial has no isolated roots\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    UniPoly sf = squarefree_part(p);
    std::size_t chain_length = sturm_sequence(sf).size();
    std::vector<IsolatingInterval> roots = isolate_real_roots(p);
    for (IsolatingInterval& iv : roots) iv = refine(iv, default_enclosure_eps());
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (json_mode) {
        json j{{"schema", 1}, {"command", "sturm"}};
        j["variable"] = var;
        j["polynomial"] = p.to_string(var);
        j["degree"] = p.degree();
        j["chain_length"] = chain_length;
        j["distinct_real_roots"] = roots.size();
        j["roots"] = json::array();
        for (const IsolatingInterval& iv : roots) j["roots"].push_back(interval_json(iv));
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "polynomial: " << p.to_string(var) << "\n";
    out << "degree " << p.degree() << ", chain length " << chain_length
        << ", distinct real roots: " << roots.size() << "\n";
    std::size_t n = 0;
    for (const IsolatingInterval& iv : roots) {
        ++n;
        out << "  root " << n << " " << interval_text(iv) << "\n";
    }
    return 0;
}

} // namespace detail

/// Parse and dispatch one command line (without the program name).  All
/// output goes to the given streams; the return value is the process exit
/// code: 0 success, 1 verification failure, 2 usage or input errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certificates for a plane polynomial map with everywhere positive "
                 "Jacobian determinant that is not injective",
                 "pinchuk"};
    app.require_subcommand(1);
    app.fallthrough(true);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON on stdout");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the exact identity and cross-check suite");

    CLI::App* fiber_cmd =
        app.add_subcommand("fiber", "count and enclose the real preimages of a target point");
    std::vector<std::string> fiber_point;
    std::string fiber_eps = "1/1073741824";
    fiber_cmd->add_option("--point", fiber_point, "target point: a b (exact rationals)")
        ->expected(2)
        ->required();
    fiber_cmd->add_option("--eps", fiber_eps, "enclosure width bound (positive rational)");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "place a target point relative to the image curve");
    std::vector<std::string> classify_point;
    classify_cmd->add_option("--point", classify_point, "target point: a b (exact rationals)")
        ->expected(2)
        ->required();

    CLI::App* curve_cmd =
        app.add_subcommand("curve", "sample the image curve exactly and emit CSV");
    std::string curve_from, curve_to, curve_out;
    long curve_samples = 256;
    curve_cmd->add_option("--from", curve_from, "parameter start (rational)")->required();
    curve_cmd->add_option("--to", curve_to, "parameter end (rational)")->required();
    curve_cmd->add_option("--samples", curve_samples, "number of samples (>= 2)");
    curve_cmd->add_option("--out", curve_out, "CSV path (stdout when omitted)");

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "trace the preimage of the image curve and write an SVG");
    std::vector<std::string> plot_window = {"-10", "-10", "10", "10"};
    long plot_resolution = 512;
    std::string plot_out = "plot.svg";
    plot_cmd->add_option("--window", plot_window, "domain window: x0 y0 x1 y1 (rationals)")
        ->expected(4);
    plot_cmd->add_option("--resolution", plot_resolution, "cells per axis (>= 2)");
    plot_cmd->add_option("--out", plot_out, "SVG path");

    CLI::App* sturm_cmd = app.add_subcommand(
        "sturm", "isolate the real roots of a univariate rational polynomial");
    std::string sturm_poly;
    sturm_cmd->add_option("--poly", sturm_poly, "polynomial text, e.g. \"x^2 - 2\"")
        ->required();

    // CLI11 consumes the vector back-to-front.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return detail::run_verify(json_mode, out);
        if (*fiber_cmd) {
            Rational eps = parse_rational(fiber_eps);
            return detail::run_fiber(parse_rational(fiber_point[0]),
                                     parse_rational(fiber_point[1]), eps, json_mode, out);
        }
        if (*classify_cmd)
            return detail::run_classify(parse_rational(classify_point[0]),
                                        parse_rational(classify_point[1]), json_mode, out);
        if (*curve_cmd)
            return detail::run_curve(parse_rational(curve_from), parse_rational(curve_to),
                                     curve_samples, curve_out, json_mode, out, err);
        if (*plot_cmd) {
            Window window{parse_rational(plot_window[0]), parse_rational(plot_window[1]),
                          parse_rational(plot_window[2]), parse_rational(plot_window[3]),
                          plot_resolution};
            return detail::run_plot(window, plot_out, json_mode, out, err);
        }
        if (*sturm_cmd) return detail::run_sturm(sturm_poly, json_mode, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

} // namespace pinchuk::cli
