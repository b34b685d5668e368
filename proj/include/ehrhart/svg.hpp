#pragma once

/// Deterministic SVG rendering of the d = 2 torus cell map: the unit square,
/// hyperplane traces split into 1-cell pieces, 2-cells filled with a color
/// keyed to their TL quasi-polynomial (equal TL, equal color), 0-cells as
/// dots, and the orbit [k·v] overlaid.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart/cells.hpp"
#include "ehrhart/translate.hpp"

namespace ehr {

namespace svgdetail {

struct Line {
    IntVec a;    // length 2
    Rational b;  // (a, x) = b
};

inline std::optional<RatVec> intersect(const Line& l1, const Line& l2) {
    Rational det = Rational(l1.a[0] * l2.a[1] - l1.a[1] * l2.a[0]);
    if (det.is_zero()) return std::nullopt;
    Rational x = (l1.b * Rational(l2.a[1]) - l2.b * Rational(l1.a[1])) / det;
    Rational y = (Rational(l1.a[0]) * l2.b - Rational(l2.a[0]) * l1.b) / det;
    return RatVec{x, y};
}

inline std::string tl_signature(const QuasiPolynomial& f) {
    std::string s = std::to_string(f.period());
    for (const auto& p : f.constituents()) {
        s += "|";
        for (const auto& c : p.coefficients()) s += c.str() + ",";
    }
    return s;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_color(const std::string& key) {
    double hue = static_cast<double>(fnv1a(key) % 360);
    double s = 0.62, l = 0.74;
    double c = (1 - std::abs(2 * l - 1)) * s;
    double hp = hue / 60.0;
    double x = c * (1 - std::abs(hp - 2.0 * static_cast<int>(hp / 2) - 1));
    double r = 0, g = 0, b = 0;
    if (hp < 1) r = c, g = x;
    else if (hp < 2) r = x, g = c;
    else if (hp < 3) g = c, b = x;
    else if (hp < 4) g = x, b = c;
    else if (hp < 5) r = x, b = c;
    else r = c, b = x;
    double m = l - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>((r + m) * 255 + 0.5),
                  static_cast<int>((g + m) * 255 + 0.5), static_cast<int>((b + m) * 255 + 0.5));
    return buf;
}

constexpr double kScale = 480.0, kMargin = 40.0;

inline std::string coord(const Rational& x, bool flip) {
    double v = x.to_double();
    double out = flip ? kMargin + (1.0 - v) * kScale : kMargin + v * kScale;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", out);
    return buf;
}

inline std::string pt(const RatVec& p) { return coord(p[0], false) + "," + coord(p[1], true); }

// Exact counterclockwise order around the centroid.
inline void sort_ccw(std::vector<RatVec>& pts) {
    RatVec c{Rational(0), Rational(0)};
    for (const auto& p : pts) c = add(c, p);
    c = scale(Rational(1, Int(pts.size())), c);
    auto half = [&](const RatVec& p) {
        Rational dy = p[1] - c[1], dx = p[0] - c[0];
        if (!dy.is_zero()) return dy > Rational(0) ? 0 : 1;
        return dx > Rational(0) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& p, const RatVec& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        Rational cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
        if (!cross.is_zero()) return cross > Rational(0);
        return Polytope::rat_vec_less(p, q);
    });
}

}  // namespace svgdetail

struct SvgOptions {
    long k_max = 0;
    std::size_t max_facets = 8;
};

/// Renders Δ_P/Z^2 with the orbit of v. Requires dimension 2.
inline std::string render_cell_map_svg(const Polytope& P, const RatVec& v, const SvgOptions& opt) {
    using namespace svgdetail;
    if (P.dimension() != 2)
        throw precondition_error("plot: cell map rendering requires dimension 2");
    auto cx = enumerate_cells(P, CellKind::delta, opt.max_facets, 2);
    CellTable table(P, cx);

    std::map<CellKey, std::size_t> index;
    std::map<CellKey, std::string> color;
    for (std::size_t i = 0; i < cx.cells().size(); ++i) {
        const CellKey& key = cx.cells()[i].key;
        index[key] = i;
        color[key] = hash_color(tl_signature(table.tl_cell(key)));
    }

    struct Piece {
        std::size_t cell_index;
        std::size_t dim;
        std::vector<RatVec> geometry;  // polygon, segment ends, or point
    };
    std::vector<Piece> pieces;

    CellComplex::scan_box_strata(
        P, CellKind::delta,
        [&](const IntVec& c, const std::vector<bool>& flags, const RatVec& rep) {
            CellKey raw{c, flags};
            std::size_t dim = CellComplex::cell_dimension(P, raw);
            CellKey canon{P.key_lattice().canonical_coset_rep(c), flags};

            // boundary lines of the closure plus the unit box
            std::vector<Line> lines;
            for (std::size_t i = 0; i < P.facet_count(); ++i) {
                lines.push_back({P.facets()[i].a, Rational(c[i])});
                if (!flags[i]) lines.push_back({P.facets()[i].a, Rational(c[i]) - Rational(1)});
            }
            lines.push_back({{Int(1), Int(0)}, Rational(0)});
            lines.push_back({{Int(1), Int(0)}, Rational(1)});
            lines.push_back({{Int(0), Int(1)}, Rational(0)});
            lines.push_back({{Int(0), Int(1)}, Rational(1)});

            auto in_closure = [&](const RatVec& p) {
                if (p[0] < Rational(0) || p[0] > Rational(1) || p[1] < Rational(0) ||
                    p[1] > Rational(1))
                    return false;
                for (std::size_t i = 0; i < P.facet_count(); ++i) {
                    Rational val = dot(P.facets()[i].a, p);
                    if (flags[i]) {
                        if (val != Rational(c[i])) return false;
                    } else if (val > Rational(c[i]) || val < Rational(c[i]) - Rational(1)) {
                        return false;
                    }
                }
                return true;
            };

            Piece piece;
            piece.cell_index = index.at(canon);
            piece.dim = dim;
            if (dim == 0) {
                piece.geometry = {rep};
            } else {
                std::vector<RatVec> cand;
                for (std::size_t i = 0; i < lines.size(); ++i)
                    for (std::size_t j = i + 1; j < lines.size(); ++j) {
                        auto p = intersect(lines[i], lines[j]);
                        if (p && in_closure(*p)) cand.push_back(*p);
                    }
                std::sort(cand.begin(), cand.end(), Polytope::rat_vec_less);
                cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
                if (dim == 1) {
                    if (cand.size() < 2) return;  // degenerate sliver on the box edge
                    piece.geometry = {cand.front(), cand.back()};
                } else {
                    if (cand.size() < 3) return;
                    sort_ccw(cand);
                    piece.geometry = cand;
                }
            }
            pieces.push_back(std::move(piece));
        },
        opt.max_facets, 2);

    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.cell_index < b.cell_index;
    });

    std::ostringstream out;
    double size = 2 * kMargin + kScale;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << " " << size
        << "\">\n";
    out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kScale
        << "\" height=\"" << kScale << "\" fill=\"white\" stroke=\"black\"/>\n";

    // faces: one path per canonical 2-cell, possibly several subpaths
    std::map<std::size_t, std::string> face_paths;
    for (const auto& piece : pieces) {
        if (piece.dim != 2) continue;
        std::string& dpath = face_paths[piece.cell_index];
        for (std::size_t i = 0; i < piece.geometry.size(); ++i)
            dpath += (i == 0 ? "M " : "L ") + pt(piece.geometry[i]) + " ";
        dpath += "Z ";
    }
    for (const auto& [ci, dpath] : face_paths)
        out << "  <path class=\"face cell-" << ci << "\" d=\"" << dpath << "\" fill=\""
            << color.at(cx.cells()[ci].key) << "\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";

    for (const auto& piece : pieces) {
        if (piece.dim != 1) continue;
        out << "  <line class=\"edge cell-" << piece.cell_index << "\" x1=\""
            << coord(piece.geometry[0][0], false) << "\" y1=\"" << coord(piece.geometry[0][1], true)
            << "\" x2=\"" << coord(piece.geometry[1][0], false) << "\" y2=\""
            << coord(piece.geometry[1][1], true) << "\" stroke=\""
            << color.at(cx.cells()[piece.cell_index].key) << "\" stroke-width=\"2.5\"/>\n";
    }

    // vertices: one dot per canonical 0-cell at its box-reduced representative
    for (const auto& cell : cx.cells()) {
        if (cell.dimension != 0) continue;
        RatVec p(2);
        for (std::size_t j = 0; j < 2; ++j)
            p[j] = cell.representative[j] - Rational(cell.representative[j].floor());
        out << "  <circle class=\"vertex cell-" << index.at(cell.key) << "\" cx=\""
            << coord(p[0], false) << "\" cy=\"" << coord(p[1], true)
            << "\" r=\"5\" fill=\"black\"/>\n";
    }

    // orbit dots, tagged with the cell of [k v] so equal-constituent points
    // share a class
    auto orbit = orbit_classify(P, v, opt.k_max);
    for (const auto& [k, key] : orbit) {
        RatVec p = scale(Rational(Int(k)), v);
        for (auto& x : p) x = x - Rational(x.floor());
        out << "  <circle class=\"orbit cell-" << index.at(key) << "\" cx=\""
            << coord(p[0], false) << "\" cy=\"" << coord(p[1], true)
            << "\" r=\"3\" fill=\"crimson\"><title>" << k << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ehr
