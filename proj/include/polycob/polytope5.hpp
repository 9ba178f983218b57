#pragma once

// Moment polytope of the two-diagonal bending torus for pentagons: the image
// of (l_1, l_2) is the rectangle [|r1-r2|, r1+r2] x [|r4-r5|, r4+r5] cut by
// the triangle inequalities of (l_1, l_2, r_3). Everything here is exact.

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "polycob/errors.hpp"
#include "polycob/lengths.hpp"
#include "polycob/rational.hpp"

namespace polycob {

/// a x + b y <= c
struct HalfPlane {
    Rational a, b, c;

    HalfPlane(Rational a_, Rational b_, Rational c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a == 0 && b == 0) throw InputError("half-plane with zero normal");
    }

    /// c - (a x + b y); nonnegative inside, zero on the boundary line.
    Rational slack(const Rational& x, const Rational& y) const { return c - (a * x + b * y); }
    bool contains(const Rational& x, const Rational& y) const { return slack(x, y) >= 0; }

    /// Human-readable form such as "x >= 1/2" or "y <= x + 4".
    std::string describe() const {
        auto linear = [](const Rational& k, const char* var) -> std::string {
            if (k == 1) return var;
            if (k == -1) return std::string("-") + var;
            return to_string(k) + "*" + var;
        };
        if (b == 0) return std::string("x ") + (a > 0 ? "<= " : ">= ") + to_string(Rational(c / a));
        if (a == 0) return std::string("y ") + (b > 0 ? "<= " : ">= ") + to_string(Rational(c / b));
        const Rational slope = -a / b;
        const Rational intercept = c / b;
        std::string s = std::string("y ") + (b > 0 ? "<= " : ">= ") + linear(slope, "x");
        if (intercept > 0) s += " + " + to_string(intercept);
        if (intercept < 0) s += " - " + to_string(Rational(-intercept));
        return s;
    }

    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
    friend bool operator<(const Point2& p, const Point2& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }
};

/// Convex polygon with exact vertices, counterclockwise from the
/// lexicographically smallest. `active[i]` is the index into `planes` of the
/// constraint supporting the edge from vertex i to vertex i+1.
struct MomentPolygon {
    std::vector<Point2> vertices;
    std::vector<int> active;
    std::vector<HalfPlane> planes;
    bool degenerate = false;  ///< a segment or a single point
};

/// The seven constraints, in this order: x >= |r1-r2|, x <= r1+r2,
/// y >= |r4-r5|, y <= r4+r5, y >= -x+r3, y >= x-r3, y <= x+r3.
inline std::vector<HalfPlane> halfplanes(const LengthVector& r) {
    if (r.size() != 5) throw InputError("the moment polytope is defined for pentagons only");
    auto absdiff = [](const Rational& p, const Rational& q) { return p > q ? Rational(p - q) : Rational(q - p); };
    const Rational& r1 = r.at(1);
    const Rational& r2 = r.at(2);
    const Rational& r3 = r.at(3);
    const Rational& r4 = r.at(4);
    const Rational& r5 = r.at(5);
    return {
        HalfPlane(-1, 0, -absdiff(r1, r2)),
        HalfPlane(1, 0, r1 + r2),
        HalfPlane(0, -1, -absdiff(r4, r5)),
        HalfPlane(0, 1, r4 + r5),
        HalfPlane(-1, -1, -r3),
        HalfPlane(1, -1, r3),
        HalfPlane(-1, 1, r3),
    };
}

namespace detail {

inline Rational cross(const Point2& o, const Point2& p, const Point2& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

inline Rational twice_area(const std::vector<Point2>& pts) {
    Rational s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Half-width of a box containing every vertex of the line arrangement.
inline Rational bounding_half_width(const std::vector<HalfPlane>& planes) {
    Rational m = 0;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const auto& p = planes[i];
        const Rational nn = p.a * p.a + p.b * p.b;
        m = std::max({m, abs_rational(p.a * p.c / nn), abs_rational(p.b * p.c / nn)});
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const auto& q = planes[j];
            const Rational det = p.a * q.b - p.b * q.a;
            if (det == 0) continue;
            const Rational x = (p.c * q.b - p.b * q.c) / det;
            const Rational y = (p.a * q.c - p.c * q.a) / det;
            m = std::max({m, abs_rational(x), abs_rational(y)});
        }
    }
    return m + 1;
}

/// One Sutherland-Hodgman step.
inline std::vector<Point2> clip(const std::vector<Point2>& poly, const HalfPlane& h) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        const Rational sp = h.slack(p.x, p.y);
        const Rational sq = h.slack(q.x, q.y);
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            const Rational t = sp / (sp - sq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

inline void drop_repeats(std::vector<Point2>& pts) {
    std::vector<Point2> out;
    for (const auto& p : pts)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    pts = std::move(out);
}

}  // namespace detail

/// Exact intersection of half-planes by clipping a box that contains every
/// vertex of the arrangement. Returns nullopt when the intersection is empty.
inline std::optional<MomentPolygon> intersect(const std::vector<HalfPlane>& planes) {
    const Rational m = detail::bounding_half_width(planes);
    std::vector<Point2> poly = {{-m, -m}, {m, -m}, {m, m}, {-m, m}};
    for (const auto& h : planes) {
        poly = detail::clip(poly, h);
        if (poly.empty()) return std::nullopt;
    }
    detail::drop_repeats(poly);
    if (poly.empty()) return std::nullopt;
    for (const auto& p : poly)
        if (detail::abs_rational(p.x) == m || detail::abs_rational(p.y) == m)
            throw InputError("half-plane intersection is unbounded");

    MomentPolygon out;
    out.planes = planes;
    if (poly.size() < 3 || detail::twice_area(poly) == 0) {
        out.degenerate = true;
        const auto [lo, hi] = std::minmax_element(poly.begin(), poly.end());
        out.vertices.push_back(*lo);
        if (!(*hi == *lo)) out.vertices.push_back(*hi);
    } else {
        bool changed = true;
        while (changed && poly.size() > 3) {
            changed = false;
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const auto& prev = poly[(i + poly.size() - 1) % poly.size()];
                const auto& next = poly[(i + 1) % poly.size()];
                if (detail::cross(prev, poly[i], next) == 0) {
                    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            }
        }
        if (detail::twice_area(poly) < 0) std::reverse(poly.begin(), poly.end());
        std::rotate(poly.begin(), std::min_element(poly.begin(), poly.end()), poly.end());
        out.vertices = std::move(poly);
    }

    const std::size_t nv = out.vertices.size();
    const std::size_t ne = nv >= 3 ? nv : (nv == 2 ? 1 : 0);
    for (std::size_t i = 0; i < ne; ++i) {
        const auto& p = out.vertices[i];
        const auto& q = out.vertices[(i + 1) % nv];
        int idx = -1;
        for (std::size_t k = 0; k < planes.size(); ++k)
            if (planes[k].slack(p.x, p.y) == 0 && planes[k].slack(q.x, q.y) == 0) {
                idx = static_cast<int>(k);
                break;
            }
        out.active.push_back(idx);
    }
    return out;
}

/// intersect(halfplanes(r)).
inline std::optional<MomentPolygon> moment_polytope(const LengthVector& r) { return intersect(halfplanes(r)); }

struct ShapeReport {
    int edge_count = 0;
    int vertex_count = 0;
    std::vector<std::pair<int, int>> parallel_opposite_pairs;  ///< 0-based edge indices, i < j
};

inline ShapeReport classify_shape(const MomentPolygon& poly) {
    if (poly.vertices.empty()) throw InputError("empty polygon has no shape");
    ShapeReport rep;
    const int nv = static_cast<int>(poly.vertices.size());
    rep.vertex_count = nv;
    rep.edge_count = nv >= 3 ? nv : nv - 1;
    if (nv < 4) return rep;
    auto dir = [&](int i) {
        const auto& p = poly.vertices[static_cast<std::size_t>(i)];
        const auto& q = poly.vertices[static_cast<std::size_t>((i + 1) % nv)];
        return std::pair<Rational, Rational>{q.x - p.x, q.y - p.y};
    };
    for (int i = 0; i < nv; ++i)
        for (int j = i + 2; j < nv; ++j) {
            if (i == 0 && j == nv - 1) continue;  // adjacent through the wrap
            const auto [ax, ay] = dir(i);
            const auto [bx, by] = dir(j);
            if (ax * by - ay * bx == 0) rep.parallel_opposite_pairs.emplace_back(i, j);
        }
    return rep;
}

/// {"vertices": [["p/q","p/q"], ...], "edges": [...], "degenerate": bool}
inline nlohmann::ordered_json emit_json(const MomentPolygon& poly) {
    if (poly.vertices.empty()) throw InputError("cannot emit an empty polygon");
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : poly.vertices) j["vertices"].push_back({to_string(v.x), to_string(v.y)});
    j["edges"] = nlohmann::ordered_json::array();
    const std::size_t nv = poly.vertices.size();
    for (std::size_t i = 0; i < poly.active.size(); ++i) {
        nlohmann::ordered_json e;
        e["from"] = i;
        e["to"] = (i + 1) % nv;
        const int k = poly.active[i];
        e["halfplane"] = k;
        e["constraint"] = k >= 0 ? poly.planes[static_cast<std::size_t>(k)].describe() : std::string();
        j["edges"].push_back(std::move(e));
    }
    j["degenerate"] = poly.degenerate;
    return j;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

/// Frame for drawing: the box cut out by the axis-parallel constraints, or
/// the vertex bounding box when those do not bound both axes.
inline std::array<Rational, 4> frame(const MomentPolygon& poly) {
    std::optional<Rational> xlo, xhi, ylo, yhi;
    auto tighten = [](std::optional<Rational>& slot, const Rational& v, bool lower) {
        if (!slot || (lower ? v > *slot : v < *slot)) slot = v;
    };
    for (const auto& h : poly.planes) {
        if (h.b == 0) tighten(h.a > 0 ? xhi : xlo, Rational(h.c / h.a), h.a < 0);
        if (h.a == 0) tighten(h.b > 0 ? yhi : ylo, Rational(h.c / h.b), h.b < 0);
    }
    if (!xlo || !xhi || !ylo || !yhi || *xlo >= *xhi || *ylo >= *yhi) {
        const auto [mnx, mxx] = std::minmax_element(poly.vertices.begin(), poly.vertices.end(),
                                                    [](const Point2& p, const Point2& q) { return p.x < q.x; });
        const auto [mny, mxy] = std::minmax_element(poly.vertices.begin(), poly.vertices.end(),
                                                    [](const Point2& p, const Point2& q) { return p.y < q.y; });
        xlo = mnx->x, xhi = mxx->x, ylo = mny->y, yhi = mxy->y;
        if (*xlo == *xhi) *xlo -= 1, *xhi += 1;
        if (*ylo == *yhi) *ylo -= 1, *yhi += 1;
    }
    return {*xlo, *xhi, *ylo, *yhi};
}

/// Part of the line a x + b y = c inside [x0,x1] x [y0,y1].
inline std::optional<std::array<double, 4>> clip_line(const HalfPlane& h, double x0, double x1, double y0, double y1) {
    const double a = to_double(h.a), b = to_double(h.b), c = to_double(h.c);
    std::vector<std::pair<double, double>> pts;
    auto add = [&](double x, double y) {
        const double eps = 1e-12 * (1 + std::abs(x1 - x0) + std::abs(y1 - y0));
        if (x < x0 - eps || x > x1 + eps || y < y0 - eps || y > y1 + eps) return;
        for (const auto& p : pts)
            if (std::abs(p.first - x) <= eps && std::abs(p.second - y) <= eps) return;
        pts.emplace_back(x, y);
    };
    if (b != 0) {
        add(x0, (c - a * x0) / b);
        add(x1, (c - a * x1) / b);
    }
    if (a != 0) {
        add((c - b * y0) / a, y0);
        add((c - b * y1) / a, y1);
    }
    if (pts.size() < 2) return std::nullopt;
    return std::array<double, 4>{pts[0].first, pts[0].second, pts[1].first, pts[1].second};
}

}  // namespace detail

/// SVG 1.1 drawing of the polygon and its constraint lines. The viewBox is
/// the constraint rectangle padded by 10%; y points up.
inline std::string emit_svg(const MomentPolygon& poly) {
    if (poly.vertices.empty()) throw InputError("cannot emit an empty polygon");
    const auto fr = detail::frame(poly);
    const double xlo = to_double(fr[0]), xhi = to_double(fr[1]);
    const double ylo = to_double(fr[2]), yhi = to_double(fr[3]);
    const double w = xhi - xlo, h = yhi - ylo;
    const double vx0 = xlo - 0.1 * w, vx1 = xhi + 0.1 * w;
    const double vy0 = ylo - 0.1 * h, vy1 = yhi + 0.1 * h;
    const double stroke = 0.004 * std::max(w, h);
    using detail::fmt;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(vx0) + " " + fmt(-vy1) + " " +
         fmt(vx1 - vx0) + " " + fmt(vy1 - vy0) + "\" width=\"480\" height=\"" +
         fmt(480.0 * (vy1 - vy0) / (vx1 - vx0)) + "\">\n";
    s += "  <g id=\"constraints\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" + fmt(stroke) +
         "\" stroke-dasharray=\"" + fmt(4 * stroke) + " " + fmt(2 * stroke) + "\">\n";
    for (const auto& hp : poly.planes) {
        auto seg = detail::clip_line(hp, vx0, vx1, vy0, vy1);
        if (!seg) {
            // off-canvas constraint: kept in the document, clipped to a wider box
            const double reach = w + h + std::abs(vx0) + std::abs(vy0) + std::abs(to_double(hp.c));
            seg = detail::clip_line(hp, vx0 - reach, vx1 + reach, vy0 - reach, vy1 + reach);
        }
        if (seg) {
            const auto& g = *seg;
            s += "    <line x1=\"" + fmt(g[0]) + "\" y1=\"" + fmt(-g[1]) + "\" x2=\"" + fmt(g[2]) + "\" y2=\"" +
                 fmt(-g[3]) + "\"><title>" + hp.describe() + "</title></line>\n";
        }
    }
    s += "  </g>\n";
    std::string pts;
    for (const auto& v : poly.vertices) {
        if (!pts.empty()) pts += " ";
        pts += fmt(to_double(v.x)) + "," + fmt(-to_double(v.y));
    }
    if (poly.vertices.size() >= 3)
        s += "  <polygon id=\"polytope\" points=\"" + pts + "\" fill=\"#9cc9ee\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"" +
             fmt(2 * stroke) + "\"/>\n";
    else
        s += "  <polyline id=\"polytope\" points=\"" + pts + "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"" +
             fmt(2 * stroke) + "\"/>\n";
    for (const auto& v : poly.vertices)
        s += "  <circle cx=\"" + fmt(to_double(v.x)) + "\" cy=\"" + fmt(-to_double(v.y)) + "\" r=\"" + fmt(3 * stroke) +
             "\" fill=\"#1f4e79\"><title>(" + to_string(v.x) + ", " + to_string(v.y) + ")</title></circle>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace polycob
