#include "gshp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gshp {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    const double c = cross(a, b, p);
    if (std::abs(c) > 1e-9 * std::max(1.0, std::hypot(b.x - a.x, b.y - a.y))) return false;
    return p.x >= std::min(a.x, b.x) - 1e-12 && p.x <= std::max(a.x, b.x) + 1e-12 &&
           p.y >= std::min(a.y, b.y) - 1e-12 && p.y <= std::max(a.y, b.y) + 1e-12;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

}  // namespace

double ring_area(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * twice;
}

double polygon_area(const Polygon& poly) {
    double area = std::abs(ring_area(poly.outer));
    for (const Ring& hole : poly.holes) area -= std::abs(ring_area(hole));
    return std::max(area, 0.0);
}

double multipolygon_area(const MultiPolygon& mp) {
    double area = 0.0;
    for (const Polygon& p : mp) area += polygon_area(p);
    return area;
}

Point ring_centroid(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n == 0) throw std::invalid_argument("empty ring");
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        const double w = p.x * q.y - q.x * p.y;
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::abs(a2) < 1e-12) {  // degenerate: mean of the vertices
        double mx = 0.0, my = 0.0;
        for (const Point& p : ring) {
            mx += p.x;
            my += p.y;
        }
        return {mx / n, my / n};
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

bool point_in_ring(const Point& p, const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = ring[i];
        const Point& b = ring[j];
        if (on_segment(p, a, b)) return true;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

bool point_in_polygon(const Point& p, const Polygon& poly) {
    if (!point_in_ring(p, poly.outer)) return false;
    for (const Ring& hole : poly.holes) {
        // On a hole edge still counts as inside the polygon.
        if (point_in_ring(p, hole)) {
            bool on_edge = false;
            const std::size_t n = hole.size();
            for (std::size_t i = 0, j = n - 1; i < n && !on_edge; j = i++) {
                on_edge = on_segment(p, hole[i], hole[j]);
            }
            if (!on_edge) return false;
        }
    }
    return true;
}

double dist_point_segment(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 <= 0.0) return std::hypot(p.x - a.x, p.y - a.y);
    const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double dist_segment_segment(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min(std::min(dist_point_segment(a, c, d), dist_point_segment(b, c, d)),
                    std::min(dist_point_segment(c, a, b), dist_point_segment(d, a, b)));
}

namespace {

double dist_point_ring_edges(const Point& p, const Ring& ring) {
    const std::size_t n = ring.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        best = std::min(best, dist_point_segment(p, ring[i], ring[j]));
    }
    return best;
}

double dist_ring_ring(const Ring& r1, const Ring& r2) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n1 = r1.size(), n2 = r2.size();
    for (std::size_t i = 0, i2 = n1 - 1; i < n1; i2 = i++) {
        for (std::size_t j = 0, j2 = n2 - 1; j < n2; j2 = j++) {
            best = std::min(best, dist_segment_segment(r1[i], r1[i2], r2[j], r2[j2]));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

}  // namespace

double dist_point_boundary(const Point& p, const Polygon& poly) {
    double best = dist_point_ring_edges(p, poly.outer);
    for (const Ring& hole : poly.holes) best = std::min(best, dist_point_ring_edges(p, hole));
    return best;
}

double polygon_distance(const Polygon& a, const Polygon& b) {
    if (!a.outer.empty() && point_in_polygon(a.outer.front(), b)) return 0.0;
    if (!b.outer.empty() && point_in_polygon(b.outer.front(), a)) return 0.0;
    return dist_ring_ring(a.outer, b.outer);
}

Point representative_point(const Polygon& poly) {
    const Point c = ring_centroid(poly.outer);
    if (point_in_polygon(c, poly)) return c;

    // Horizontal scanline through the centroid: midpoint of the widest
    // interior interval.
    std::vector<double> xs;
    const std::size_t n = poly.outer.size();
    auto collect = [&](const Ring& ring) {
        const std::size_t m = ring.size();
        for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
            const Point& a = ring[i];
            const Point& b = ring[j];
            if ((a.y > c.y) != (b.y > c.y)) {
                xs.push_back((b.x - a.x) * (c.y - a.y) / (b.y - a.y) + a.x);
            }
        }
    };
    collect(poly.outer);
    for (const Ring& hole : poly.holes) collect(hole);
    std::sort(xs.begin(), xs.end());
    Point best{};
    double best_width = -1.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Point mid{0.5 * (xs[i] + xs[i + 1]), c.y};
        if (point_in_polygon(mid, poly) && xs[i + 1] - xs[i] > best_width) {
            best_width = xs[i + 1] - xs[i];
            best = mid;
        }
    }
    if (best_width >= 0.0) return best;
    return n > 0 ? poly.outer.front() : c;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

OrientedBox oriented_min_bbox(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    const std::vector<Point> hull = convex_hull(pts);
    OrientedBox box;
    if (hull.size() < 3) {
        // Collinear: the box degenerates to the extent of the segment.
        double best = 0.0;
        for (const Point& a : hull) {
            for (const Point& b : hull) {
                best = std::max(best, std::hypot(a.x - b.x, a.y - b.y));
            }
        }
        box.length = best;
        box.width = 0.0;
        if (hull.size() == 2) {
            box.angle_rad = std::atan2(hull[1].y - hull[0].y, hull[1].x - hull[0].x);
        }
        return box;
    }
    double best_area = std::numeric_limits<double>::infinity();
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        const double angle = std::atan2(b.y - a.y, b.x - a.x);
        const double ca = std::cos(angle), sa = std::sin(angle);
        double min_u = std::numeric_limits<double>::infinity(), max_u = -min_u;
        double min_v = min_u, max_v = -min_u;
        for (const Point& p : hull) {
            const double u = p.x * ca + p.y * sa;
            const double v = -p.x * sa + p.y * ca;
            min_u = std::min(min_u, u);
            max_u = std::max(max_u, u);
            min_v = std::min(min_v, v);
            max_v = std::max(max_v, v);
        }
        const double du = max_u - min_u;
        const double dv = max_v - min_v;
        if (du * dv < best_area) {
            best_area = du * dv;
            box.length = std::max(du, dv);
            box.width = std::min(du, dv);
            box.angle_rad = angle;
        }
    }
    return box;
}

double oriented_mbb_length(const Polygon& poly) {
    if (poly.outer.size() < 2) throw std::invalid_argument("polygon needs >= 2 vertices");
    return oriented_min_bbox(poly.outer).length;
}

double oriented_mbb_length(const MultiPolygon& mp) {
    std::vector<Point> pts;
    for (const Polygon& p : mp) pts.insert(pts.end(), p.outer.begin(), p.outer.end());
    if (pts.size() < 2) throw std::invalid_argument("multipolygon needs >= 2 vertices");
    return oriented_min_bbox(pts).length;
}

}  // namespace gshp
