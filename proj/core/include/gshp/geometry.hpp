#pragma once

#include <array>
#include <vector>

namespace gshp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Closed ring of vertices (no repeated end vertex required).
using Ring = std::vector<Point>;

/// Simple polygon with optional holes, projected coordinates in metres.
struct Polygon {
    Ring outer;
    std::vector<Ring> holes;
};

using MultiPolygon = std::vector<Polygon>;

double ring_area(const Ring& ring);  // signed, CCW positive
double polygon_area(const Polygon& poly);
double multipolygon_area(const MultiPolygon& mp);

Point ring_centroid(const Ring& ring);

/// Even-odd test; points exactly on an edge count as inside.
bool point_in_ring(const Point& p, const Ring& ring);
bool point_in_polygon(const Point& p, const Polygon& poly);

double dist_point_segment(const Point& p, const Point& a, const Point& b);
double dist_segment_segment(const Point& a, const Point& b, const Point& c, const Point& d);

/// Distance from an interior/exterior point to the polygon boundary
/// (outer ring and holes).
double dist_point_boundary(const Point& p, const Polygon& poly);

/// Minimum distance between two polygons, 0 if they touch or overlap.
double polygon_distance(const Polygon& a, const Polygon& b);

/// Centroid if interior, otherwise the midpoint of the widest horizontal
/// interior interval at the centroid's y (deterministic representative point).
Point representative_point(const Polygon& poly);

/// Convex hull, CCW, no collinear duplicates (Andrew monotone chain).
std::vector<Point> convex_hull(std::vector<Point> pts);

struct OrientedBox {
    double length = 0.0;  // longer side
    double width = 0.0;   // shorter side
    double angle_rad = 0.0;
};

/// Minimum-area oriented bounding rectangle via rotating calipers over convex
/// hull edges.  Degenerate (collinear) input yields a zero-width box whose
/// length is the extent of the point set.
OrientedBox oriented_min_bbox(const std::vector<Point>& pts);

/// Longer side of the minimum-area oriented bounding box of a polygon.
double oriented_mbb_length(const Polygon& poly);
double oriented_mbb_length(const MultiPolygon& mp);

}  // namespace gshp
