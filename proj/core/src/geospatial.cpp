#include "gshp/geospatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gshp/thermal.hpp"

namespace gshp {

Restriction restriction_from_string(const std::string& s) {
    if (s == "permitted") return Restriction::Permitted;
    if (s == "limited") return Restriction::Limited;
    if (s == "prohibited") return Restriction::Prohibited;
    throw std::invalid_argument("unknown restriction: " + s);
}

std::string to_string(Restriction r) {
    switch (r) {
        case Restriction::Permitted: return "permitted";
        case Restriction::Limited: return "limited";
        case Restriction::Prohibited: return "prohibited";
    }
    return "?";
}

double h_max_for(Restriction r) {
    switch (r) {
        case Restriction::Permitted: return 200.0;
        case Restriction::Limited: return 150.0;
        case Restriction::Prohibited: return 0.0;
    }
    return 0.0;
}

std::array<std::int64_t, 2> PixelGridSpec::cell_of(const Point& p) const {
    return {static_cast<std::int64_t>(std::floor((p.x - origin_x) / pitch)),
            static_cast<std::int64_t>(std::floor((p.y - origin_y) / pitch))};
}

std::int64_t PixelGridSpec::cell_id(const Point& p) const {
    const auto [ix, iy] = cell_of(p);
    if (ix < 0 || iy < 0 || ix >= 1000000) {
        throw std::out_of_range("geometry outside the pixel grid extent");
    }
    return iy * 1000000 + ix;
}

Polygon PixelGridSpec::cell_polygon(std::int64_t id) const {
    const std::int64_t iy = id / 1000000;
    const std::int64_t ix = id % 1000000;
    const double x0 = origin_x + ix * pitch;
    const double y0 = origin_y + iy * pitch;
    Polygon poly;
    poly.outer = {{x0, y0}, {x0 + pitch, y0}, {x0 + pitch, y0 + pitch}, {x0, y0 + pitch}};
    return poly;
}

std::vector<std::array<double, 2>> place_boreholes(const MultiPolygon& available_area, double B,
                                                   double buffer,
                                                   const std::vector<Polygon>* obstacles) {
    if (B < kMinSpacing) throw std::invalid_argument("spacing below norm minimum of 5 m");
    std::vector<std::array<double, 2>> points;
    for (const Polygon& part : available_area) {
        if (part.outer.size() < 3) continue;
        double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
        double max_x = -min_x, max_y = -min_x;
        for (const Point& p : part.outer) {
            min_x = std::min(min_x, p.x);
            min_y = std::min(min_y, p.y);
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
        const int nx = static_cast<int>(std::floor((max_x - min_x) / B)) + 1;
        const int ny = static_cast<int>(std::floor((max_y - min_y) / B)) + 1;
        for (int iy = 0; iy < ny; ++iy) {
            for (int ix = 0; ix < nx; ++ix) {
                const Point p{min_x + ix * B, min_y + iy * B};
                if (!point_in_polygon(p, part)) continue;
                if (dist_point_boundary(p, part) < buffer) continue;
                bool blocked = false;
                if (obstacles) {
                    for (const Polygon& obs : *obstacles) {
                        if (point_in_polygon(p, obs) || dist_point_boundary(p, obs) < buffer) {
                            blocked = true;
                            break;
                        }
                    }
                }
                if (!blocked) points.push_back({p.x, p.y});
            }
        }
    }
    return points;
}

std::int64_t assign_pixel(const Point& p, const PixelGridSpec& grid) {
    return grid.cell_id(p);
}

std::int64_t assign_pixel(const Polygon& geometry, const PixelGridSpec& grid) {
    return grid.cell_id(representative_point(geometry));
}

InjectionResult rank_and_inject(const std::vector<InjectionCandidate>& parcels, double demand_wh) {
    if (demand_wh < 0.0 || !std::isfinite(demand_wh)) {
        throw std::invalid_argument("negative injection demand");
    }
    std::vector<InjectionCandidate> order = parcels;
    std::sort(order.begin(), order.end(), [](const InjectionCandidate& a, const InjectionCandidate& b) {
        if (a.area_m2 != b.area_m2) return a.area_m2 > b.area_m2;
        return a.parcel_id < b.parcel_id;
    });
    InjectionResult result;
    double remaining = demand_wh;
    for (const InjectionCandidate& c : order) {
        const double take = std::min(remaining, std::max(c.capacity_wh, 0.0));
        result.shares.push_back({c.parcel_id, take});
        remaining -= take;
    }
    result.unmet_wh = remaining;
    return result;
}

void pixel_balance(PixelAccount& a) {
    a.useful_heat = std::min(a.Q_heat, a.heat_demand);
    a.surplus_heat = std::max(a.Q_heat - a.heat_demand, 0.0);
    a.deficit_heat = std::max(a.heat_demand - a.Q_heat, 0.0);
    a.useful_cool = std::min(a.Q_cool, a.cool_demand);
    a.unmet_cool = std::max(a.cool_demand - a.Q_cool, 0.0);
}

}  // namespace gshp
