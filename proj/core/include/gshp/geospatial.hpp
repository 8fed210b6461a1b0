#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gshp/geometry.hpp"

namespace gshp {

enum class Restriction { Permitted, Limited, Prohibited };

Restriction restriction_from_string(const std::string& s);
std::string to_string(Restriction r);

/// Maximum drilling depth for a restriction zone: 200 m permitted, 150 m
/// limited, 0 prohibited.
double h_max_for(Restriction r);

/// One property unit with its area available for borehole installation.
struct Parcel {
    std::int64_t parcel_id = 0;
    MultiPolygon available_area;
    double area_m2 = 0.0;
    std::int64_t pixel_id = -1;
    std::optional<std::int64_t> dhc_id;
    Restriction restriction = Restriction::Permitted;
    double altitude_m = 0.0;
};

/// 400 m aggregation grid; cells are half-open, a point on the shared edge
/// belongs to the lower-index cell.
struct PixelGridSpec {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double pitch = 400.0;

    std::array<std::int64_t, 2> cell_of(const Point& p) const;
    /// Single id = iy * 1e6 + ix; requires non-negative indices.
    std::int64_t cell_id(const Point& p) const;
    Polygon cell_polygon(std::int64_t cell_id) const;
};

constexpr double kDefaultBoreholeBuffer = 3.0;  // m, norm setback

/// Rectangular lattice of pitch B anchored at the lower-left corner of the
/// bounding box, filtered to points inside the polygon at >= buffer from the
/// boundary and outside every obstacle (plus the same buffer around them).
/// Multi-part areas are gridded per part.
std::vector<std::array<double, 2>> place_boreholes(const MultiPolygon& available_area, double B,
                                                   double buffer = kDefaultBoreholeBuffer,
                                                   const std::vector<Polygon>* obstacles = nullptr);

/// Representative-point pixel assignment for arbitrary geometries.
std::int64_t assign_pixel(const Polygon& geometry, const PixelGridSpec& grid);
std::int64_t assign_pixel(const Point& p, const PixelGridSpec& grid);

/// One parcel's standing in the injection ranking.
struct InjectionCandidate {
    std::int64_t parcel_id = 0;
    double area_m2 = 0.0;
    double capacity_wh = 0.0;
};

struct InjectionShare {
    std::int64_t parcel_id = 0;
    double q_inj_wh = 0.0;
};

struct InjectionResult {
    std::vector<InjectionShare> shares;  // in ranking order
    double unmet_wh = 0.0;
};

/// Greedy fill in descending parcel-area order (ties by parcel_id): each
/// parcel takes min(remaining demand, capacity).  Demand and capacities are
/// in injected-heat units.
InjectionResult rank_and_inject(const std::vector<InjectionCandidate>& parcels, double demand_wh);

/// Per-pixel (or per-DHC unit) ledger of technical potential vs demand, Wh/y.
struct PixelAccount {
    std::int64_t pixel_id = -1;
    std::optional<std::int64_t> dhc_id;
    double heat_demand = 0.0;
    double cool_demand = 0.0;
    double Q_extr = 0.0;
    double Q_inj = 0.0;
    double Q_heat = 0.0;
    double Q_cool = 0.0;
    double useful_heat = 0.0;
    double surplus_heat = 0.0;
    double deficit_heat = 0.0;
    double useful_cool = 0.0;
    double unmet_cool = 0.0;
};

/// Fills useful/surplus/deficit from the aggregated sums already present.
void pixel_balance(PixelAccount& account);

}  // namespace gshp
