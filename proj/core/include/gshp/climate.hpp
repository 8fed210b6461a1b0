#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gshp {

/// One day of a daily mean-temperature series.
struct DailyRecord {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31
    double t_mean_c = 0.0;
};

/// Maximum-month weight and which month it is (0-based, earliest on ties).
struct LoadWeight {
    double w_max = 0.0;
    int month = 0;
};

/// Monthly degree days plus the derived seasonal weights and month lengths.
/// Cooling entries are absent when the series has no cooling season.
struct DegreeDayProfile {
    std::array<double, 12> hdd{};  // K day
    std::array<double, 12> cdd{};  // K day
    double w_hdd_max = 0.0;
    double w_cdd_max = 0.0;    // 0 when no cooling season
    double t_m_heat_h = 0.0;   // hours in the max-heating month
    double t_m_cool_h = 0.0;   // hours in the max-cooling month, 0 if none
    bool has_heating = false;
    bool has_cooling = false;
};

int days_in_month(int year, int month);

/// Monthly heating degree days: sum of (20 - T) over days with T <= 12 degC.
/// The series must cover whole months; multiple years are averaged per month.
std::array<double, 12> compute_hdd(const std::vector<DailyRecord>& series);

/// Monthly cooling degree days: sum of (T - 18) over days with T >= 18 degC.
std::array<double, 12> compute_cdd(const std::vector<DailyRecord>& series);

/// 1.05 * max / sum and the argmax month; nullopt for an all-zero profile
/// (no load season).
std::optional<LoadWeight> load_weights(const std::array<double, 12>& monthly_dd);

/// t_m / w_max, capped at one year of hours.
double max_operating_time(double w_max, double t_m_hours);

/// Full profile for one cell; month lengths use the smallest day count seen
/// across the provided years (28 for February unless every year is leap).
DegreeDayProfile build_degree_day_profile(const std::vector<DailyRecord>& series);

/// Regular grid of cell-centre values with bilinear sampling.
struct CellGrid {
    double origin_x = 0.0;  // outer corner of cell (0,0)
    double origin_y = 0.0;
    double pitch = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;  // row-major, index = iy*nx + ix

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
    double cell_center_x(int ix) const { return origin_x + (ix + 0.5) * pitch; }
    double cell_center_y(int iy) const { return origin_y + (iy + 0.5) * pitch; }

    /// Bilinear interpolation between cell centres, clamped at the border;
    /// exact at cell centres.
    double sample(double x, double y) const;
};

/// Refine a grid by an integer factor (e.g. 1 km -> 200 m uses factor 5).
CellGrid refine_bilinear(const CellGrid& coarse, int factor);

}  // namespace gshp
