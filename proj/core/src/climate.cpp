#include "gshp/climate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gshp {

namespace {

constexpr double kHddBase = 20.0;       // degC, norm room temperature
constexpr double kHddThreshold = 12.0;  // degC, heating limit
constexpr double kCddReference = 18.0;  // degC

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

// Per-month degree days for each (year, month) present in the series, then
// averaged across years.  Incomplete months are rejected.
std::array<double, 12> monthly_degree_days(const std::vector<DailyRecord>& series,
                                           double (*day_value)(double)) {
    std::map<std::pair<int, int>, std::pair<double, int>> acc;  // (year,month) -> (dd, days)
    for (const auto& rec : series) {
        if (rec.month < 1 || rec.month > 12 || rec.day < 1 ||
            rec.day > days_in_month(rec.year, rec.month)) {
            throw std::invalid_argument("invalid date in temperature series");
        }
        if (!std::isfinite(rec.t_mean_c)) {
            throw std::invalid_argument("non-finite temperature in series");
        }
        auto& slot = acc[{rec.year, rec.month}];
        slot.first += day_value(rec.t_mean_c);
        slot.second += 1;
    }
    std::array<double, 12> mean{};
    std::array<int, 12> years{};
    for (const auto& [ym, dd_days] : acc) {
        if (dd_days.second != days_in_month(ym.first, ym.second)) {
            throw std::invalid_argument("temperature series has an incomplete month");
        }
        mean[ym.second - 1] += dd_days.first;
        years[ym.second - 1] += 1;
    }
    for (int m = 0; m < 12; ++m) {
        if (years[m] > 0) mean[m] /= years[m];
    }
    return mean;
}

double hdd_day(double t) { return t <= kHddThreshold ? kHddBase - t : 0.0; }
double cdd_day(double t) { return t >= kCddReference ? t - kCddReference : 0.0; }

int min_day_count(const std::vector<DailyRecord>& series, int month) {
    int count = 31;
    bool seen = false;
    std::map<int, bool> years;
    for (const auto& rec : series) {
        if (rec.month == month) years[rec.year] = true;
    }
    for (const auto& [year, _] : years) {
        count = std::min(count, days_in_month(year, month));
        seen = true;
    }
    return seen ? count : days_in_month(2001, month);
}

}  // namespace

int days_in_month(int year, int month) {
    static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) throw std::invalid_argument("month out of range");
    if (month == 2 && is_leap(year)) return 29;
    return lengths[month - 1];
}

std::array<double, 12> compute_hdd(const std::vector<DailyRecord>& series) {
    return monthly_degree_days(series, hdd_day);
}

std::array<double, 12> compute_cdd(const std::vector<DailyRecord>& series) {
    return monthly_degree_days(series, cdd_day);
}

std::optional<LoadWeight> load_weights(const std::array<double, 12>& monthly_dd) {
    double total = 0.0;
    for (double v : monthly_dd) {
        if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("negative degree days");
        total += v;
    }
    if (total <= 0.0) return std::nullopt;
    int argmax = 0;
    for (int m = 1; m < 12; ++m) {
        if (monthly_dd[m] > monthly_dd[argmax]) argmax = m;  // earliest month wins ties
    }
    return LoadWeight{1.05 * monthly_dd[argmax] / total, argmax};
}

double max_operating_time(double w_max, double t_m_hours) {
    if (w_max <= 0.0) throw std::invalid_argument("w_max must be > 0");
    return std::min(t_m_hours / w_max, 8760.0);
}

DegreeDayProfile build_degree_day_profile(const std::vector<DailyRecord>& series) {
    DegreeDayProfile profile;
    profile.hdd = compute_hdd(series);
    profile.cdd = compute_cdd(series);
    if (auto w = load_weights(profile.hdd)) {
        profile.has_heating = true;
        profile.w_hdd_max = w->w_max;
        profile.t_m_heat_h = 24.0 * min_day_count(series, w->month + 1);
    }
    if (auto w = load_weights(profile.cdd)) {
        profile.has_cooling = true;
        profile.w_cdd_max = w->w_max;
        profile.t_m_cool_h = 24.0 * min_day_count(series, w->month + 1);
    }
    return profile;
}

double CellGrid::sample(double x, double y) const {
    if (nx < 1 || ny < 1) throw std::logic_error("empty grid");
    const double fx = (x - origin_x) / pitch - 0.5;
    const double fy = (y - origin_y) / pitch - 0.5;
    const double cx = std::clamp(fx, 0.0, static_cast<double>(nx - 1));
    const double cy = std::clamp(fy, 0.0, static_cast<double>(ny - 1));
    const int ix = std::min(static_cast<int>(cx), nx - 2 >= 0 ? nx - 2 : 0);
    const int iy = std::min(static_cast<int>(cy), ny - 2 >= 0 ? ny - 2 : 0);
    if (nx == 1 && ny == 1) return at(0, 0);
    const double tx = nx == 1 ? 0.0 : cx - ix;
    const double ty = ny == 1 ? 0.0 : cy - iy;
    const int ix1 = nx == 1 ? ix : ix + 1;
    const int iy1 = ny == 1 ? iy : iy + 1;
    return (1.0 - tx) * (1.0 - ty) * at(ix, iy) + tx * (1.0 - ty) * at(ix1, iy) +
           (1.0 - tx) * ty * at(ix, iy1) + tx * ty * at(ix1, iy1);
}

CellGrid refine_bilinear(const CellGrid& coarse, int factor) {
    if (factor < 1) throw std::invalid_argument("refinement factor must be >= 1");
    CellGrid fine;
    fine.origin_x = coarse.origin_x;
    fine.origin_y = coarse.origin_y;
    fine.pitch = coarse.pitch / factor;
    fine.nx = coarse.nx * factor;
    fine.ny = coarse.ny * factor;
    fine.values.resize(static_cast<std::size_t>(fine.nx) * fine.ny);
    for (int iy = 0; iy < fine.ny; ++iy) {
        for (int ix = 0; ix < fine.nx; ++ix) {
            fine.values[static_cast<std::size_t>(iy) * fine.nx + ix] =
                coarse.sample(fine.cell_center_x(ix), fine.cell_center_y(iy));
        }
    }
    return fine;
}

}  // namespace gshp
