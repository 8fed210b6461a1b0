#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace gshp {

constexpr double kHoursPerYear = 8760.0;
constexpr double kSecondsPerYear = 8760.0 * 3600.0;
constexpr double kSecondsPerMonth = kSecondsPerYear / 12.0;
constexpr double kMinSpacing = 5.0;  // m, norm minimum between boreholes

/// Ground thermal properties and norm parameters of one grid cell, valid for
/// every candidate borehole depth at that location.
struct GroundColumn {
    double lambda = 2.0;      ///< thermal conductivity, W/(m K)
    double alpha = 1.0e-6;    ///< thermal diffusivity, m^2/s
    double T0 = 11.0;         ///< ground surface temperature, degC
    double dTdz = 0.03;       ///< vertical temperature gradient, K/m
    double H_max = 200.0;     ///< maximum allowed drilling depth, m (0 = prohibited)
    double Rb = 0.10;         ///< borehole thermal resistance R_b*, m K/W
    double r_b = 0.06;        ///< borehole radius, m
    std::map<int, double> q_nom_by_depth;  ///< depth m -> nominal extraction rate, W/m

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;

    double q_nom(int depth_m) const;
};

/// Long-term, field-interference and seasonal thermal resistances of one
/// borehole arrangement, all in m K/W.
struct ResistanceSet {
    double R_LT = 0.0;
    double R_field = 0.0;
    double R_seas = 0.0;
};

/// Lambda-independent finite-line-source integral; the mean-over-depth step
/// response is this value divided by 4*pi*lambda.  Exposed so that callers can
/// cache it across cells that differ only in conductivity.
double fls_kernel_integral(double r, double H, double alpha_t, double abs_tol = 2.0e-6);

/// Mean-over-depth temperature response per unit line load (K per W/m) at
/// radial distance r from a borehole of depth H, a time t after a constant
/// extraction started.  Isothermal ground surface (image line sink).
double fls_step_response(double r, double H, double t_seconds, const GroundColumn& ground);

/// Memo of kernel integrals keyed by (r, H, alpha*t).  Thread-safe; since the
/// memoised function is pure, cached runs are bit-identical to uncached ones.
class FlsCache {
public:
    double step_response(double r, double H, double t_seconds, const GroundColumn& ground);

private:
    struct Key {
        std::int64_t r_um, h_mm, at_mm2;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    std::unordered_map<Key, double, KeyHash> memo_;
    std::mutex mutex_;
};

/// Long-term resistance of the borehole itself: step response at the borehole
/// wall after a heat extraction pulse of t_dim years.
double compute_R_LT(double H, const GroundColumn& ground, double t_dim_years,
                    FlsCache* cache = nullptr);

/// Mean thermal interference of all other boreholes in a rectangular
/// n_cols x n_rows grid of pitch B, evaluated at t_dim years.
double compute_R_field(double B, double H, int n_rows, int n_cols, const GroundColumn& ground,
                       double t_dim_years, FlsCache* cache = nullptr);

/// Same, for an explicit borehole layout (truncated or irregular fields).
double compute_R_field_points(std::span<const std::array<double, 2>> xy, double H,
                              const GroundColumn& ground, double t_dim_years,
                              FlsCache* cache = nullptr);

/// Seasonal maximum resistance: peak borehole-wall response per unit-amplitude
/// sinusoidal line load of one-year period, from monthly step superposition
/// over three simulated years (max of the third, periodic steady state).
double compute_R_seas(double H, const GroundColumn& ground, FlsCache* cache = nullptr);

/// Undisturbed ground temperature at half the borehole depth, degC.
double undisturbed_T_g(double H, const GroundColumn& ground);

}  // namespace gshp
