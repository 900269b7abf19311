#pragma once

#include <cstddef>
#include <vector>

#include "typea/model_config.hpp"

namespace typea {

struct SlipRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct Mesh {
    std::size_t n_s = 15;
    std::size_t n_v = 12;
};

/// Slips that converge to the stable equilibrium: [lower, upper).
struct BasinInterval {
    double lower = 0.0;
    double upper = 0.0;
    /// true when no unstable root lies inside the domain and upper is the domain cap
    bool capped = false;
    double stable_slip = 0.0;
};

/// Basin of the stable root at v_w. Lower edge is 0 (generator side only);
/// upper edge is the unstable root, or slip_domain_upper when there is none.
BasinInterval basin_interval(const ModelDef& model, double v_w);

/// Zero band applied when taking the sign of W.
inline constexpr double kSignZeroBand = 1e-12;

int sign_with_band(double w) noexcept;

struct GridCell {
    double w_value = 0.0;  ///< (T_m - T_e) / M
    int w_sign = 0;
    bool in_basin = false;
};

/// Sign field and basin membership over the (s, v_w) plane.
/// Cell (i_v, i_s) is stored at i_v * s_axis.size() + i_s.
struct GridMap {
    std::vector<double> s_axis;
    std::vector<double> v_axis;
    std::vector<GridCell> cells;
    /// per wind column; lower = upper = 0 when no stable equilibrium exists
    std::vector<BasinInterval> basins;

    const GridCell& at(std::size_t i_v, std::size_t i_s) const { return cells[i_v * s_axis.size() + i_s]; }
};

/// Evaluates W on the mesh. Basin membership comes from the root structure
/// of each wind column, so columns with no stable equilibrium are all
/// out-of-basin. Columns run on up to `threads` workers (0 = automatic);
/// the result does not depend on the worker count.
GridMap classify_grid(const ModelDef& model, SlipRange s_range = {0.0, 0.5}, SlipRange v_range = {0.6, 1.2},
                      Mesh mesh = {}, std::size_t threads = 0);

/// Quiver node: wind is a parameter, so the second field component is identically 0.
struct FieldSample {
    double s = 0.0;
    double v_w = 0.0;
    double w = 0.0;
    double dv = 0.0;
};

std::vector<FieldSample> vector_field_samples(const ModelDef& model, SlipRange s_range = {0.0, 0.48},
                                              SlipRange v_range = {0.6, 1.15}, Mesh mesh = {15, 12},
                                              std::size_t threads = 0);

}  // namespace typea
