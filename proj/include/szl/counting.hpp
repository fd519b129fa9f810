#pragma once

#include <vector>

#include "szl/zeta.hpp"

namespace szl {

struct Rectangle {
    double x1 = 0.0, x2 = 1.0;
    double y1 = 0.0, y2 = 1.0;
};

struct ContourResult {
    long net_count = 0;             // zeros minus poles inside
    double horizontal_moment = 0.0; // sum over zeros of (sigma - x1) minus the same over poles
    double residual = 0.0;          // distance of the raw winding number to the nearest integer
    long mesh_points = 0;
};

struct ContourOptions {
    double tol = 1e-10;        // per-panel quadrature agreement, relative to the panel integrals
    int max_depth = 40;
    int min_panels = 1;        // initial split of each side
    double min_modulus = 1e-12; // relative to the largest sampled modulus
};

ContourResult littlewood_count(const Sampler& f, const Rectangle& r, const ContourOptions& opt = {});

// ordinates in (0, t_max] of sign changes of the Hardy Z function, refined by bisection
std::vector<double> zeta_zero_heights(double t_max, double step = 0.05, const EvalSettings& st = {});

struct HCount {
    long n_ver = 0;
    double n_hor = 0.0;
    double T = 0.0;       // height actually used after boundary perturbation
    long poles_inside = 0;
    ContourResult contour;
    Rectangle rect;
};

// H = phi / K from the closed form on [1/2, 0.98] x [0.1, T]
HCount h_zero_count(const ZetaContext& ctx, double T, const ContourOptions& opt = {});
cplx h_closed_form(const ZetaContext& ctx, cplx s);

}  // namespace szl
