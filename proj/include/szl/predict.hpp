#pragma once

#include <cmath>

#include "szl/invariants.hpp"

namespace szl {

enum class ErrorClass { littleO_T, bigO_logT, bigO_T_over_logT };

const char* error_class_name(ErrorClass e);

// coeff_T2 T^2 + coeff_TlogT T log T + coeff_T T; error class is metadata only
struct AsymptoticExpansion {
    double coeff_T2 = 0.0;
    double coeff_TlogT = 0.0;
    double coeff_T = 0.0;
    ErrorClass error_class = ErrorClass::littleO_T;

    double operator()(double T) const { return coeff_T2 * T * T + coeff_TlogT * T * std::log(T) + coeff_T * T; }
};

// vertical count of zeros of (ZH)^{(k)}
AsymptoticExpansion predict_nver_deriv(const SurfaceInvariants& inv, int k);
// horizontal count of zeros of (ZH)^{(k)}
AsymptoticExpansion predict_nhor_deriv(const SurfaceInvariants& inv, int k);
AsymptoticExpansion predict_weyl(const SurfaceInvariants& inv);
AsymptoticExpansion predict_weyl_new(const SurfaceInvariants& inv);
// T coefficient by which the restated Weyl law departs from the classical one
double weyl_discrepancy(const SurfaceInvariants& inv);
// horizontal count of zeros of H
AsymptoticExpansion predict_hejhal_h(const SurfaceInvariants& inv);

struct Residual {
    double res_TlogT = 0.0;
    double res_T = 0.0;
};
// nhor(M) - hejhal(M) - nhor(compact twin); needs GeodesicSmaller
Residual comparison_residual(const SurfaceInvariants& inv, int k);

double short_sum(const SurfaceInvariants& inv, double T, double U);
double ratio_vanishing(const SurfaceInvariants& inv, int k, double T);

}  // namespace szl
