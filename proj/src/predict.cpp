#include "szl/predict.hpp"

#include <cmath>
#include <numbers>

namespace szl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require_a(const SurfaceInvariants& inv) {
    if (inv.a == 0.0) throw Error(Errc::ZeroACoefficient, "a vanishes");
}

}  // namespace

const char* error_class_name(ErrorClass e) {
    switch (e) {
        case ErrorClass::littleO_T: return "o(T)";
        case ErrorClass::bigO_logT: return "O(log T)";
        case ErrorClass::bigO_T_over_logT: return "O(T/log T)";
    }
    return "?";
}

AsymptoticExpansion predict_nver_deriv(const SurfaceInvariants& inv, int k) {
    if (k < 1) throw Error(Errc::InvalidArgument, "derivative order must be >= 1");
    require_a(inv);
    AsymptoticExpansion e;
    e.coeff_T2 = inv.volume / (4.0 * kPi);
    e.coeff_T = -(std::log(inv.A) + 2.0 * inv.n1 * std::log(2.0) + 2.0 * std::log(inv.g1)) / kTwoPi;
    return e;
}

AsymptoticExpansion predict_nhor_deriv(const SurfaceInvariants& inv, int k) {
    if (k < 1) throw Error(Errc::InvalidArgument, "derivative order must be >= 1");
    require_a(inv);
    const double n1 = inv.n1;
    AsymptoticExpansion e;
    e.coeff_TlogT = (n1 / 2.0 + 1.0) / kTwoPi;
    e.coeff_T = (std::log(inv.volume * std::sqrt(inv.A) / std::abs(inv.a)) - 1.0 +
            std::log(inv.g1 / (std::pow(kPi, n1 / 2.0) * std::abs(inv.d1))) - n1 / 2.0) /
           kTwoPi;
    if (k >= 2) {
        const double logA = std::log(inv.A);
        if (logA == 0.0) throw Error(Errc::UnitA, "log A vanishes");
        e.coeff_TlogT += (k - 1) / kTwoPi;
        e.coeff_T += (k - 1) * (std::log(inv.volume) - 1.0) / kTwoPi - std::log((k - 1) * logA) / kTwoPi;
    }
    return e;
}

AsymptoticExpansion predict_weyl(const SurfaceInvariants& inv) {
    AsymptoticExpansion e;
    e.coeff_T2 = inv.volume / (4.0 * kPi);
    e.coeff_TlogT = -inv.n1 / kPi;
    e.coeff_T = inv.n1 * (1.0 - std::log(2.0)) / kPi;
    e.error_class = ErrorClass::bigO_T_over_logT;
    return e;
}

AsymptoticExpansion predict_weyl_new(const SurfaceInvariants& inv) {
    AsymptoticExpansion e = predict_weyl(inv);
    e.coeff_T += weyl_discrepancy(inv);
    return e;
}

double weyl_discrepancy(const SurfaceInvariants& inv) { return 0.0 - std::log(inv.g1) / kPi; }

AsymptoticExpansion predict_hejhal_h(const SurfaceInvariants& inv) {
    const double n1 = inv.n1;
    AsymptoticExpansion e;
    e.error_class = ErrorClass::bigO_logT;
    if (inv.n1 == 0) return e;
    e.coeff_TlogT = n1 / (4.0 * kPi);
    e.coeff_T = -(n1 / 2.0 + n1 / 2.0 * std::log(kPi) + std::log(std::abs(inv.d1)) - std::log(inv.g1)) / kTwoPi;
    return e;
}

Residual comparison_residual(const SurfaceInvariants& inv, int k) {
    if (inv.trichotomy != Trichotomy::GeodesicSmaller)
        throw Error(Errc::WrongTrichotomy, "comparison needs A = exp(systole length)");
    const auto m = predict_nhor_deriv(inv, k);
    const auto h = predict_hejhal_h(inv);
    const auto c = predict_nhor_deriv(compact_twin(inv), k);
    return {m.coeff_TlogT - h.coeff_TlogT - c.coeff_TlogT, m.coeff_T - h.coeff_T - c.coeff_T};
}

double short_sum(const SurfaceInvariants& inv, double T, double U) {
    if (!(U > 0 && U < T)) throw Error(Errc::InvalidArgument, "short sum needs 0 < U < T");
    require_a(inv);
    const double n1 = inv.n1;
    const double c = std::log(inv.g1 * inv.volume * std::sqrt(inv.A) /
                              (std::pow(kPi, n1 / 2.0) * std::abs(inv.d1) * std::abs(inv.a)));
    return ((n1 / 2.0 + 1.0) * U * std::log(T + U) + c * U) / kTwoPi;
}

double ratio_vanishing(const SurfaceInvariants& inv, int k, double T) {
    if (!(T > 1)) throw Error(Errc::InvalidArgument, "ratio needs T > 1");
    return predict_nhor_deriv(inv, k)(T) / predict_nver_deriv(inv, k)(T);
}

}  // namespace szl
