#include "szl/invariants.hpp"

#include <cmath>

namespace szl {

const char* trichotomy_name(Trichotomy t) {
    switch (t) {
        case Trichotomy::GeodesicSmaller: return "GeodesicSmaller";
        case Trichotomy::ScatteringSmaller: return "ScatteringSmaller";
        case Trichotomy::Equal: return "Equal";
    }
    return "?";
}

double SurfaceInvariants::a_k(int k) const {
    if (k < 1) throw Error(Errc::InvalidArgument, "a_k needs k >= 1");
    const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
    return sign * a * std::pow(std::log(A), k - 1);
}

namespace {

double geodesic_term(int m0, double l0) { return m0 * l0 / (1.0 - std::exp(-l0)); }

}  // namespace

SurfaceInvariants invariants(const GroupDescriptor& g, const ScatteringData* sd, const InvariantOptions& opt) {
    SurfaceInvariants inv;
    inv.volume = volume(g);
    if (g.kind == GroupKind::AbstractCompact) {
        if (!g.systole_length || !(*g.systole_length > 0))
            throw Error(Errc::InvalidArgument, "compact surface needs a positive systole length");
        inv.systole_length = *g.systole_length;
        inv.m0 = opt.m0_override.value_or(g.systole_multiplicity);
        inv.exp_systole = std::exp(inv.systole_length);
        inv.A = inv.exp_systole;
        inv.a = geodesic_term(inv.m0, inv.systole_length);
        inv.trichotomy = Trichotomy::GeodesicSmaller;
        return inv;
    }
    if (!sd) throw Error(Errc::InvalidArgument, "scattering data required for cusped groups");

    const SystoleResult sys = systole_search(g, opt.trace_ceiling);
    inv.systole = sys;
    inv.systole_length = sys.length;
    inv.exp_systole = sys.exp_length.to_double();
    if (opt.m0_override) {
        inv.m0 = *opt.m0_override;
        inv.m0_exact = false;
    } else {
        const MultiplicityResult m = systole_multiplicity(g, opt.m0_search_bound);
        inv.m0 = m.count;
        inv.m0_exact = m.exact;
    }
    inv.n1 = sd->n1;
    inv.g1 = sd->g1();
    inv.d1 = sd->d1();
    inv.g_ratio_sq = sd->g_ratio_sq;

    const int cmp = sys.exp_length.compare(sd->g_ratio_sq);
    const double geo = geodesic_term(inv.m0, inv.systole_length);
    if (cmp < 0) {
        inv.trichotomy = Trichotomy::GeodesicSmaller;
        inv.A = inv.exp_systole;
        inv.a = geo;
    } else if (cmp > 0) {
        inv.trichotomy = Trichotomy::ScatteringSmaller;
        inv.A = sd->g_ratio_sq.to_double();
        inv.a = sd->b_at_ratio;
    } else {
        inv.trichotomy = Trichotomy::Equal;
        inv.A = inv.exp_systole;
        inv.a = geo + sd->b_at_ratio;
    }
    if (inv.a == 0.0) throw Error(Errc::ZeroACoefficient, "a vanishes for " + g.id);
    return inv;
}

SurfaceInvariants compact_twin(const SurfaceInvariants& inv) {
    SurfaceInvariants t;
    t.volume = inv.volume;
    t.systole_length = inv.systole_length;
    t.m0 = inv.m0;
    t.m0_exact = inv.m0_exact;
    t.exp_systole = std::exp(inv.systole_length);
    t.A = t.exp_systole;
    t.a = geodesic_term(t.m0, t.systole_length);
    t.trichotomy = Trichotomy::GeodesicSmaller;
    return t;
}

}  // namespace szl
