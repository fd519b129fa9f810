#pragma once

#include <map>
#include <optional>
#include <vector>

#include "szl/invariants.hpp"

namespace szl {

struct ContextOptions {
    double census_cutoff = 1e5;
    DecomposeOptions decompose;
    InvariantOptions invariants;
    EvalSettings settings;
};

struct ZetaContext {
    GroupDescriptor group;
    bool has_census = false;
    double census_cutoff = 0.0;
    std::vector<GeodesicClass> census;
    std::optional<ScatteringData> scat;
    SurfaceInvariants inv;
    EvalSettings settings;

    GeneralDirichletSeries log_z;  // log Z as a series over all classes
    GeneralDirichletSeries d;      // Z'/Z
    GeneralDirichletSeries d1;     // (ZH)'/(ZH) = Z'/Z + H'/H
    double series_cutoff = 0.0;    // cutoff of d1 and its powers
    double sigma0 = 0.0;           // empirical abscissa of d1

    const GeneralDirichletSeries& dk(int k) const;

private:
    mutable std::map<int, GeneralDirichletSeries> dk_cache_;
};

ZetaContext build_context(const GroupDescriptor& g, const ContextOptions& opt = {});
// rebuilds the series from census, scattering data and invariants already in ctx
void attach_series(ZetaContext& ctx);

// von Mangoldt weight of a census entry (per class)
double mangoldt(const GeodesicClass& c);

Estimate selberg_log_z(const ZetaContext& ctx, cplx s);
Estimate d_m(const ZetaContext& ctx, cplx s);
double psi_m(const ZetaContext& ctx, double x);

cplx eta_logderiv(const ZetaContext& ctx, cplx s);
cplx f_m(const ZetaContext& ctx, cplx s);
cplx f_logderiv(const ZetaContext& ctx, cplx s);
// K'/K, zero for compact surfaces
cplx k_logderiv(const ZetaContext& ctx, cplx s);

// Z~_j(s) for Re s > 1
Estimate z_tilde(const ZetaContext& ctx, int j, cplx s);
// (ZH)^{(k)}(s)
Estimate zh_and_derivatives(const ZetaContext& ctx, int k, cplx s);
// A^s (ZH)^{(k)}(s) / a_k
Estimate x_mk(const ZetaContext& ctx, int k, cplx s);
// Re(-(ZH)'/(ZH)(sigma + i t)) through the functional equation, sigma < 0
double nonvanishing_probe(const ZetaContext& ctx, double sigma, double t);

}  // namespace szl
