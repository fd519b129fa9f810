#include "szl/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szl {

namespace {

constexpr double kPi = std::numbers::pi;

bool census_supported(const GroupDescriptor& g) {
    return g.kind == GroupKind::Modular || g.kind == GroupKind::Gamma0;
}

void require_census(const ZetaContext& ctx) {
    if (!ctx.has_census) throw Error(Errc::UnsupportedGroup, "no geodesic census for " + ctx.group.id);
}

// propagated error must stay below tail_tol relative to 1 + |value|
Estimate checked(Estimate e, const EvalSettings& st, const char* what) {
    if (!(e.error <= st.tail_tol * (1.0 + std::abs(e.value))))
        throw Error(Errc::DivergentTail, std::string(what) + ": truncation error " + std::to_string(e.error) +
                                             " exceeds tolerance");
    return e;
}

Estimate raw(const GeneralDirichletSeries& d, cplx s) {
    const SeriesValue v = evaluate_raw(d, s);
    return {v.value, v.tail};
}

cplx finite_or_pole(cplx v, const char* what) {
    if (!is_finite(v)) throw Error(Errc::PoleHit, what);
    return v;
}

// cos(a u) / cos(pi u) for |a| < pi without overflow at large |Im u|
cplx cos_ratio(double a, cplx u) {
    if (u.imag() < 0) u = -u;
    a = std::abs(a);
    const cplx i(0.0, 1.0);
    return std::exp(i * (kPi - a) * u) * (1.0 + std::exp(2.0 * i * a * u)) / (1.0 + std::exp(2.0 * i * kPi * u));
}

cplx tan_pi(cplx u, const char* what) {
    if (std::abs(std::cos(kPi * u)) < 1e-12) throw Error(Errc::PoleHit, what);
    return std::tan(kPi * u);
}

cplx digamma_or_pole(cplx s, const EvalSettings& st) {
    try {
        return digamma(s, st).value;
    } catch (const Error& e) {
        if (e.code() == Errc::PoleAtNonPositiveInteger) throw Error(Errc::PoleHit, "digamma pole");
        throw;
    }
}

double inner_radius(const ZetaContext& ctx, cplx w) {
    return std::min(ctx.settings.cauchy_radius, 0.5 * (w.real() - 1.0));
}

Estimate z_tilde_raw(const ZetaContext& ctx, int j, cplx w);

Estimate z_tilde_logderiv(const ZetaContext& ctx, int i, cplx w) {
    if (i == 0) return raw(ctx.d, w);
    const Estimate v = z_tilde_raw(ctx, i, w);
    const auto dv = cauchy_derivative([&](cplx x) { return z_tilde_raw(ctx, i, x).value; }, w, 1,
                                      inner_radius(ctx, w), ctx.settings);
    const cplx r = dv.value / v.value;
    return {r, std::abs(r) * (v.error / std::abs(v.value)) + dv.error / std::abs(v.value)};
}

Estimate z_tilde_raw(const ZetaContext& ctx, int j, cplx w) {
    if (j == 0) {
        const Estimate lz = raw(ctx.log_z, w);
        const cplx z = std::exp(lz.value);
        return {z, std::abs(z) * lz.error};
    }
    if (j == 1) {
        const Estimate dz = raw(ctx.d, w);
        const cplx f = f_m(ctx, w);
        const cplx v = (eta_logderiv(ctx, w) - k_logderiv(ctx, 1.0 - w) - dz.value) / f;
        return {v, dz.error / std::abs(f)};
    }
    // recursion evaluated at the reflected point 1 - w
    const cplx s = 1.0 - w;
    const cplx f = f_m(ctx, s);
    cplx acc = double(j - 1) * f_logderiv(ctx, s) + eta_logderiv(ctx, s) - k_logderiv(ctx, s);
    double err = 0.0;
    for (int i = 0; i < j; ++i) {
        const Estimate l = z_tilde_logderiv(ctx, i, w);
        acc -= l.value;
        err += l.error;
    }
    return {acc / f, err / std::abs(f)};
}

}  // namespace

double mangoldt(const GeodesicClass& c) {
    return std::log(c.primitive_norm) / (1.0 - 1.0 / c.norm);
}

const GeneralDirichletSeries& ZetaContext::dk(int k) const {
    if (k < 1) throw Error(Errc::InvalidArgument, "D_k needs k >= 1");
    auto it = dk_cache_.find(k);
    if (it != dk_cache_.end()) return it->second;
    GeneralDirichletSeries v = k == 1 ? d1 : add(multiply(dk(k - 1), d1, series_cutoff), differentiate(dk(k - 1)));
    return dk_cache_.emplace(k, std::move(v)).first->second;
}

void attach_series(ZetaContext& ctx) {
    if (!ctx.has_census) return;
    std::vector<DirichletTerm> lz, dz;
    for (const auto& c : ctx.census) {
        const double m = double(c.multiplicity);
        lz.push_back({c.norm, -m / (double(c.power) * (1.0 - 1.0 / c.norm))});
        dz.push_back({c.norm, m * mangoldt(c)});
    }
    ctx.log_z = GeneralDirichletSeries(lz, ctx.census_cutoff);
    ctx.d = GeneralDirichletSeries(dz, ctx.census_cutoff);
    GeneralDirichletSeries b;
    double q = ctx.census_cutoff;
    if (ctx.scat) {
        b = ctx.scat->b_series;
        q = std::min(q, b.cutoff());
    }
    ctx.series_cutoff = q;
    ctx.d1 = add(truncate(ctx.d, q), truncate(b, q));
    ctx.sigma0 = empirical_abscissa(ctx.d1, 1.0, 12.0);
}

ZetaContext build_context(const GroupDescriptor& g, const ContextOptions& opt) {
    opt.settings.validate();
    ZetaContext ctx;
    ctx.group = g;
    ctx.settings = opt.settings;
    if (g.kind != GroupKind::AbstractCompact) ctx.scat = decompose(g, opt.decompose);
    ctx.inv = invariants(g, ctx.scat ? &*ctx.scat : nullptr, opt.invariants);
    if (census_supported(g)) {
        if (!(opt.census_cutoff > ctx.inv.exp_systole))
            throw Error(Errc::CutoffTooSmall, "census cutoff below the systole norm");
        ctx.has_census = true;
        ctx.census_cutoff = opt.census_cutoff;
        ctx.census = geodesic_census(g, opt.census_cutoff);
        attach_series(ctx);
    }
    return ctx;
}

Estimate selberg_log_z(const ZetaContext& ctx, cplx s) {
    require_census(ctx);
    return checked(raw(ctx.log_z, s), ctx.settings, "log Z");
}

Estimate d_m(const ZetaContext& ctx, cplx s) {
    require_census(ctx);
    return checked(raw(ctx.d, s), ctx.settings, "Z'/Z");
}

double psi_m(const ZetaContext& ctx, double x) {
    require_census(ctx);
    if (x > ctx.census_cutoff) throw Error(Errc::CutoffTooSmall, "psi beyond the census cutoff");
    double acc = 0.0;
    for (const auto& c : ctx.census) {
        if (c.norm > x) break;
        acc += double(c.multiplicity) * mangoldt(c);
    }
    return acc;
}

cplx eta_logderiv(const ZetaContext& ctx, cplx s) {
    const Signature& sig = ctx.group.signature;
    const double vol = ctx.inv.volume;
    const cplx u = s - 0.5;
    cplx v = vol * u * tan_pi(u, "eta'/eta pole");
    // every elliptic class R^k of an order-m point: theta = pi k / m, centralizer order m
    for (int m : sig.elliptic_orders)
        for (int k = 1; k < m; ++k) {
            const double th = kPi * k / m;
            v -= kPi / (m * std::sin(th)) * cos_ratio(2.0 * th - kPi, u);
        }
    const int n1 = sig.cusps;
    if (n1 > 0)
        v += 2.0 * n1 * std::log(2.0) +
             double(n1) * (digamma_or_pole(0.5 + s, ctx.settings) + digamma_or_pole(1.5 - s, ctx.settings));
    return finite_or_pole(v, "eta'/eta pole");
}

cplx f_m(const ZetaContext& ctx, cplx s) {
    const cplx u = 0.5 - s;
    return finite_or_pole(ctx.inv.volume * u * tan_pi(u, "f pole"), "f pole");
}

cplx f_logderiv(const ZetaContext&, cplx s) {
    const cplx u = 0.5 - s;
    if (std::abs(u) < 1e-14 || std::abs(std::sin(2.0 * kPi * u)) < 1e-12) throw Error(Errc::PoleHit, "f'/f pole");
    return finite_or_pole(-1.0 / u - 2.0 * kPi / std::sin(2.0 * kPi * u), "f'/f pole");
}

cplx k_logderiv(const ZetaContext& ctx, cplx s) {
    if (!ctx.scat) return 0.0;
    return finite_or_pole(k_logderiv(*ctx.scat, s, ctx.settings), "K'/K pole");
}

Estimate z_tilde(const ZetaContext& ctx, int j, cplx s) {
    if (j < 0) throw Error(Errc::InvalidArgument, "z_tilde needs j >= 0");
    require_census(ctx);
    if (!(s.real() > 1.0)) throw Error(Errc::InvalidArgument, "z_tilde is served for Re s > 1");
    return checked(z_tilde_raw(ctx, j, s), ctx.settings, "Z~");
}

Estimate zh_and_derivatives(const ZetaContext& ctx, int k, cplx s) {
    if (k < 0) throw Error(Errc::InvalidArgument, "derivative order must be >= 0");
    require_census(ctx);
    const Estimate lz = selberg_log_z(ctx, s);
    cplx h = 1.0;
    double herr = 0.0;
    if (ctx.scat) {
        const SeriesValue hv = evaluate(ctx.scat->H, s, ctx.settings);
        h = hv.value;
        herr = hv.tail;
    }
    const cplx zh = std::exp(lz.value) * h;
    double err = std::abs(zh) * (lz.error + herr / std::abs(h));
    if (k == 0) return {zh, err};
    const SeriesValue dv = evaluate(ctx.dk(k), s, ctx.settings);
    return {zh * dv.value, err * std::abs(dv.value) + std::abs(zh) * dv.tail};
}

Estimate x_mk(const ZetaContext& ctx, int k, cplx s) {
    if (k < 1) throw Error(Errc::InvalidArgument, "x_mk needs k >= 1");
    const double ak = ctx.inv.a_k(k);
    if (ak == 0.0) throw Error(Errc::ZeroACoefficient, "a_k vanishes");
    const Estimate v = zh_and_derivatives(ctx, k, s);
    const cplx f = std::exp(s * std::log(ctx.inv.A)) / ak;
    return {f * v.value, std::abs(f) * v.error};
}

double nonvanishing_probe(const ZetaContext& ctx, double sigma, double t) {
    if (!(sigma < 0)) throw Error(Errc::InvalidArgument, "probe needs sigma < 0");
    require_census(ctx);
    const cplx s(sigma, t);
    const Estimate dz = raw(ctx.d, 1.0 - s);
    const cplx v = -eta_logderiv(ctx, s) + k_logderiv(ctx, s) + dz.value;
    checked({v, dz.error}, ctx.settings, "probe");
    return v.real();
}

}  // namespace szl
