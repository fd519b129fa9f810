#include "szl/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNodes = 16;

double arg_step(cplx from, cplx to) { return std::arg(to / from); }

struct Sample {
    cplx z;
    cplx f;
};

struct Panel {
    std::vector<Sample> pts;  // start, Gauss nodes, end
    std::vector<double> w;    // quadrature weights for the nodes, times the panel length
};

class Side {
public:
    Side(const Sampler& f, const ContourOptions& opt, double* fmax) : f_(f), opt_(opt), fmax_(fmax) {}

    // panels covering a -> b in order
    std::vector<Panel> run(cplx a, cplx b) {
        out_.clear();
        const int n = std::max(1, opt_.min_panels);
        cplx za = a, fa = eval(a);
        for (int i = 1; i <= n; ++i) {
            const cplx zb = a + (b - a) * (double(i) / n);
            const cplx fb = eval(zb);
            refine(za, fa, zb, fb, 0, std::abs(b - a));
            za = zb;
            fa = fb;
        }
        return std::move(out_);
    }

    cplx eval(cplx z) {
        const cplx v = f_(z);
        if (!is_finite(v)) throw Error(Errc::BoundaryTooClose, "non-finite value on the contour");
        if (v == cplx(0.0)) throw Error(Errc::BoundaryTooClose, "zero on the contour");
        *fmax_ = std::max(*fmax_, std::abs(v));
        ++evals;
        return v;
    }

    long evals = 0;

private:
    Panel build(cplx a, cplx fa, cplx b, cplx fb) {
        const GaussRule& g = gauss_legendre(kNodes);
        Panel p;
        const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
        const double len = std::abs(b - a);
        p.pts.push_back({a, fa});
        std::vector<int> order(kNodes);
        for (int i = 0; i < kNodes; ++i) order[std::size_t(i)] = i;
        std::sort(order.begin(), order.end(), [&](int i, int j) { return g.x[std::size_t(i)] < g.x[std::size_t(j)]; });
        for (int i : order) {
            const cplx z = mid + g.x[std::size_t(i)] * half;
            p.pts.push_back({z, eval(z)});
            p.w.push_back(0.5 * len * g.w[std::size_t(i)]);
        }
        p.pts.push_back({b, fb});
        return p;
    }

    // integrals of log|f| and of the argument relative to the panel start; max arg step
    static void moments(const Panel& p, double* ilog, double* iarg, double* max_step) {
        *ilog = 0.0;
        *iarg = 0.0;
        *max_step = 0.0;
        double arg = 0.0;
        for (std::size_t i = 1; i < p.pts.size(); ++i) {
            const double d = arg_step(p.pts[i - 1].f, p.pts[i].f);
            *max_step = std::max(*max_step, std::abs(d));
            arg += d;
            if (i <= p.w.size()) {
                *ilog += p.w[i - 1] * std::log(std::abs(p.pts[i].f));
                *iarg += p.w[i - 1] * arg;
            }
        }
    }

    void refine(cplx a, cplx fa, cplx b, cplx fb, int depth, double total) {
        const cplx m = 0.5 * (a + b);
        const cplx fm = eval(m);
        const Panel whole = build(a, fa, b, fb);
        const Panel left = build(a, fa, m, fm), right = build(m, fm, b, fb);
        double l0, a0, s0, l1, a1, s1, l2, a2, s2;
        moments(whole, &l0, &a0, &s0);
        moments(left, &l1, &a1, &s1);
        moments(right, &l2, &a2, &s2);
        // right half's argument is relative to its own start
        const double shift = [&] {
            double acc = 0.0;
            for (std::size_t i = 1; i < left.pts.size(); ++i) acc += arg_step(left.pts[i - 1].f, left.pts[i].f);
            return acc;
        }();
        const double len = std::abs(b - a);
        const double split_arg = a1 + a2 + shift * 0.5 * len;
        const double tol = opt_.tol * (1.0 + std::abs(l0) + std::abs(a0));
        const bool smooth = std::max({s0, s1, s2}) < kPi / 2 && std::abs(l0 - (l1 + l2)) < tol && std::abs(a0 - split_arg) < tol;
        if (smooth) {
            out_.push_back(left);
            out_.push_back(right);
            return;
        }
        if (depth >= opt_.max_depth || len < 1e-10 * total)
            throw Error(Errc::BoundaryTooClose, "contour refinement stalled (zero or pole near the boundary)");
        refine(a, fa, m, fm, depth + 1, total);
        refine(m, fm, b, fb, depth + 1, total);
    }

    const Sampler& f_;
    const ContourOptions& opt_;
    double* fmax_;
    std::vector<Panel> out_;
};

struct SideResult {
    double arg_change = 0.0;
    double log_integral = 0.0;  // integral of log|f| against |dz|
    double arg_integral = 0.0;  // integral of the continued argument against |dz|
    double min_modulus = INFINITY;
};

// continues the argument from start_arg along the panels
SideResult accumulate(const std::vector<Panel>& panels, double start_arg) {
    SideResult r;
    double arg = start_arg;
    for (const auto& p : panels) {
        for (std::size_t i = 1; i < p.pts.size(); ++i) {
            arg += arg_step(p.pts[i - 1].f, p.pts[i].f);
            if (i <= p.w.size()) {
                r.log_integral += p.w[i - 1] * std::log(std::abs(p.pts[i].f));
                r.arg_integral += p.w[i - 1] * arg;
            }
        }
        for (const auto& s : p.pts) r.min_modulus = std::min(r.min_modulus, std::abs(s.f));
    }
    r.arg_change = arg - start_arg;
    return r;
}

}  // namespace

ContourResult littlewood_count(const Sampler& f, const Rectangle& r, const ContourOptions& opt) {
    if (!(r.x1 < r.x2) || !(r.y1 < r.y2)) throw Error(Errc::InvalidArgument, "degenerate rectangle");
    double fmax = 0.0;
    Side side(f, opt, &fmax);
    const cplx c11(r.x1, r.y1), c21(r.x2, r.y1), c22(r.x2, r.y2), c12(r.x1, r.y2);
    // counterclockwise from the lower-right corner: right, top, left, bottom
    const auto right = side.run(c21, c22);
    const auto top = side.run(c22, c12);
    const auto left = side.run(c12, c11);
    const auto bottom = side.run(c11, c21);

    const SideResult sr = accumulate(right, 0.0);
    const SideResult st = accumulate(top, sr.arg_change);
    const SideResult sl = accumulate(left, sr.arg_change + st.arg_change);
    const SideResult sb = accumulate(bottom, sr.arg_change + st.arg_change + sl.arg_change);
    const double min_mod = std::min({sr.min_modulus, st.min_modulus, sl.min_modulus, sb.min_modulus});
    if (min_mod < opt.min_modulus * fmax) throw Error(Errc::BoundaryTooClose, "modulus too small on the contour");

    const double total = sr.arg_change + st.arg_change + sl.arg_change + sb.arg_change;
    const double wind = total / (2.0 * kPi);
    ContourResult out;
    out.net_count = std::lround(wind);
    out.residual = std::abs(wind - double(out.net_count));
    if (out.residual > 0.25) throw Error(Errc::NonConvergence, "winding number far from an integer");
    // the bottom side continued leftwards from the lower-right corner differs from the tracked
    // values by the full winding
    const double width = r.x2 - r.x1;
    const double bottom_arg = sb.arg_integral - 2.0 * kPi * double(out.net_count) * width;
    out.horizontal_moment = (sl.log_integral - sr.log_integral + st.arg_integral - bottom_arg) / (2.0 * kPi);
    out.mesh_points = side.evals;
    return out;
}

std::vector<double> zeta_zero_heights(double t_max, double step, const EvalSettings& st) {
    std::vector<double> out;
    double t0 = step, z0 = hardy_z(t0, st);
    for (double t1 = t0 + step; t1 <= t_max + 1e-12; t1 += step) {
        const double z1 = hardy_z(t1, st);
        if ((z0 < 0) != (z1 < 0)) {
            double a = t0, b = t1, za = z0;
            for (int i = 0; i < 60; ++i) {
                const double m = 0.5 * (a + b), zm = hardy_z(m, st);
                if ((zm < 0) == (za < 0)) {
                    a = m;
                    za = zm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        t0 = t1;
        z0 = z1;
    }
    return out;
}

cplx h_closed_form(const ZetaContext& ctx, cplx s) {
    if (!ctx.scat || !(ctx.group.kind == GroupKind::Modular || ctx.group.kind == GroupKind::Gamma0))
        throw Error(Errc::UnsupportedGroup, "H on the strip needs the zeta-ratio closed form");
    return phi_closed_form(ctx.group, s, ctx.settings) / k_factor(*ctx.scat, s, ctx.settings);
}

HCount h_zero_count(const ZetaContext& ctx, double T, const ContourOptions& opt) {
    if (!ctx.scat || !(ctx.group.kind == GroupKind::Modular || ctx.group.kind == GroupKind::Gamma0))
        throw Error(Errc::UnsupportedGroup, "H on the strip needs the zeta-ratio closed form");
    HCount out;
    for (int attempt = 0;; ++attempt) {
        const Rectangle r{0.5, 0.98, 0.1, T};
        try {
            out.contour = littlewood_count([&](cplx s) { return h_closed_form(ctx, s); }, r, opt);
            out.rect = r;
            break;
        } catch (const Error& e) {
            if (e.code() != Errc::BoundaryTooClose || attempt >= 20) throw;
            T += 0.05;
        }
    }
    out.T = T;
    // poles of H sit at half the zeta zeros
    double pole_moment = 0.0;
    for (double g : zeta_zero_heights(2.0 * T + 1.0, 0.05, ctx.settings)) {
        const cplx p(0.25, 0.5 * g);
        if (p.real() > out.rect.x1 && p.real() < out.rect.x2 && p.imag() > out.rect.y1 && p.imag() < out.rect.y2) {
            ++out.poles_inside;
            pole_moment += p.real() - out.rect.x1;
        }
    }
    out.n_ver = out.contour.net_count + out.poles_inside;
    out.n_hor = out.contour.horizontal_moment + pole_moment;
    return out;
}

}  // namespace szl
