#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "szl/zeta.hpp"

using namespace szl;

namespace {

const double kPi = std::numbers::pi;

const ZetaContext& modular_ctx() {
    static const ZetaContext ctx = [] {
        ContextOptions o;
        o.census_cutoff = 1e5;
        return build_context(modular_group(), o);
    }();
    return ctx;
}

ZetaContext with_tail_tol(double tol) {
    ZetaContext c = modular_ctx();
    c.settings.tail_tol = tol;
    return c;
}

}  // namespace

TEST_CASE("log Z far to the right") {
    const auto& ctx = modular_ctx();
    const double n00 = std::pow((3 + std::sqrt(5.0)) / 2, 2);
    const double first = ctx.inv.m0 * std::pow(n00, -20.0);
    const double v = std::abs(selberg_log_z(ctx, 20.0).value);
    CHECK(v >= first);
    // the n = 1 factor of the same class contributes a further 1/N(P00)
    CHECK(v <= first * 1.2);
}

TEST_CASE("log Z stable under doubling the census") {
    ContextOptions o;
    o.census_cutoff = 1e4;
    const auto a = build_context(modular_group(), o);
    o.census_cutoff = 2e4;
    const auto b = build_context(modular_group(), o);
    for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 5.0), cplx(4.0, -2.0)}) {
        const auto va = selberg_log_z(a, s), vb = selberg_log_z(b, s);
        CHECK(std::abs(va.value - vb.value) < 1e-8);
        CHECK(std::abs(va.value - vb.value) <= va.error + 1e-15);
    }
    // near the abscissa the truncation error is too large for the default tolerance
    CHECK_THROWS_AS(selberg_log_z(a, 1.2), Error);
}

TEST_CASE("Z'/Z is the derivative of log Z") {
    const auto& ctx = modular_ctx();
    for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 7.0)}) {
        const auto d = cauchy_derivative([&](cplx w) { return selberg_log_z(ctx, w).value; }, s, 1, 0.25);
        CHECK(std::abs(d.value - d_m(ctx, s).value) < 1e-7);
    }
}

TEST_CASE("Z'/Z leading behaviour") {
    const auto& ctx = modular_ctx();
    const auto& p00 = ctx.census.front();
    const double target = ctx.inv.m0 * mangoldt(p00);
    double prev = 1e9;
    for (double sigma : {10.0, 15.0, 20.0}) {
        const double dev = std::abs(d_m(ctx, sigma).value.real() * std::pow(p00.norm, sigma) - target);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-4 * target);
}

TEST_CASE("single-class toy census") {
    ZetaContext ctx;
    ctx.group = modular_group();
    ctx.has_census = true;
    ctx.census_cutoff = GeneralDirichletSeries::kExact;
    GeodesicClass c;
    c.norm = 4.0;
    c.primitive_norm = 2.0;
    c.power = 2;
    c.primitive = false;
    c.length = std::log(4.0);
    ctx.census = {c};
    attach_series(ctx);
    CHECK(d_m(ctx, 1.0).value.real() == doctest::Approx(std::log(2.0) * (4.0 / 3.0) / 4.0).epsilon(1e-15));
}

TEST_CASE("psi counts geodesics") {
    ContextOptions o;
    o.census_cutoff = 1e6;
    const auto ctx = build_context(modular_group(), o);
    CHECK(psi_m(ctx, 6.8) == 0.0);
    CHECK(psi_m(ctx, 6.86) > 0.0);
    double prev = 0.0;
    for (double x = 5; x <= 2e4; x *= 1.07) {
        const double v = psi_m(ctx, x);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(std::abs(psi_m(ctx, 1e5) / 1e5 - 1) < 0.2);
    double err = 1e9;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
        const double e = std::abs(psi_m(ctx, x) / x - 1);
        CHECK(e < err);
        err = e;
    }
    CHECK_THROWS_AS(psi_m(ctx, 2e6), Error);
}

TEST_CASE("eta'/eta symmetry") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-1.5, 2.5), im(-30.0, 30.0);
    std::vector<ZetaContext> ctxs;
    ctxs.push_back(modular_ctx());
    ContextOptions o;
    o.census_cutoff = 1e3;
    for (const char* id : {"gamma0:6", "gamma0plus:5", "gamma0plus:6", "compact:2:2,3,7"}) {
        GroupDescriptor g = parse_group(id);
        if (g.kind == GroupKind::AbstractCompact) g.systole_length = 1.0;
        ctxs.push_back(build_context(g, o));
    }
    for (const auto& ctx : ctxs) {
        CAPTURE(ctx.group.id);
        const cplx s(0.3, 2.0);
        CHECK(std::abs(eta_logderiv(ctx, s) - eta_logderiv(ctx, 1.0 - s)) < 1e-9);
        for (int i = 0; i < 10; ++i) {
            const cplx z(re(rng), im(rng));
            const cplx a = eta_logderiv(ctx, z), b = eta_logderiv(ctx, 1.0 - z);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(a)));
            CHECK(std::abs(eta_logderiv(ctx, std::conj(z)) - std::conj(a)) < 1e-9 * std::max(1.0, std::abs(a)));
        }
        CHECK(is_finite(eta_logderiv(ctx, 0.5)));
    }
}

TEST_CASE("compact eta'/eta has no parabolic part") {
    const auto ctx = build_context(compact_surface(2, {}, 1.0));
    for (cplx s : {cplx(0.3, 2.0), cplx(1.7, -4.0)}) {
        const cplx u = s - 0.5;
        CHECK(std::abs(eta_logderiv(ctx, s) - 4 * kPi * u * std::tan(kPi * u)) < 1e-12 * std::abs(eta_logderiv(ctx, s)));
    }
    CHECK_THROWS_AS(selberg_log_z(ctx, 3.0), Error);
}

TEST_CASE("f_M") {
    const auto& ctx = modular_ctx();
    CHECK(std::abs(f_m(ctx, 0.5)) == 0.0);
    const cplx s(0.2, 1.0);
    CHECK(std::abs(f_m(ctx, s) - f_m(ctx, 1.0 - s)) < 1e-10);
    CHECK(std::abs(f_m(ctx, {0.5, 50.0})) == doctest::Approx(kPi / 3 * 50).epsilon(0.01));
    const auto d = cauchy_derivative([&](cplx w) { return f_m(ctx, w); }, {0.3, 2.0}, 1, 0.1);
    CHECK(std::abs(d.value / f_m(ctx, {0.3, 2.0}) - f_logderiv(ctx, {0.3, 2.0})) < 1e-9);
    CHECK_THROWS_AS(f_m(ctx, 1.0), Error);
}

TEST_CASE("Z~_0 and Z~_1") {
    const auto& ctx = modular_ctx();
    CHECK(std::abs(z_tilde(ctx, 0, 3.0).value - std::exp(selberg_log_z(ctx, 3.0).value)) < 1e-15);
    const auto loose = with_tail_tol(1e-3);
    double prev = 1e9;
    for (double t : {40.0, 80.0, 160.0}) {
        const double dev = std::abs(z_tilde(loose, 1, {1.5, t}).value - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 0.1);
    CHECK_THROWS_AS(z_tilde(ctx, 1, {0.5, 3.0}), Error);
}

TEST_CASE("second derivative through the Z~ ladder") {
    // (ZH)''/(ZH) from f^2 Z~_1 Z~_2 at 1 - s against Cauchy differentiation of eta K^-1 Z(1 - s)
    const auto& ctx = modular_ctx();
    const auto& sd = *ctx.scat;
    const cplx s0(-1.3, 5.0);
    auto log_k = [&](cplx s) {
        return double(sd.n1) * (log_gamma(s - 0.5).value - log_gamma(s).value) + sd.c1 * s + sd.c2;
    };
    auto rel_g = [&](cplx s) {
        const cplx eta = line_integral([&](cplx u) { return eta_logderiv(ctx, u); }, s0, s).value;
        return std::exp(eta - (log_k(s) - log_k(s0)) + selberg_log_z(ctx, 1.0 - s).value -
                        selberg_log_z(ctx, 1.0 - s0).value);
    };
    const auto d2 = cauchy_derivative(rel_g, s0, 2, 0.2);
    const cplx ladder = std::pow(f_m(ctx, s0), 2) * z_tilde(ctx, 1, 1.0 - s0).value * z_tilde(ctx, 2, 1.0 - s0).value;
    CHECK(std::abs(ladder - d2.value) < 1e-5 * std::abs(d2.value));

    const auto d1 = cauchy_derivative(rel_g, s0, 1, 0.2);
    const cplx first = f_m(ctx, s0) * z_tilde(ctx, 1, 1.0 - s0).value;
    CHECK(std::abs(first - d1.value) < 1e-6 * std::abs(d1.value));
}

TEST_CASE("(ZH)^(k) against Cauchy differentiation") {
    const auto& ctx = modular_ctx();
    auto zh = [&](cplx w) { return zh_and_derivatives(ctx, 0, w).value; };
    CHECK(std::abs(zh_and_derivatives(ctx, 0, 20.0).value - 1.0) < 1e-10);
    const auto c1 = cauchy_derivative(zh, 6.0, 1, 0.25);
    const cplx v1 = zh_and_derivatives(ctx, 1, 6.0).value;
    CHECK(std::abs(c1.value - v1) < 1e-8 * std::abs(v1));
    for (int k = 1; k <= 3; ++k) {
        const auto c = cauchy_derivative(zh, 8.0, k, 0.25);
        const cplx v = zh_and_derivatives(ctx, k, {8.0, 0.0}).value;
        CHECK(std::abs(c.value - v) < 1e-6 * std::abs(v));
    }
}

TEST_CASE("X_{M,k} tends to one") {
    const auto& ctx = modular_ctx();
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        const double d15 = std::abs(x_mk(ctx, k, 15.0).value - 1.0);
        const double d20 = std::abs(x_mk(ctx, k, 20.0).value - 1.0);
        const double d25 = std::abs(x_mk(ctx, k, 25.0).value - 1.0);
        CHECK(d20 < 0.01);
        CHECK(d25 < d20);
        CHECK(d20 < d15);
    }
}

TEST_CASE("non-vanishing probe") {
    const auto& ctx = modular_ctx();
    const double vol = kPi / 3;
    const double r50 = nonvanishing_probe(ctx, -1.0, 50.0);
    CHECK(r50 > 0);
    CHECK(std::abs(r50 / 50 / vol - 1) < 0.2);
    CHECK(nonvanishing_probe(ctx, -1.0, -50.0) == doctest::Approx(r50).epsilon(1e-12));
    double prev = 1e9;
    for (double t : {50.0, 100.0, 200.0}) {
        const double dev = std::abs(nonvanishing_probe(ctx, -1.0, t) / t / vol - 1);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK_THROWS_AS(nonvanishing_probe(ctx, 0.2, 10.0), Error);
}

TEST_CASE("Schwarz reflection of the evaluators") {
    const auto& ctx = modular_ctx();
    for (cplx s : {cplx(3.0, 4.0), cplx(2.5, -9.0), cplx(6.0, 1.5)}) {
        const cplx z = std::conj(s);
        CHECK(std::abs(selberg_log_z(ctx, z).value - std::conj(selberg_log_z(ctx, s).value)) < 1e-14);
        CHECK(std::abs(d_m(ctx, z).value - std::conj(d_m(ctx, s).value)) < 1e-14);
        CHECK(std::abs(z_tilde(ctx, 1, z).value - std::conj(z_tilde(ctx, 1, s).value)) < 1e-12);
    }
    for (cplx s : {cplx(6.0, 4.0), cplx(9.0, -2.0)})
        CHECK(std::abs(zh_and_derivatives(ctx, 2, std::conj(s)).value - std::conj(zh_and_derivatives(ctx, 2, s).value)) <
              1e-15);
}

TEST_CASE("gamma0 context") {
    ContextOptions o;
    o.census_cutoff = 1e4;
    const auto ctx = build_context(gamma0(6), o);
    CHECK(ctx.inv.A == 4.0);
    CHECK(std::abs(x_mk(ctx, 1, 30.0).value - 1.0) < 0.01);
    const auto c = cauchy_derivative([&](cplx w) { return zh_and_derivatives(ctx, 0, w).value; }, 8.0, 2, 0.25);
    const cplx v = zh_and_derivatives(ctx, 2, 8.0).value;
    CHECK(std::abs(c.value - v) < 1e-6 * std::abs(v));
}
