#include "szl/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "szl/kernels.hpp"

namespace szl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2 .. B_30
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_finite(cplx s, const char* who) {
    if (!is_finite(s)) throw Error(Errc::InvalidArgument, std::string(who) + ": non-finite argument");
}

bool at_non_positive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

// log sin z, any branch (callers exponentiate); stable for large |Im z|
cplx log_sin(cplx z) {
    const cplx i(0.0, 1.0);
    if (std::abs(z.imag()) < 30.0) return std::log(std::sin(z));
    if (z.imag() > 0.0) return std::log(cplx(0.0, 0.5)) - i * z + std::log(1.0 - std::exp(2.0 * i * z));
    return std::log(cplx(0.0, -0.5)) + i * z + std::log(1.0 - std::exp(-2.0 * i * z));
}

struct LogTable {
    std::vector<double> log_n;  // log_n[j] = log(j + 1)
    std::vector<double> ones;
    std::vector<double> zeros;
    explicit LogTable(std::size_t n) : log_n(n), ones(n, 1.0), zeros(n, 0.0) {
        for (std::size_t j = 0; j < n; ++j) log_n[j] = std::log(static_cast<double>(j + 1));
    }
};

const LogTable& log_table() {
    static const LogTable table(8192);
    return table;
}

// sum_{n=1}^{count} n^{-s}
cplx power_sum(cplx s, std::size_t count, double* abs_sum) {
    const LogTable& tab = log_table();
    if (count <= tab.log_n.size()) {
        auto r = kernels::dirichlet_sum(tab.log_n.data(), tab.ones.data(), tab.zeros.data(), count, s);
        *abs_sum = r.abs_sum;
        return r.sum;
    }
    LogTable local(count);
    auto r = kernels::dirichlet_sum(local.log_n.data(), local.ones.data(), local.zeros.data(), count, s);
    *abs_sum = r.abs_sum;
    return r.sum;
}

Estimate zeta_euler_maclaurin(cplx s, const EvalSettings& st) {
    const int base = std::max(st.zeta_em_terms, 4);
    const int n_terms = std::max(base, static_cast<int>(std::ceil(std::abs(s) * base / 100.0)));
    const int order = std::clamp(st.zeta_bernoulli_order, 1, static_cast<int>(kBernoulli.size()));
    const double N = n_terms;
    double abs_sum = 0.0;
    cplx sum = power_sum(s, static_cast<std::size_t>(n_terms - 1), &abs_sum);

    const cplx n_ms = std::exp(-s * std::log(N));
    sum += N * n_ms / (s - 1.0) + 0.5 * n_ms;

    cplx poch = s;  // s (s+1) ... (s+2k-2)
    double n_pow = 1.0 / N;  // N^{1-2k}
    cplx term = 0.0;
    for (int k = 1; k <= order; ++k) {
        if (k > 1) {
            poch *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
            n_pow /= N * N;
        }
        term = kBernoulli[k - 1] / factorial(2 * k) * poch * n_ms * n_pow;
        sum += term;
    }
    const double err = std::abs(term) + 16.0 * kEps * (abs_sum + std::abs(sum));
    return {sum, err};
}

}  // namespace

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void EvalSettings::validate() const {
    if (zeta_em_terms <= 0 || zeta_bernoulli_order <= 0 || quad_panels <= 0)
        throw Error(Errc::InvalidArgument, "evaluation counts must be positive");
    if (!(cauchy_radius > 0.0)) throw Error(Errc::InvalidArgument, "cauchy_radius must be positive");
    if (!(target_rel_tol > 0.0 && target_rel_tol <= 1e-6))
        throw Error(Errc::InvalidArgument, "target_rel_tol must lie in (0, 1e-6]");
    if (!(tail_tol > 0.0)) throw Error(Errc::InvalidArgument, "tail_tol must be positive");
}

Estimate log_gamma(cplx s, const EvalSettings&) {
    require_finite(s, "log_gamma");
    if (at_non_positive_integer(s))
        throw Error(Errc::PoleAtNonPositiveInteger, "log_gamma at " + std::to_string(s.real()));
    if (s.real() < -1e6) throw Error(Errc::InvalidArgument, "log_gamma: Re s too negative");

    cplx z = s;
    cplx shift = 0.0;
    double shift_mag = 0.0;
    while (z.real() < 10.0) {
        const cplx l = std::log(z);
        shift += l;
        shift_mag += std::abs(l);
        z += 1.0;
    }
    const cplx lz = std::log(z);
    cplx r = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
    const cplx z2 = z * z;
    cplx zp = z;  // z^{2k-1}
    for (int k = 1; k <= 10; ++k) {
        r += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) / zp;
        zp *= z2;
    }
    const double remainder = std::abs(kBernoulli[10]) / (22.0 * 21.0) / std::abs(zp);
    const cplx value = r - shift;
    const double err = remainder + 8.0 * kEps * (std::abs(r) + shift_mag + std::abs(value));
    return {value, err};
}

Estimate digamma(cplx s, const EvalSettings&) {
    require_finite(s, "digamma");
    if (at_non_positive_integer(s))
        throw Error(Errc::PoleAtNonPositiveInteger, "digamma at " + std::to_string(s.real()));
    if (s.real() < -1e6) throw Error(Errc::InvalidArgument, "digamma: Re s too negative");

    cplx z = s;
    cplx shift = 0.0;
    double shift_mag = 0.0;
    while (z.real() < 10.0) {
        const cplx inv = 1.0 / z;
        shift += inv;
        shift_mag += std::abs(inv);
        z += 1.0;
    }
    cplx r = std::log(z) - 0.5 / z;
    const cplx z2 = z * z;
    cplx zp = z2;
    for (int k = 1; k <= 10; ++k) {
        r -= kBernoulli[k - 1] / (2.0 * k) / zp;
        zp *= z2;
    }
    const double remainder = std::abs(kBernoulli[10]) / 22.0 / std::abs(zp);
    const cplx value = r - shift;
    return {value, remainder + 8.0 * kEps * (std::abs(r) + shift_mag + std::abs(value))};
}

Estimate riemann_zeta(cplx s, const EvalSettings& st) {
    require_finite(s, "riemann_zeta");
    if (s == cplx(1.0, 0.0)) throw Error(Errc::PoleAtOne, "riemann_zeta at s = 1");
    if (s.real() >= 0.5 || std::abs(s) < 0.25) return zeta_euler_maclaurin(s, st);

    const cplx w = 1.0 - s;
    const Estimate zw = zeta_euler_maclaurin(w, st);
    const Estimate lg = log_gamma(w, st);
    const cplx lf = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(0.5 * kPi * s) + lg.value;
    const cplx factor = std::exp(lf);
    const cplx value = factor * zw.value;
    const double err = std::abs(factor) * zw.error +
                       std::abs(value) * (lg.error + 16.0 * kEps * (1.0 + std::abs(lf)));
    return {value, err};
}

XiParts completed_zeta(cplx s, const EvalSettings& st) {
    const cplx u = s.real() >= 0.5 ? s : 1.0 - s;
    if (u == cplx(1.0, 0.0)) throw Error(Errc::PoleAtOne, "completed zeta pole");
    const cplx lf = -0.5 * u * std::log(kPi) + log_gamma(0.5 * u, st).value;
    return {lf, riemann_zeta(u, st).value};
}

cplx xi_ratio(cplx a, cplx b, const EvalSettings& st) {
    const XiParts pa = completed_zeta(a, st);
    const XiParts pb = completed_zeta(b, st);
    return std::exp(pa.log_factor - pb.log_factor) * pa.zeta_part / pb.zeta_part;
}

double riemann_siegel_theta(double t) {
    return log_gamma(cplx(0.25, 0.5 * t)).value.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t, const EvalSettings& st) {
    const cplx z = riemann_zeta(cplx(0.5, t), st).value;
    return (std::exp(cplx(0.0, riemann_siegel_theta(t))) * z).real();
}

Estimate cauchy_derivative(const Sampler& f, cplx s, int k, double radius, const EvalSettings& st) {
    if (k < 0) throw Error(Errc::InvalidArgument, "cauchy_derivative: negative order");
    if (!(radius > 0.0)) throw Error(Errc::InvalidArgument, "cauchy_derivative: radius must be positive");
    const double tol = std::max(st.target_rel_tol, 1e-13);
    const double scale = factorial(k) / std::pow(radius, k);

    std::vector<cplx> samples;
    auto point = [&](std::size_t j, std::size_t m) {
        const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
        return cplx(std::cos(th), std::sin(th));
    };
    auto estimate = [&](std::size_t m, double* fmax) {
        cplx acc = 0.0;
        *fmax = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double th = 2.0 * kPi * static_cast<double>(j * static_cast<std::size_t>(k) % m) /
                              static_cast<double>(m);
            acc += samples[j] * cplx(std::cos(th), -std::sin(th));
            *fmax = std::max(*fmax, std::abs(samples[j]));
        }
        return scale * acc / static_cast<double>(m);
    };

    std::size_t m = 64;
    samples.resize(m);
    for (std::size_t j = 0; j < m; ++j) samples[j] = f(s + radius * point(j, m));
    double fmax = 0.0;
    cplx prev = estimate(m, &fmax);
    while (m < 8192) {
        std::vector<cplx> next(2 * m);
        for (std::size_t j = 0; j < m; ++j) {
            next[2 * j] = samples[j];
            next[2 * j + 1] = f(s + radius * point(2 * j + 1, 2 * m));
        }
        samples.swap(next);
        m *= 2;
        const cplx cur = estimate(m, &fmax);
        if (!is_finite(cur)) throw Error(Errc::NonConvergence, "cauchy_derivative: non-finite samples");
        const double diff = std::abs(cur - prev);
        const double floor = 64.0 * kEps * scale * fmax;
        if (diff <= tol * std::abs(cur) + floor) return {cur, diff + floor};
        prev = cur;
    }
    throw Error(Errc::NonConvergence, "cauchy_derivative: refinements disagree");
}

const GaussRule& gauss_legendre(int n) {
    static const std::vector<GaussRule> rules = [] {
        std::vector<GaussRule> out(65);
        for (int order = 1; order <= 64; ++order) {
            GaussRule& g = out[order];
            g.x.resize(order);
            g.w.resize(order);
            for (int i = 0; i < order; ++i) {
                double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
                double dp = 1.0;
                for (int it = 0; it < 100; ++it) {
                    double p0 = 1.0, p1 = x;
                    for (int j = 2; j <= order; ++j) {
                        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                        p0 = p1;
                        p1 = p2;
                    }
                    if (order == 1) p0 = 1.0;
                    dp = order * (x * p1 - p0) / (x * x - 1.0);
                    const double dx = p1 / dp;
                    x -= dx;
                    if (std::abs(dx) < 1e-16) break;
                }
                g.x[i] = x;
                g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
            }
        }
        return out;
    }();
    if (n < 1 || n > 64) throw Error(Errc::InvalidArgument, "gauss_legendre: order out of range");
    return rules[n];
}

Estimate line_integral(const Sampler& f, cplx a, cplx b, const EvalSettings& st) {
    const GaussRule& g = gauss_legendre(10);
    const cplx span = b - a;
    auto panel = [&](double u0, double u1) {
        const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * f(a + (mid + half * g.x[i]) * span);
        return acc * half * span;
    };

    const int panels = std::max(st.quad_panels, 1);
    std::vector<cplx> coarse(panels);
    cplx total = 0.0;
    for (int p = 0; p < panels; ++p) {
        coarse[p] = panel(static_cast<double>(p) / panels, static_cast<double>(p + 1) / panels);
        total += coarse[p];
    }
    const double tol = st.target_rel_tol * (1.0 + std::abs(total));

    double err = 0.0;
    std::function<cplx(double, double, cplx, int)> refine = [&](double u0, double u1, cplx whole,
                                                                int depth) -> cplx {
        const double m = 0.5 * (u0 + u1);
        const cplx left = panel(u0, m), right = panel(m, u1);
        const double diff = std::abs(left + right - whole);
        if (!std::isfinite(diff)) throw Error(Errc::NonConvergence, "line_integral: non-finite integrand");
        if (diff <= tol * (u1 - u0)) {
            err += diff;
            return left + right;
        }
        if (depth > 40) throw Error(Errc::NonConvergence, "line_integral: refinement depth exceeded");
        return refine(u0, m, left, depth + 1) + refine(m, u1, right, depth + 1);
    };

    cplx result = 0.0;
    for (int p = 0; p < panels; ++p)
        result += refine(static_cast<double>(p) / panels, static_cast<double>(p + 1) / panels, coarse[p], 0);
    return {result, err};
}

}  // namespace szl
