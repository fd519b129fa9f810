#include "szl/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace szl {

namespace {

constexpr double kPi = std::numbers::pi;

struct Egcd {
    long long g, x, y;
};

Egcd egcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    const Egcd r = egcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

// is there (a', b) with e a' d' - m b = 1 ?
bool completes(long long e, long long dp, long long m) {
    const long long u = e * dp;
    const Egcd r = egcd(u, m);
    if (r.g != 1 && r.g != -1) return false;
    const long long ap = r.x * r.g, b = -r.y * r.g;
    return (i128)u * ap - (i128)m * b == 1;
}

bool pole_like(cplx v) { return !is_finite(v); }

}  // namespace

std::vector<ScatteringTerm> scattering_series(const GroupDescriptor& g, double c_max) {
    if (g.kind != GroupKind::Modular && g.kind != GroupKind::Gamma0Plus && !(g.kind == GroupKind::Gamma0 && g.level == 1))
        throw Error(Errc::UnsupportedGroup, "S(c) series is built for single-cusp matrix groups; use the closed form");
    const long long f = g.level;
    std::vector<ScatteringTerm> out;
    for (long long e : g.kind == GroupKind::Gamma0Plus ? divisors(f) : std::vector<long long>{1}) {
        const double se = std::sqrt(double(e));
        for (long long cp = 1; double(f * cp) / se <= c_max * (1 + 1e-12); ++cp) {
            // lower-right entries d = e d', residues d' mod (f/e) c'
            const long long m = (f / e) * cp;
            long long count = 0;
            for (long long dp = 0; dp < m; ++dp)
                if (completes(e, dp, m)) ++count;
            if (count == 0) continue;
            ScatteringTerm t;
            t.c_sq = Rational((i128)f * f * cp * cp, e);
            t.c = std::sqrt(t.c_sq.to_double());
            t.S = count;
            t.e = e;
            t.c_prime = cp;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const ScatteringTerm& a, const ScatteringTerm& b) { return a.c_sq < b.c_sq; });
    return out;
}

namespace {

ScatteringData finish(ScatteringData sd, const DecomposeOptions& opt) {
    if (sd.ladder.size() < 2) throw Error(Errc::InsufficientTerms, "need at least g1 and g2");
    const LadderEntry& first = sd.ladder[0];
    if (first.d == 0.0) throw Error(Errc::InsufficientTerms, "d(1) vanished");
    sd.d1_sign = first.d > 0 ? 1 : -1;
    sd.c1 = -2.0 * std::log(first.g);
    sd.c2 = std::log(std::abs(first.d));
    sd.g_ratio_sq = sd.ladder[1].g_sq / first.g_sq;
    if (!(sd.H.leading_unit())) throw Error(Errc::InsufficientTerms, "H does not start with 1");
    for (std::size_t i = 1; i < sd.H.size(); ++i)
        if (!(sd.H.q(i) > 1.0)) throw Error(Errc::InsufficientTerms, "H frequency not above 1");
    sd.b_series = log_derivative(sd.H, opt.b_qmax);
    sd.b_at_ratio = sd.b_series.coeff_at(sd.g_ratio_sq.to_double()).real();
    return sd;
}

ScatteringData decompose_gamma0(const GroupDescriptor& g, const DecomposeOptions& opt) {
    const long long N = g.level;
    const auto ps = prime_factors(N);
    const int r = int(ps.size());
    const int n1 = 1 << r;
    const int half = n1 / 2;
    const double qmax = opt.h_qmax;
    const long long mmax = (long long)std::floor(std::sqrt(qmax) + 1e-9);

    std::vector<DirichletTerm> tot;
    for (long long m = 1; m <= mmax; ++m) tot.push_back({double(m * m), double(euler_phi(m))});
    const GeneralDirichletSeries totient(tot, qmax);
    GeneralDirichletSeries h({{1.0, 1.0}});
    for (int i = 0; i < n1; ++i) h = multiply(h, totient, qmax);
    for (long long p : ps) {
        // (1 - p^2 x) / (1 - x) with x = p^{-2s}
        std::vector<DirichletTerm> loc = {{1.0, 1.0}};
        for (double q = double(p * p); q <= qmax; q *= double(p * p)) loc.push_back({q, 1.0 - double(p * p)});
        const GeneralDirichletSeries local(loc, qmax);
        for (int i = 0; i < half; ++i) h = multiply(h, local, qmax);
    }
    const int sign = (r * half) % 2 == 0 ? 1 : -1;

    ScatteringData sd;
    sd.n1 = n1;
    sd.from_closed_form = true;
    sd.H = h;
    i128 nn = 1;
    for (int i = 0; i < n1; ++i) nn *= N;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const long long m = std::llround(std::sqrt(h.q(i)));
        LadderEntry e;
        e.g_sq = Rational(nn * m * m, 1);
        e.g = std::sqrt(e.g_sq.to_double());
        e.d = sign * h.coeff(i).real();
        sd.ladder.push_back(e);
    }
    return finish(sd, opt);
}

}  // namespace

ScatteringData decompose(const GroupDescriptor& g, const DecomposeOptions& opt) {
    if (g.kind == GroupKind::AbstractCompact) throw Error(Errc::UnsupportedGroup, "compact surfaces have no scattering");
    if (g.kind == GroupKind::Gamma0 && g.level > 1) return decompose_gamma0(g, opt);

    const double g1_guess = g.kind == GroupKind::Gamma0Plus ? std::sqrt(double(g.level)) : 1.0;
    const double c_max = opt.c_max > 0 ? opt.c_max : 1000.0 * g1_guess;
    const auto terms = scattering_series(g, c_max);
    if (terms.size() < 2) throw Error(Errc::InsufficientTerms, "c_max too small to resolve g1 and g2");
    ScatteringData sd;
    sd.n1 = 1;
    std::vector<DirichletTerm> h;
    const Rational g1sq = terms[0].c_sq;
    const double d1 = double(terms[0].S);
    double qmax = std::min(opt.h_qmax, (c_max * c_max) / g1sq.to_double());
    for (const auto& t : terms) {
        sd.ladder.push_back({t.c_sq, t.c, double(t.S)});
        const double q = (t.c_sq / g1sq).to_double();
        if (q <= qmax * (1 + 1e-12)) h.push_back({q, double(t.S) / d1});
    }
    sd.H = GeneralDirichletSeries(h, qmax);
    return finish(sd, opt);
}

cplx phi_closed_form(const GroupDescriptor& g, cplx s, const EvalSettings& st) {
    cplx base;
    try {
        base = xi_ratio(2.0 * s - 1.0, 2.0 * s, st);
    } catch (const Error&) {
        throw Error(Errc::PoleHit, "phi: pole of the zeta ratio");
    }
    cplx v;
    switch (g.kind) {
        case GroupKind::Modular: v = base; break;
        case GroupKind::Gamma0: {
            const auto ps = prime_factors(g.level);
            const int n1 = 1 << ps.size();
            v = std::pow(base, n1);
            for (long long p : ps) {
                const double lp = std::log(double(p));
                const cplx num = 1.0 - std::exp((2.0 - 2.0 * s) * lp);
                const cplx den = 1.0 - std::exp(2.0 * s * lp);
                v *= std::pow(num / den, n1 / 2);
            }
            break;
        }
        case GroupKind::Gamma0Plus: {
            if (g.level != 5) throw Error(Errc::UnsupportedGroup, "no closed form for " + g.id);
            const cplx x = std::exp(s * std::log(5.0));
            v = base * (x + 5.0) / (x * (x + 1.0));
            break;
        }
        case GroupKind::AbstractCompact: throw Error(Errc::UnsupportedGroup, "compact surfaces have no scattering");
    }
    if (pole_like(v)) throw Error(Errc::PoleHit, "phi: pole");
    return v;
}

cplx k_factor(const ScatteringData& sd, cplx s, const EvalSettings& st) {
    try {
        const cplx lg = double(sd.n1) * (log_gamma(s - 0.5, st).value - log_gamma(s, st).value);
        const cplx v = double(sd.d1_sign) * std::exp(0.5 * sd.n1 * std::log(kPi) + lg + sd.c1 * s + sd.c2);
        if (pole_like(v)) throw Error(Errc::PoleHit, "K: overflow");
        return v;
    } catch (const Error& e) {
        if (e.code() == Errc::PoleAtNonPositiveInteger) throw Error(Errc::PoleHit, "K: pole of Gamma(s - 1/2)");
        throw;
    }
}

cplx k_logderiv(const ScatteringData& sd, cplx s, const EvalSettings& st) {
    try {
        return double(sd.n1) * (digamma(s - 0.5, st).value - digamma(s, st).value) + sd.c1;
    } catch (const Error& e) {
        if (e.code() == Errc::PoleAtNonPositiveInteger) throw Error(Errc::PoleHit, "K'/K: pole");
        throw;
    }
}

cplx phi_series(const ScatteringData& sd, cplx s, const EvalSettings& st) {
    return k_factor(sd, s, st) * evaluate(sd.H, s, st).value;
}

double b2_constant(const ScatteringData& sd) {
    return std::pow(kPi, 0.5 * sd.n1) / sd.g1() * sd.d1();
}

}  // namespace szl
