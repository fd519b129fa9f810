#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "szl/error.hpp"

namespace szl {

using cplx = std::complex<double>;

struct EvalSettings {
    int zeta_em_terms = 50;
    int zeta_bernoulli_order = 12;
    int quad_panels = 8;
    double cauchy_radius = 0.25;
    double target_rel_tol = 1e-10;
    // tolerated truncation tail of series and census sums, relative to 1 + |value|
    double tail_tol = 1e-6;

    void validate() const;
};

// value with an estimate of its absolute error
struct Estimate {
    cplx value;
    double error = 0.0;
};

using Sampler = std::function<cplx(cplx)>;

Estimate log_gamma(cplx s, const EvalSettings& st = {});
Estimate digamma(cplx s, const EvalSettings& st = {});
Estimate riemann_zeta(cplx s, const EvalSettings& st = {});

// completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), returned as exp(log_factor) * zeta_part
// with the functional equation applied so that the zeta part is evaluated at Re >= 1/2
struct XiParts {
    cplx log_factor;
    cplx zeta_part;
};
XiParts completed_zeta(cplx s, const EvalSettings& st = {});
cplx xi_ratio(cplx a, cplx b, const EvalSettings& st = {});

// theta(t) of the Hardy function; Z(t) = exp(i theta(t)) zeta(1/2 + i t) is real
double riemann_siegel_theta(double t);
double hardy_z(double t, const EvalSettings& st = {});

Estimate cauchy_derivative(const Sampler& f, cplx s, int k, double radius,
                           const EvalSettings& st = {});
Estimate line_integral(const Sampler& f, cplx a, cplx b, const EvalSettings& st = {});

// nodes and weights on [-1, 1]
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

bool is_finite(cplx z);

}  // namespace szl
