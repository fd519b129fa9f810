#include "szl/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace szl::kernels {

SumResult dirichlet_sum_scalar(const double* log_q, const double* c_re, const double* c_im,
                               std::size_t n, std::complex<double> s) {
    const double sigma = s.real();
    const double t = s.imag();
    double sr = 0.0, si = 0.0, sa = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double m = std::exp(-sigma * log_q[k]);
        const double y = t * log_q[k];
        const double cs = std::cos(y);
        const double sn = std::sin(y);
        sr += m * (c_re[k] * cs + c_im[k] * sn);
        si += m * (c_im[k] * cs - c_re[k] * sn);
        sa += m * std::sqrt(c_re[k] * c_re[k] + c_im[k] * c_im[k]);
    }
    return {{sr, si}, sa};
}

namespace {

DirichletFn select() {
    const char* env = std::getenv("SZL_FORCE_SCALAR");
    if (env != nullptr && std::strcmp(env, "") != 0 && std::strcmp(env, "0") != 0)
        return &dirichlet_sum_scalar;
    if (DirichletFn f = dirichlet_sum_avx2_fn()) return f;
    return &dirichlet_sum_scalar;
}

DirichletFn active() {
    static const DirichletFn fn = select();
    return fn;
}

}  // namespace

SumResult dirichlet_sum(const double* log_q, const double* c_re, const double* c_im, std::size_t n,
                        std::complex<double> s) {
    return active()(log_q, c_re, c_im, n, s);
}

Isa active_isa() { return active() == &dirichlet_sum_scalar ? Isa::Scalar : Isa::Avx2; }

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace szl::kernels
