#pragma once

#include <complex>
#include <cstddef>

namespace szl::kernels {

// sum_k c_k exp(-s L_k), together with sum_k |c_k| exp(-Re(s) L_k)
struct SumResult {
    std::complex<double> sum;
    double abs_sum = 0.0;
};

using DirichletFn = SumResult (*)(const double* log_q, const double* c_re, const double* c_im,
                                  std::size_t n, std::complex<double> s);

SumResult dirichlet_sum_scalar(const double* log_q, const double* c_re, const double* c_im,
                               std::size_t n, std::complex<double> s);

// nullptr when the build or the CPU lacks AVX2+FMA
DirichletFn dirichlet_sum_avx2_fn();

enum class Isa { Scalar, Avx2 };

// runtime-selected implementation; SZL_FORCE_SCALAR=1 pins the reference path
SumResult dirichlet_sum(const double* log_q, const double* c_re, const double* c_im, std::size_t n,
                        std::complex<double> s);
Isa active_isa();
const char* isa_name(Isa isa);

}  // namespace szl::kernels
