#include "szl/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <cmath>

#define SZL_AVX2 __attribute__((target("avx2,fma")))

namespace szl::kernels {
namespace {

// 1.5 * 2^52: adding it to an integral double exposes the integer in the low mantissa bits
constexpr double kMagic = 6755399441055744.0;

SZL_AVX2 inline __m256d exp_neg_pd(__m256d x) {
    const __m256d lo = _mm256_set1_pd(-708.0);
    const __m256d hi = _mm256_set1_pd(709.0);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const __m256d over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    x = _mm256_max_pd(_mm256_min_pd(x, hi), lo);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93147180369123816490e-01), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.90821492927058770002e-10), r);

    // Taylor to degree 13 on |r| <= ln2/2
    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    const __m256d biased = _mm256_add_pd(_mm256_add_pd(n, _mm256_set1_pd(1023.0)),
                                         _mm256_set1_pd(kMagic));
    __m256i bits = _mm256_sub_epi64(_mm256_castpd_si256(biased),
                                    _mm256_castpd_si256(_mm256_set1_pd(kMagic)));
    bits = _mm256_slli_epi64(bits, 52);
    __m256d res = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
    res = _mm256_andnot_pd(under, res);
    res = _mm256_blendv_pd(res, _mm256_set1_pd(HUGE_VAL), over);
    return res;
}

SZL_AVX2 inline void sincos_pd(__m256d y, __m256d* s_out, __m256d* c_out) {
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(y, _mm256_set1_pd(6.36619772367581382433e-01)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(1.57079632673412561417e+00), y);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(6.07710050630396597660e-11), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(2.02226624871116645580e-21), r);

    const __m256d z = _mm256_mul_pd(r, r);
    __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
    const __m256d sn = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

    __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
    const __m256d cs = _mm256_fmadd_pd(_mm256_mul_pd(pc, z), z,
                                       _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

    const __m256i q = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(k, _mm256_set1_pd(kMagic))),
                                       _mm256_castpd_si256(_mm256_set1_pd(kMagic)));
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
    const __m256d neg_s = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, two), two));
    const __m256d neg_c = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), two));
    const __m256d sign = _mm256_set1_pd(-0.0);

    __m256d s = _mm256_blendv_pd(sn, cs, swap);
    __m256d c = _mm256_blendv_pd(cs, sn, swap);
    s = _mm256_xor_pd(s, _mm256_and_pd(neg_s, sign));
    c = _mm256_xor_pd(c, _mm256_and_pd(neg_c, sign));
    *s_out = s;
    *c_out = c;
}

SZL_AVX2 double hsum(__m256d v) {
    alignas(32) double a[4];
    _mm256_store_pd(a, v);
    return (a[0] + a[1]) + (a[2] + a[3]);
}

SZL_AVX2 SumResult dirichlet_sum_avx2(const double* log_q, const double* c_re, const double* c_im,
                                      std::size_t n, std::complex<double> s) {
    const __m256d vs = _mm256_set1_pd(-s.real());
    const __m256d vt = _mm256_set1_pd(s.imag());
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    __m256d acc_a = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d L = _mm256_loadu_pd(log_q + k);
        const __m256d cr = _mm256_loadu_pd(c_re + k);
        const __m256d ci = _mm256_loadu_pd(c_im + k);
        const __m256d m = exp_neg_pd(_mm256_mul_pd(vs, L));
        __m256d sn, cs;
        sincos_pd(_mm256_mul_pd(vt, L), &sn, &cs);
        const __m256d re = _mm256_fmadd_pd(cr, cs, _mm256_mul_pd(ci, sn));
        const __m256d im = _mm256_fmsub_pd(ci, cs, _mm256_mul_pd(cr, sn));
        acc_r = _mm256_fmadd_pd(m, re, acc_r);
        acc_i = _mm256_fmadd_pd(m, im, acc_i);
        const __m256d mod = _mm256_sqrt_pd(_mm256_fmadd_pd(cr, cr, _mm256_mul_pd(ci, ci)));
        acc_a = _mm256_fmadd_pd(m, mod, acc_a);
    }
    SumResult tail = dirichlet_sum_scalar(log_q + k, c_re + k, c_im + k, n - k, s);
    return {{hsum(acc_r) + tail.sum.real(), hsum(acc_i) + tail.sum.imag()},
            hsum(acc_a) + tail.abs_sum};
}

}  // namespace

DirichletFn dirichlet_sum_avx2_fn() {
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &dirichlet_sum_avx2;
    return nullptr;
}

}  // namespace szl::kernels

#else

namespace szl::kernels {
DirichletFn dirichlet_sum_avx2_fn() { return nullptr; }
}  // namespace szl::kernels

#endif
