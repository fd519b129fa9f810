#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Lanczos g = 7, n = 9; valid for Re s >= 1/2, result equals log Gamma up to 2 pi i k
inline cplx lanczos_log_gamma(cplx s) {
    static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double g = 7.0;
    const cplx z = s - 1.0;
    cplx a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + double(i));
    const cplx t = z + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// Borwein's accelerated alternating series, Re s > 0
inline cplx borwein_zeta(cplx s, int n = 120) {
    std::vector<double> d(n + 1);
    double term = 1.0 / n, acc = term;  // i = 0 term of sum (n+i-1)! 4^i / ((n-i)! (2i)!) scaled by 1/n!
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= double(n + i - 1) * 4.0 * double(n - i + 1) / (double(2 * i) * double(2 * i - 1));
        acc += term;
        d[i] = n * acc;
    }
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = (k % 2 == 0 ? 1.0 : -1.0) * (d[k] - d[n]);
        sum += w * std::exp(-s * std::log(double(k + 1)));
    }
    return -sum / (d[n] * (1.0 - std::pow(cplx(2.0), 1.0 - s)));
}

}  // namespace oracle
