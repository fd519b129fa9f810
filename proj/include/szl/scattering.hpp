#pragma once

#include <vector>

#include "szl/dseries.hpp"
#include "szl/groups.hpp"

namespace szl {

// one admissible lower-left entry c = (f c') / sqrt(e) and its residue count S(c)
struct ScatteringTerm {
    Rational c_sq;
    double c = 0.0;
    long long S = 0;
    long long e = 1;
    long long c_prime = 0;
};

// S(c) for c <= c_max by checking, for each lower-right residue, that the element constraints
// can be completed (extended gcd). Modular and gamma0plus groups only.
std::vector<ScatteringTerm> scattering_series(const GroupDescriptor& g, double c_max);

struct LadderEntry {
    Rational g_sq;  // g_n^2
    double g = 0.0;
    double d = 0.0;
};

struct ScatteringData {
    int n1 = 0;
    std::vector<LadderEntry> ladder;
    double c1 = 0.0;
    double c2 = 0.0;  // log |d(1)|
    int d1_sign = 1;
    GeneralDirichletSeries H;         // 1 + sum a(n) r_n^{-2s}, frequencies r_n^2
    GeneralDirichletSeries b_series;  // H'/H
    Rational g_ratio_sq;
    double b_at_ratio = 0.0;  // b((g2/g1)^2)
    bool from_closed_form = false;

    double g1() const { return ladder.at(0).g; }
    double d1() const { return ladder.at(0).d; }
};

struct DecomposeOptions {
    double c_max = 0.0;    // defaults to 1000 g_1
    double h_qmax = 1e6;   // H truncation
    double b_qmax = 1e4;   // H'/H truncation
};

// Gamma0(N) from the closed-form determinant, modular and gamma0plus from S(c)
ScatteringData decompose(const GroupDescriptor& g, const DecomposeOptions& opt = {});

// phi_M(s) from the closed forms (Modular, Gamma0, Gamma0Plus(5))
cplx phi_closed_form(const GroupDescriptor& g, cplx s, const EvalSettings& st = {});
// K(s) H(s) with H evaluated as a truncated series
cplx phi_series(const ScatteringData& sd, cplx s, const EvalSettings& st = {});

cplx k_factor(const ScatteringData& sd, cplx s, const EvalSettings& st = {});
cplx k_logderiv(const ScatteringData& sd, cplx s, const EvalSettings& st = {});
double b2_constant(const ScatteringData& sd);

}  // namespace szl
