#pragma once

#include <limits>
#include <vector>

#include "szl/numerics.hpp"

namespace szl {

struct DirichletTerm {
    double q = 1.0;
    cplx c;
};

// sum_i c_i q_i^{-s}; terms with q > cutoff are not represented. An infinite cutoff marks an
// exact finite series (no tail).
class GeneralDirichletSeries {
public:
    static constexpr double kMergeTol = 1e-9;
    static constexpr double kExact = std::numeric_limits<double>::infinity();

    GeneralDirichletSeries() = default;
    explicit GeneralDirichletSeries(std::vector<DirichletTerm> terms, double cutoff = kExact);

    std::size_t size() const { return q_.size(); }
    bool empty() const { return q_.empty(); }
    double cutoff() const { return cutoff_; }
    bool exact() const { return cutoff_ == kExact; }
    bool leading_unit() const;

    double q(std::size_t i) const { return q_[i]; }
    cplx coeff(std::size_t i) const { return {re_[i], im_[i]}; }
    const std::vector<double>& log_q() const { return log_q_; }
    const std::vector<double>& re() const { return re_; }
    const std::vector<double>& im() const { return im_; }
    std::vector<DirichletTerm> terms() const;

    // coefficient at frequency q (0 if absent), matched within the merge tolerance
    cplx coeff_at(double q) const;
    long find(double q) const;

private:
    std::vector<double> q_, log_q_, re_, im_;
    double cutoff_ = kExact;
};

struct SeriesValue {
    cplx value;
    double tail = 0.0;      // estimated |sum over q > cutoff|
    double abs_sum = 0.0;   // sum |c| q^{-Re s} over retained terms
};

// value with tail estimate; no tolerance check
SeriesValue evaluate_raw(const GeneralDirichletSeries& d, cplx s);
// throws DivergentTail when the tail exceeds st.tail_tol * (1 + |value|)
SeriesValue evaluate(const GeneralDirichletSeries& d, cplx s, const EvalSettings& st = {});

// frequencies multiply; result complete up to min(q_max, cutoff1 * min q2, cutoff2 * min q1)
GeneralDirichletSeries multiply(const GeneralDirichletSeries& a, const GeneralDirichletSeries& b,
                                double q_max);
GeneralDirichletSeries add(const GeneralDirichletSeries& a, const GeneralDirichletSeries& b);
GeneralDirichletSeries scale(const GeneralDirichletSeries& a, cplx factor);
GeneralDirichletSeries differentiate(const GeneralDirichletSeries& d);
// series B with H'/H = B, for H = 1 + sum_{q > 1} a_q q^{-s}
GeneralDirichletSeries log_derivative(const GeneralDirichletSeries& h, double q_max);
// series R with H R = 1
GeneralDirichletSeries reciprocal(const GeneralDirichletSeries& h, double q_max);
// D_1 given; D_{k+1} = D_k D_1 + D_k'
GeneralDirichletSeries dk_series(const GeneralDirichletSeries& d1, int k, double q_max);

// smallest sigma on a 0.25 grid in [lo, hi] where evaluation at sigma with this cutoff and with
// half the cutoff agree to tol relative; hi + 0.25 when none does
double empirical_abscissa(const GeneralDirichletSeries& d, double lo, double hi, double tol = 1e-8);

// truncation helper
GeneralDirichletSeries truncate(const GeneralDirichletSeries& d, double q_max);

}  // namespace szl
