#include "szl/dseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "szl/kernels.hpp"

namespace szl {

namespace {

bool same_freq(double a, double b) {
    return std::abs(a - b) <= GeneralDirichletSeries::kMergeTol * std::max(a, b);
}

}  // namespace

GeneralDirichletSeries::GeneralDirichletSeries(std::vector<DirichletTerm> terms, double cutoff)
    : cutoff_(cutoff) {
    if (!(cutoff > 0)) throw Error(Errc::InvalidArgument, "series cutoff must be positive");
    for (const auto& t : terms)
        if (!(t.q > 0) || !std::isfinite(t.q) || !is_finite(t.c))
            throw Error(Errc::InvalidArgument, "series terms need finite q > 0 and finite coefficients");
    std::sort(terms.begin(), terms.end(), [](const DirichletTerm& a, const DirichletTerm& b) { return a.q < b.q; });
    std::size_t i = 0;
    while (i < terms.size()) {
        const double q0 = terms[i].q;
        cplx c = 0.0;
        std::size_t j = i;
        while (j < terms.size() && same_freq(terms[j].q, q0)) c += terms[j++].c;
        i = j;
        if (q0 > cutoff * (1 + kMergeTol) || c == cplx(0.0)) continue;
        q_.push_back(q0);
        log_q_.push_back(std::log(q0));
        re_.push_back(c.real());
        im_.push_back(c.imag());
    }
}

bool GeneralDirichletSeries::leading_unit() const {
    return !q_.empty() && q_[0] == 1.0 && re_[0] == 1.0 && im_[0] == 0.0;
}

std::vector<DirichletTerm> GeneralDirichletSeries::terms() const {
    std::vector<DirichletTerm> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = {q_[i], coeff(i)};
    return out;
}

long GeneralDirichletSeries::find(double q) const {
    auto it = std::lower_bound(q_.begin(), q_.end(), q * (1 - kMergeTol));
    if (it != q_.end() && same_freq(*it, q)) return long(it - q_.begin());
    return -1;
}

cplx GeneralDirichletSeries::coeff_at(double q) const {
    const long i = find(q);
    return i < 0 ? cplx(0.0) : coeff(std::size_t(i));
}

SeriesValue evaluate_raw(const GeneralDirichletSeries& d, cplx s) {
    SeriesValue out;
    if (d.empty()) return out;
    const auto r = kernels::dirichlet_sum(d.log_q().data(), d.re().data(), d.im().data(), d.size(), s);
    out.value = r.sum;
    out.abs_sum = r.abs_sum;
    if (d.exact()) return out;

    // compare the last two decades below the cutoff and extrapolate geometrically
    const double top = d.cutoff();
    const double sigma = s.real();
    double last = 0.0, prev = 0.0;
    for (std::size_t i = d.size(); i-- > 0;) {
        const double q = d.q(i);
        if (q <= top / 100.0) break;
        const double v = std::abs(d.coeff(i)) * std::exp(-sigma * d.log_q()[i]);
        (q > top / 10.0 ? last : prev) += v;
    }
    if (last == 0.0 && prev == 0.0) {
        out.tail = 0.0;
    } else if (prev == 0.0 || last >= prev) {
        out.tail = std::numeric_limits<double>::infinity();
    } else {
        const double rho = last / prev;
        out.tail = last * rho / (1.0 - rho);
    }
    return out;
}

SeriesValue evaluate(const GeneralDirichletSeries& d, cplx s, const EvalSettings& st) {
    SeriesValue v = evaluate_raw(d, s);
    if (!(v.tail <= st.tail_tol * (1.0 + std::abs(v.value))))
        throw Error(Errc::DivergentTail, "series tail estimate exceeds tolerance at Re s = " +
                                             std::to_string(s.real()));
    return v;
}

GeneralDirichletSeries truncate(const GeneralDirichletSeries& d, double q_max) {
    std::vector<DirichletTerm> t;
    for (std::size_t i = 0; i < d.size() && d.q(i) <= q_max * (1 + GeneralDirichletSeries::kMergeTol); ++i)
        t.push_back({d.q(i), d.coeff(i)});
    return GeneralDirichletSeries(std::move(t), std::min(q_max, d.cutoff()));
}

GeneralDirichletSeries multiply(const GeneralDirichletSeries& a, const GeneralDirichletSeries& b,
                                double q_max) {
    if (a.empty() || b.empty()) return GeneralDirichletSeries({}, std::min({q_max, a.cutoff(), b.cutoff()}));
    double cut = q_max;
    if (!b.exact()) cut = std::min(cut, b.cutoff() * a.q(0));
    if (!a.exact()) cut = std::min(cut, a.cutoff() * b.q(0));
    std::vector<DirichletTerm> out;
    const double lim = cut * (1 + GeneralDirichletSeries::kMergeTol);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.q(i) * b.q(0) > lim) break;
        const cplx ca = a.coeff(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double q = a.q(i) * b.q(j);
            if (q > lim) break;
            out.push_back({q, ca * b.coeff(j)});
        }
    }
    return GeneralDirichletSeries(std::move(out), cut);
}

GeneralDirichletSeries add(const GeneralDirichletSeries& a, const GeneralDirichletSeries& b) {
    const double cut = std::min(a.cutoff(), b.cutoff());
    std::vector<DirichletTerm> t = a.terms();
    for (const auto& x : b.terms()) t.push_back(x);
    return GeneralDirichletSeries(std::move(t), cut);
}

GeneralDirichletSeries scale(const GeneralDirichletSeries& a, cplx factor) {
    std::vector<DirichletTerm> t = a.terms();
    for (auto& x : t) x.c *= factor;
    return GeneralDirichletSeries(std::move(t), a.cutoff());
}

GeneralDirichletSeries differentiate(const GeneralDirichletSeries& d) {
    std::vector<DirichletTerm> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.q(i) != 1.0) t.push_back({d.q(i), -d.coeff(i) * d.log_q()[i]});
    return GeneralDirichletSeries(std::move(t), d.cutoff());
}

namespace {

// frequencies > 1 of the multiplicative semigroup generated by gens, up to q_max
std::vector<double> semigroup(const std::vector<double>& gens, double q_max) {
    std::vector<double> out;
    std::priority_queue<double, std::vector<double>, std::greater<>> heap;
    for (double g : gens)
        if (g <= q_max) heap.push(g);
    double last = 0.0;
    while (!heap.empty()) {
        const double q = heap.top();
        heap.pop();
        if (last > 0 && same_freq(q, last)) continue;
        out.push_back(q);
        last = q;
        for (double g : gens) {
            const double p = q * g;
            if (p > q_max * (1 + GeneralDirichletSeries::kMergeTol)) break;
            heap.push(p);
        }
    }
    return out;
}

// solves H * X = rhs term by term on the semigroup frequencies (plus q = 1 when rhs has it)
GeneralDirichletSeries solve_unit(const GeneralDirichletSeries& h, double cut,
                                  const std::function<cplx(double)>& rhs, bool include_one) {
    if (!h.leading_unit()) throw Error(Errc::NonUnitLeading, "series must start with 1 * 1^{-s}");
    std::vector<double> gens;
    for (std::size_t i = 1; i < h.size(); ++i) gens.push_back(h.q(i));
    std::vector<double> freqs = semigroup(gens, cut);
    if (include_one) freqs.insert(freqs.begin(), 1.0);
    std::vector<cplx> x(freqs.size());
    auto lookup = [&](double q) -> long {
        auto it = std::lower_bound(freqs.begin(), freqs.end(), q * (1 - GeneralDirichletSeries::kMergeTol));
        if (it != freqs.end() && same_freq(*it, q)) return long(it - freqs.begin());
        return -1;
    };
    for (std::size_t n = 0; n < freqs.size(); ++n) {
        const double q = freqs[n];
        cplx acc = rhs(q);
        for (std::size_t i = 1; i < h.size() && h.q(i) <= q * (1 + GeneralDirichletSeries::kMergeTol); ++i) {
            const long j = lookup(q / h.q(i));
            if (j >= 0 && std::size_t(j) < n) acc -= h.coeff(i) * x[std::size_t(j)];
        }
        x[n] = acc;
    }
    std::vector<DirichletTerm> t;
    for (std::size_t n = 0; n < freqs.size(); ++n) t.push_back({freqs[n], x[n]});
    return GeneralDirichletSeries(std::move(t), cut);
}

double solve_cutoff(const GeneralDirichletSeries& h, double q_max) {
    return h.exact() ? q_max : std::min(q_max, h.cutoff());
}

}  // namespace

GeneralDirichletSeries log_derivative(const GeneralDirichletSeries& h, double q_max) {
    const GeneralDirichletSeries dh = differentiate(h);
    return solve_unit(h, solve_cutoff(h, q_max), [&](double q) { return dh.coeff_at(q); }, false);
}

GeneralDirichletSeries reciprocal(const GeneralDirichletSeries& h, double q_max) {
    return solve_unit(h, solve_cutoff(h, q_max), [](double q) { return q == 1.0 ? cplx(1.0) : cplx(0.0); },
                      true);
}

GeneralDirichletSeries dk_series(const GeneralDirichletSeries& d1, int k, double q_max) {
    if (k < 1) throw Error(Errc::InvalidArgument, "dk_series needs k >= 1");
    GeneralDirichletSeries dk = truncate(d1, q_max);
    const GeneralDirichletSeries base = dk;
    for (int j = 1; j < k; ++j) dk = add(multiply(dk, base, q_max), differentiate(dk));
    return dk;
}

double empirical_abscissa(const GeneralDirichletSeries& d, double lo, double hi, double tol) {
    const GeneralDirichletSeries half = truncate(d, d.exact() ? (d.empty() ? 1.0 : d.q(d.size() - 1)) / 2 : d.cutoff() / 2);
    for (double sigma = lo; sigma <= hi + 1e-12; sigma += 0.25) {
        const cplx a = evaluate_raw(d, sigma).value;
        const cplx b = evaluate_raw(half, sigma).value;
        if (std::abs(a - b) <= tol * (1.0 + std::abs(a))) return sigma;
    }
    return hi + 0.25;
}

}  // namespace szl
