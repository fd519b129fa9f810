#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "szl/kernels.hpp"

using namespace szl::kernels;

namespace {

struct Terms {
    std::vector<double> L, re, im;
};

Terms random_terms(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> l(0.0, 12.0), c(-3.0, 3.0);
    Terms t;
    for (std::size_t k = 0; k < n; ++k) {
        t.L.push_back(l(rng));
        t.re.push_back(c(rng));
        t.im.push_back(c(rng));
    }
    return t;
}

}  // namespace

TEST_CASE("scalar kernel on a hand-sized sum") {
    const double L[] = {0.0, std::log(2.0)};
    const double re[] = {1.0, 1.0};
    const double im[] = {0.0, 0.0};
    const SumResult r = dirichlet_sum_scalar(L, re, im, 2, 1.0);
    CHECK(std::abs(r.sum - std::complex<double>(1.5, 0.0)) < 1e-15);
    CHECK(std::abs(r.abs_sum - 1.5) < 1e-15);
}

TEST_CASE("vector kernel matches the scalar reference") {
    DirichletFn fast = dirichlet_sum_avx2_fn();
    if (fast == nullptr) {
        MESSAGE("AVX2 unavailable, equivalence check skipped");
        return;
    }
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> sig(-0.5, 4.0), tt(-1000.0, 1000.0);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 97;
        const Terms t = random_terms(rng, n);
        const std::complex<double> s(sig(rng), tt(rng));
        const SumResult a = dirichlet_sum_scalar(t.L.data(), t.re.data(), t.im.data(), n, s);
        const SumResult b = fast(t.L.data(), t.re.data(), t.im.data(), n, s);
        CHECK(std::abs(a.sum - b.sum) <= 1e-13 * a.abs_sum);
        CHECK(std::abs(a.abs_sum - b.abs_sum) <= 1e-13 * a.abs_sum);
    }
}

TEST_CASE("vector kernel handles underflow and empty input") {
    DirichletFn fast = dirichlet_sum_avx2_fn();
    if (fast == nullptr) return;
    std::vector<double> L = {800.0, 900.0, 1000.0, 2000.0, 0.0};
    std::vector<double> re(5, 1.0), im(5, 0.0);
    const SumResult r = fast(L.data(), re.data(), im.data(), 5, 1.0);
    CHECK(std::abs(r.sum - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(fast(L.data(), re.data(), im.data(), 0, 1.0).abs_sum == 0.0);
}

TEST_CASE("dispatch reports a known isa") {
    const Isa isa = active_isa();
    CHECK((isa == Isa::Scalar || isa == Isa::Avx2));
    CHECK(std::string(isa_name(isa)).size() > 0);
}
