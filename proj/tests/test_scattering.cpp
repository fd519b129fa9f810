#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "szl/invariants.hpp"
#include "szl/scattering.hpp"

using namespace szl;

namespace {

const double kPi = std::numbers::pi;

std::vector<GroupDescriptor> closed_form_groups() {
    std::vector<GroupDescriptor> out = {modular_group(), gamma0_plus(5)};
    for (long long n : {2, 3, 5, 6, 7, 10}) out.push_back(gamma0(n));
    return out;
}

const ScatteringData& cached(const std::string& id) {
    static std::map<std::string, ScatteringData> memo;
    auto it = memo.find(id);
    if (it == memo.end()) it = memo.emplace(id, decompose(parse_group(id))).first;
    return it->second;
}

}  // namespace

TEST_CASE("phi functional equation on a grid") {
    for (const auto& g : closed_form_groups()) {
        CAPTURE(g.id);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const cplx s(0.1 + 1.9 * i / 4.0, 20.0 * j / 4.0);
                const cplx v = phi_closed_form(g, s) * phi_closed_form(g, 1.0 - s);
                CHECK(std::abs(v - 1.0) < 1e-8);
            }
        CHECK(std::abs(phi_closed_form(g, {0.7, 3.0}) * phi_closed_form(g, {0.3, -3.0}) - 1.0) < 1e-8);
    }
}

TEST_CASE("phi is unimodular on the critical line") {
    for (const auto& g : closed_form_groups())
        for (double t : {1.0, 5.0, 10.0}) CHECK(std::abs(std::abs(phi_closed_form(g, {0.5, t})) - 1.0) < 1e-8);
}

TEST_CASE("modular phi at s = 3") {
    const double z5 = 1.0369277551433699263, z6 = std::pow(kPi, 6) / 945.0;
    const double expect = std::sqrt(kPi) * std::tgamma(2.5) / std::tgamma(3.0) * z5 / z6;
    CHECK(std::abs(phi_closed_form(modular_group(), 3.0) - expect) < 1e-12);
}

TEST_CASE("phi closed forms reject unsupported groups and poles") {
    CHECK_THROWS_AS(phi_closed_form(gamma0_plus(6), 2.0), Error);
    CHECK_THROWS_AS(phi_closed_form(compact_surface(2, {}, 1.0), 2.0), Error);
    try {
        phi_closed_form(modular_group(), 1.0);
        FAIL("expected a pole");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PoleHit);
    }
}

TEST_CASE("modular S(c) is the totient") {
    const auto terms = scattering_series(modular_group(), 50);
    REQUIRE(terms.size() == 50);
    for (const auto& t : terms) CHECK(t.S == euler_phi(llround(t.c)));
}

TEST_CASE("smallest admissible c for the moonshine groups") {
    const auto t5 = scattering_series(gamma0_plus(5), 20);
    CHECK(t5[0].c_sq == Rational(5));
    const auto t6 = scattering_series(gamma0_plus(6), 20);
    CHECK(t6[0].c_sq == Rational(6));
    CHECK(t6[1].c_sq == Rational(12));
    CHECK_THROWS_AS(scattering_series(gamma0(6), 20), Error);
}

TEST_CASE("closed form and S(c) series agree") {
    for (const char* id : {"psl2z", "gamma0plus:5"}) {
        const auto& sd = cached(id);
        const auto g = parse_group(id);
        for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 4.0), cplx(3.0, -11.0), cplx(2.5, 0.0)}) {
            const cplx a = phi_closed_form(g, s), b = phi_series(sd, s);
            CHECK(std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("phi = K H for every closed form") {
    for (const auto& g : closed_form_groups()) {
        CAPTURE(g.id);
        const auto& sd = cached(g.id);
        for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 2.0), cplx(4.0, -7.0)}) {
            const cplx a = phi_closed_form(g, s);
            CHECK(std::abs(phi_series(sd, s) - a) < 1e-8 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("ladder ratios") {
    for (long long n : {1, 2, 3, 5, 6, 7, 10}) CHECK(cached(gamma0(n).id).g_ratio_sq == Rational(4));
    CHECK(cached("gamma0plus:5").g_ratio_sq == Rational(4));
    CHECK(cached("gamma0plus:6").g_ratio_sq == Rational(2));
}

TEST_CASE("structure of H") {
    for (const char* id : {"psl2z", "gamma0:6", "gamma0:7", "gamma0plus:5", "gamma0plus:6"}) {
        const auto& sd = cached(id);
        CHECK(sd.H.leading_unit());
        for (std::size_t i = 1; i < sd.H.size(); ++i) CHECK(sd.H.q(i) > 1.0);
        for (std::size_t i = 1; i < sd.ladder.size(); ++i) CHECK(sd.ladder[i - 1].g_sq < sd.ladder[i].g_sq);
        CHECK(sd.c1 == doctest::Approx(-2.0 * std::log(sd.g1())).epsilon(1e-14));
    }
}

TEST_CASE("constants") {
    const auto& m = cached("psl2z");
    CHECK(m.c1 == 0.0);
    CHECK(m.c2 == 0.0);
    CHECK(b2_constant(m) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    const auto& s6 = cached("gamma0plus:6");
    CHECK(s6.d1() == 1.0);
    CHECK(b2_constant(s6) == doctest::Approx(std::sqrt(kPi) / std::sqrt(6.0) * s6.d1()));
    CHECK(s6.b_at_ratio == doctest::Approx(-std::log(2.0)));
    CHECK(m.b_at_ratio == doctest::Approx(-std::log(4.0)));
    // prime level carries d(1) = -1
    CHECK(cached("gamma0:7").d1_sign == -1);
    CHECK(cached("gamma0:6").d1_sign == 1);
}

TEST_CASE("rescaled raw series leaves H unchanged") {
    ScatteringData a = cached("gamma0plus:6");
    for (auto& e : a.ladder) e.d *= 3.5;
    // normalized coefficients are ratios of the ladder
    for (std::size_t i = 0; i < 20; ++i) {
        const double q = (a.ladder[i].g_sq / a.ladder[0].g_sq).to_double();
        CHECK(a.ladder[i].d / a.ladder[0].d == doctest::Approx(a.H.coeff_at(q).real()));
    }
}

TEST_CASE("K'/K against Cauchy differentiation of log K") {
    for (const char* id : {"psl2z", "gamma0:6", "gamma0plus:6"}) {
        const auto& sd = cached(id);
        auto logk = [&](cplx s) {
            return double(sd.n1) * (log_gamma(s - 0.5).value - log_gamma(s).value) + sd.c1 * s + sd.c2;
        };
        const cplx s(2.0, 1.0);
        const auto d = cauchy_derivative(logk, s, 1, 0.25);
        CHECK(std::abs(d.value - k_logderiv(sd, s)) < 1e-8);
    }
}

TEST_CASE("invariants and trichotomy") {
    const auto inv6 = invariants(gamma0(6), &cached("gamma0:6"));
    CHECK(inv6.trichotomy == Trichotomy::ScatteringSmaller);
    CHECK(inv6.A == 4.0);
    CHECK(inv6.a == doctest::Approx(cached("gamma0:6").b_at_ratio));

    const auto inv5 = invariants(gamma0_plus(5), &cached("gamma0plus:5"));
    const double golden_sq = std::pow((1 + std::sqrt(5.0)) / 2, 2);
    CHECK(inv5.trichotomy == Trichotomy::GeodesicSmaller);
    CHECK(inv5.A == doctest::Approx(golden_sq).epsilon(1e-14));
    CHECK(inv5.a == doctest::Approx(inv5.m0 * inv5.systole_length / (1 - std::exp(-inv5.systole_length))));

    const auto inv66 = invariants(gamma0_plus(6), &cached("gamma0plus:6"));
    CHECK(inv66.trichotomy == Trichotomy::ScatteringSmaller);
    CHECK(inv66.A == 2.0);
    CHECK(inv66.exp_systole == doctest::Approx(2 + std::sqrt(3.0)));

    const auto invm = invariants(modular_group(), &cached("psl2z"));
    CHECK(invm.A == 4.0);
    CHECK(invm.a == doctest::Approx(-std::log(4.0)));

    for (const auto* inv : {&inv6, &inv5, &inv66, &invm}) {
        CHECK(inv->a_k(1) == inv->a);
        CHECK(inv->a_k(3) == doctest::Approx(inv->a * std::pow(std::log(inv->A), 2)));
        CHECK(inv->a_k(2) == doctest::Approx(-inv->a * std::log(inv->A)));
    }

    const auto c = invariants(compact_surface(2, {}, 1.0, 2), nullptr);
    CHECK(c.A == doctest::Approx(std::numbers::e));
    CHECK(c.a == doctest::Approx(2.0 / (1 - std::exp(-1.0))));
    CHECK(c.volume == doctest::Approx(4 * kPi));
}

TEST_CASE("m0 override") {
    InvariantOptions o;
    o.m0_override = 3;
    const auto inv = invariants(gamma0_plus(5), &cached("gamma0plus:5"), o);
    CHECK(inv.m0 == 3);
    CHECK_FALSE(inv.m0_exact);
}
