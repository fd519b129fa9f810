#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <algorithm>
#include <array>
#include <functional>

#include "szl/groups.hpp"

using namespace szl;
using std::numbers::pi;

namespace {

// brute-force PSL(2,Z) conjugacy partition of trace-t matrices with entries bounded by B,
// joined by conjugation with S and T; counts components that reach a small matrix
long long brute_force_classes(long long t, long long B) {
    std::map<std::array<long long, 4>, int> id;
    std::vector<std::array<long long, 4>> mats;
    auto norm = [](std::array<long long, 4> m) {
        if (m[2] < 0 || (m[2] == 0 && m[3] < 0)) for (auto& v : m) v = -v;
        return m;
    };
    for (long long a = -B; a <= B; ++a)
        for (long long c = -B; c <= B; ++c) {
            const long long d = t - a;
            if (c == 0 || std::llabs(d) > B) continue;
            const long long num = a * d - 1;
            if (num % c) continue;
            const long long b = num / c;
            if (std::llabs(b) > B) continue;
            auto m = norm({a, b, c, d});
            if (!id.count(m)) {
                id[m] = int(mats.size());
                mats.push_back(m);
            }
        }
    std::vector<int> parent(mats.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto conj = [](const std::array<long long, 4>& h, const std::array<long long, 4>& m) {
        // h m h^-1 with det h = 1
        const long long a = h[0], b = h[1], c = h[2], d = h[3];
        const long long p0 = a * m[0] + b * m[2], p1 = a * m[1] + b * m[3];
        const long long p2 = c * m[0] + d * m[2], p3 = c * m[1] + d * m[3];
        return std::array<long long, 4>{p0 * d - p1 * c, -p0 * b + p1 * a, p2 * d - p3 * c, -p2 * b + p3 * a};
    };
    const std::array<long long, 4> gens[] = {{1, 1, 0, 1}, {0, -1, 1, 0}};
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (const auto& h : gens) {
            auto it = id.find(norm(conj(h, mats[i])));
            if (it != id.end()) parent[find(int(i))] = find(it->second);
        }
    std::set<int> roots;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto& m = mats[i];
        if (std::max({std::llabs(m[0]), std::llabs(m[1]), std::llabs(m[2]), std::llabs(m[3])}) <= 10)
            roots.insert(find(int(i)));
    }
    return (long long)roots.size();
}

}  // namespace

TEST_CASE("exact quadratic comparison") {
    const QuadraticNumber golden_sq = norm_from_trace_sq(5);
    CHECK(golden_sq.compare(4) < 0);
    CHECK(std::abs(golden_sq.to_double() - std::pow((1 + std::sqrt(5.0)) / 2, 2)) < 1e-14);
    const QuadraticNumber u6 = norm_from_trace_sq(6);
    CHECK(u6.compare(2) > 0);
    CHECK(std::abs(u6.to_double() - (2 + std::sqrt(3.0))) < 1e-14);
    CHECK(norm_from_trace_sq(9).compare(4) > 0);
    CHECK((QuadraticNumber{Rational(3), Rational(-1), Rational(9)}).sign() == 0);
    CHECK((QuadraticNumber{Rational(1), Rational(-1, 2), Rational(4)}).sign() == 0);
    CHECK(Rational(6, 4) == Rational(3, 2));
}

TEST_CASE("catalog parsing and signatures") {
    CHECK(parse_group("psl2z").kind == GroupKind::Modular);
    const auto g6 = parse_group("gamma0:6");
    CHECK(g6.signature.cusps == 4);
    CHECK(g6.signature.genus == 0);
    CHECK(parse_group("gamma0:10").signature.cusps == 4);
    CHECK(parse_group("gamma0:7").signature.cusps == 2);
    CHECK(parse_group("gamma0plus:5").signature.elliptic_orders.size() == 3);
    CHECK(parse_group("compact:0:2,3,7").signature.elliptic_orders.size() == 3);
    CHECK_THROWS_AS(parse_group("gamma0:4"), Error);
    CHECK_THROWS_AS(parse_group("gamma0plus:7"), Error);
    CHECK_THROWS_AS(parse_group("torus"), Error);
    CHECK_THROWS_AS(parse_group("compact:1"), Error);  // zero area
}

TEST_CASE("volume") {
    CHECK(std::abs(volume(modular_group()) - pi / 3) < 1e-14);
    CHECK(std::abs(volume(gamma0_plus(5)) - pi) < 1e-14);
    CHECK(std::abs(volume(compact_surface(2)) - 4 * pi) < 1e-14);
    // index of Gamma0(N) times the modular area
    for (long long n : {2, 3, 5, 6, 7, 10, 30}) {
        long long mu = 1;
        for (long long p : prime_factors(n)) mu *= p + 1;
        CHECK(std::abs(volume(gamma0(n)) - mu * pi / 3) < 1e-12);
    }
}

TEST_CASE("enumerate_elements") {
    const auto mod = enumerate_elements(modular_group(), 1, 3);
    CHECK(std::find(mod.begin(), mod.end(), GroupElement{2, 1, 1, 1, 1}) != mod.end());
    const auto g5 = enumerate_elements(gamma0_plus(5), 3, 3);
    CHECK(std::find(g5.begin(), g5.end(), GroupElement{0, -1, 5, 5, 5}) != g5.end());
    for (const auto& x : g5) CHECK(satisfies_invariants(gamma0_plus(5), x));
    for (const auto& x : enumerate_elements(gamma0(6), 5, 3)) CHECK(!x.is_hyperbolic());
    CHECK_THROWS_AS(enumerate_elements(compact_surface(2), 1, 3), Error);
}

TEST_CASE("element arithmetic closes in the moonshine groups") {
    const auto g6 = gamma0_plus(6);
    const auto els = enumerate_elements(g6, 3, 4);
    REQUIRE(els.size() > 10);
    for (std::size_t i = 0; i < els.size(); i += 7)
        for (std::size_t j = 0; j < els.size(); j += 11) {
            const GroupElement p = multiply(els[i], els[j]);
            CHECK(satisfies_invariants(g6, p));
            CHECK(conjugate(els[i], els[j]).trace_sq() == els[j].trace_sq());
        }
}

TEST_CASE("systole search") {
    const auto mod = systole_search(modular_group());
    CHECK(mod.trace_sq == Rational(9));
    CHECK(std::abs(mod.exp_length.to_double() - std::pow((3 + std::sqrt(5.0)) / 2, 2)) < 1e-12);
    CHECK(std::abs(std::exp(mod.length) - mod.exp_length.to_double()) < 1e-12);

    const auto p5 = systole_search(gamma0_plus(5));
    CHECK(p5.trace_sq == Rational(5));
    CHECK(satisfies_invariants(gamma0_plus(5), p5.witness));
    const auto p6 = systole_search(gamma0_plus(6));
    CHECK(p6.trace_sq == Rational(6));
    CHECK(p6.exp_length.compare(2) > 0);

    // levels where x^2 - 3x + 1 has a root mod N
    CHECK(systole_search(gamma0(5)).trace_sq == Rational(9));
    CHECK(systole_search(gamma0(2)).trace_sq == Rational(16));
    CHECK(systole_search(gamma0(3)).trace_sq == Rational(16));
    CHECK(systole_search(gamma0(6)).trace_sq == Rational(16));
    CHECK(systole_search(gamma0(7)).trace_sq == Rational(25));
    CHECK(systole_search(gamma0(10)).trace_sq == Rational(64));
}

TEST_CASE("systole search agrees with exhaustive enumeration") {
    for (const auto& g : {gamma0(2), gamma0(3), gamma0(7), gamma0_plus(5), gamma0_plus(6)}) {
        const auto sys = systole_search(g);
        Rational best(1000);
        for (const auto& x : enumerate_elements(g, 40, 9, 60))
            if (x.is_hyperbolic() && x.trace_sq() < best) best = x.trace_sq();
        CHECK(best == sys.trace_sq);
    }
}

TEST_CASE("modular class counts match a brute-force conjugacy partition") {
    for (long long t : {3, 4, 5, 6}) CHECK(modular_class_count(t) == brute_force_classes(t, 50));
    for (long long t = 3; t < 60; ++t) CHECK(modular_class_count(t) >= 1);
    for (long long t = 3; t < 30; ++t)
        for (const auto& m : modular_class_reps(t)) {
            CHECK(m.det() == 1);
            CHECK(std::llabs(m.a + m.d) == t);
        }
}

TEST_CASE("modular census") {
    const auto census = modular_geodesic_census(100);
    REQUIRE(!census.empty());
    CHECK(std::abs(census.front().norm - std::pow((3 + std::sqrt(5.0)) / 2, 2)) < 1e-12);
    CHECK(census.front().primitive);
    long long total = 0, expected = 0;
    std::set<long long> traces;
    for (const auto& c : census) {
        total += c.multiplicity;
        traces.insert((long long)std::llround(std::sqrt(c.trace_sq_scaled.to_double())));
        CHECK(std::abs(std::log(c.norm) - c.length) < 1e-12);
        CHECK(c.norm <= 100);
    }
    for (long long t : traces) expected += modular_class_count(t);
    CHECK(total == expected);
    CHECK(power_trace(7, 1) == 7);
    CHECK(power_trace(3, 2) == 7);
    // the square of (2 1; 1 1) is a square root witness
    const auto r = integral_root(multiply({2, 1, 1, 1, 1}, {2, 1, 1, 1, 1}), 3, 2);
    REQUIRE(r.has_value());
    CHECK(*r == GroupElement{2, 1, 1, 1, 1});
    CHECK_THROWS_AS(modular_geodesic_census(5), Error);
}

TEST_CASE("power sieve conserves class totals at several cutoffs") {
    for (double x : {50.0, 500.0, 5000.0}) {
        const auto census = modular_geodesic_census(x);
        std::map<long long, long long> by_trace;
        for (const auto& c : census) by_trace[(long long)std::llround(std::sqrt(c.trace_sq_scaled.to_double()))] += c.multiplicity;
        for (const auto& [t, n] : by_trace) CHECK(n == modular_class_count(t));
    }
}

TEST_CASE("gamma0 census through the projective line") {
    CHECK(geodesic_census(gamma0(1), 500).size() == modular_geodesic_census(500).size());
    const auto c2 = geodesic_census(gamma0(2), 1000);
    REQUIRE(!c2.empty());
    CHECK(c2.front().trace_sq_scaled == Rational(16));
    const auto c5 = geodesic_census(gamma0(5), 1000);
    CHECK(c5.front().trace_sq_scaled == Rational(9));
    // every class of trace t in Gamma0(N) comes from a class of PSL(2,Z); the total number of
    // Gamma0(N) classes above a modular class equals its number of orbits on fixed points, so
    // counts are bounded by the index times the modular count
    for (const auto& c : c5) {
        const long long t = (long long)std::llround(std::sqrt(c.trace_sq_scaled.to_double()));
        CHECK(c.multiplicity <= 6 * modular_class_count(t));
    }
    CHECK_THROWS_AS(geodesic_census(gamma0_plus(5), 100), Error);
}

TEST_CASE("systole multiplicity") {
    CHECK(systole_multiplicity(modular_group()).count == 1);
    CHECK(systole_multiplicity(modular_group()).exact);
    const auto m5 = systole_multiplicity(gamma0_plus(5));
    CHECK(m5.count >= 1);
    CHECK(!m5.exact);
    CHECK(systole_multiplicity(gamma0_plus(5), 96).count == m5.count);
    const auto m6 = systole_multiplicity(gamma0_plus(6));
    CHECK(m6.count >= 1);
    CHECK(systole_multiplicity(gamma0_plus(6), 96).count == m6.count);
    MESSAGE("m0 gamma0plus:5 = " << m5.count << ", gamma0plus:6 = " << m6.count);
}
