#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szl/quadratic.hpp"

namespace szl {

enum class GroupKind { Modular, Gamma0, Gamma0Plus, AbstractCompact };

struct Signature {
    int genus = 0;
    std::vector<int> elliptic_orders;
    int cusps = 0;
};

struct GroupDescriptor {
    GroupKind kind = GroupKind::Modular;
    long long level = 1;
    Signature signature;
    std::string id;
    // compact surfaces have no matrix model here; their systole is supplied by the caller
    std::optional<double> systole_length;
    int systole_multiplicity = 1;
};

const char* kind_name(GroupKind k);

GroupDescriptor modular_group();
GroupDescriptor gamma0(long long n);
GroupDescriptor gamma0_plus(long long f);
GroupDescriptor compact_surface(int genus, std::vector<int> elliptic_orders = {},
                                std::optional<double> systole_length = std::nullopt,
                                int systole_multiplicity = 1);

// psl2z, gamma0:N, gamma0plus:f, compact:g[:m1,m2,...]
GroupDescriptor parse_group(const std::string& id);

bool is_squarefree(long long n);
std::vector<long long> prime_factors(long long n);
std::vector<long long> divisors(long long n);
long long euler_phi(long long n);

double volume(const GroupDescriptor& g);
bool has_matrix_model(const GroupDescriptor& g);

// (1/sqrt(e)) (a b; c d)
struct GroupElement {
    long long a = 1, b = 0, c = 0, d = 1;
    long long e = 1;

    long long det() const { return a * d - b * c; }
    // square of the real trace, (a + d)^2 / e
    Rational trace_sq() const { return Rational((i128)(a + d) * (a + d), e); }
    double real_trace() const;
    double real_c() const;
    bool is_hyperbolic() const { return trace_sq() > Rational(4); }
    GroupElement inverse() const { return {d, -b, -c, a, e}; }
    // sign choice making the element unique in PSL
    GroupElement normalized() const;
    bool operator==(const GroupElement& o) const = default;
};

bool satisfies_invariants(const GroupDescriptor& g, const GroupElement& x);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement conjugate(const GroupElement& h, const GroupElement& x);  // h x h^-1

// Elements up to sign with |c|/sqrt(e) <= c_bound, |a+d|/sqrt(e) <= trace_bound and
// |a|,|b|,|d| /sqrt(e) <= entry_bound (defaults to c_bound + trace_bound).
std::vector<GroupElement> enumerate_elements(const GroupDescriptor& g, double c_bound,
                                             double trace_bound, double entry_bound = 0.0);

struct SystoleResult {
    Rational trace_sq;          // tau0^2
    double trace = 0.0;         // tau0
    double length = 0.0;        // 2 arccosh(tau0/2)
    QuadraticNumber exp_length; // exact e^{length}
    GroupElement witness;
};

// Smallest hyperbolic |trace| up to trace_ceiling. A trace tau = t' sqrt(e) occurs iff
// e x (t' - x) = 1 has a solution modulo f/e, and such a solution is realized with c = f, so
// scanning that row is complete.
SystoleResult systole_search(const GroupDescriptor& g, double trace_ceiling = 64.0);

// integral binary quadratic form a x^2 + b x y + c y^2
struct Form {
    long long a = 0, b = 0, c = 0;
    bool operator==(const Form& o) const = default;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// all reduced forms of a non-square discriminant D > 0, grouped into rho-cycles
std::vector<std::vector<Form>> reduced_cycles(long long D);
// number of PSL(2,Z) classes of trace t (|t| >= 3)
long long modular_class_count(long long t);
// one matrix per PSL(2,Z) class of trace |t|
std::vector<GroupElement> modular_class_reps(long long t);

// trace of the k-th power of an element of trace t
long long power_trace(long long t, int k);
// returns r with r^k = x if it exists (k >= 2)
std::optional<GroupElement> integral_root(const GroupElement& x, long long root_trace, int k);

struct GeodesicClass {
    Rational trace_sq_scaled;
    double norm = 0.0;
    double length = 0.0;
    bool primitive = true;
    double primitive_norm = 0.0;
    long long multiplicity = 1;
    long long power = 1;
};

// all classes of PSL(2,Z) with N(P) <= x, sorted by norm then primitive norm
std::vector<GeodesicClass> modular_geodesic_census(double x);
// Gamma0(N) by splitting PSL(2,Z) classes over P^1(Z/N); Modular delegates
std::vector<GeodesicClass> geodesic_census(const GroupDescriptor& g, double x);

long long primitive_count_at(const std::vector<GeodesicClass>& census, const Rational& trace_sq);

struct MultiplicityResult {
    int count = 0;
    bool exact = false;  // false when obtained from a bounded conjugacy search
    long long search_bound = 0;
};

// number of inconjugate primitive classes at the systole
MultiplicityResult systole_multiplicity(const GroupDescriptor& g, long long search_bound = 0);

}  // namespace szl
