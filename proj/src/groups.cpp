#include "szl/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace szl {

const char* kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::Modular: return "Modular";
        case GroupKind::Gamma0: return "Gamma0";
        case GroupKind::Gamma0Plus: return "Gamma0Plus";
        case GroupKind::AbstractCompact: return "AbstractCompact";
    }
    return "?";
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_squarefree(long long n) {
    if (n < 1) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long euler_phi(long long n) {
    long long r = n;
    for (long long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

GroupDescriptor modular_group() {
    GroupDescriptor g;
    g.kind = GroupKind::Modular;
    g.level = 1;
    g.signature = {0, {2, 3}, 1};
    g.id = "psl2z";
    return g;
}

GroupDescriptor gamma0(long long n) {
    if (!is_squarefree(n)) throw Error(Errc::UnknownGroup, "gamma0 level must be squarefree");
    if (n == 1) {
        GroupDescriptor g = modular_group();
        g.kind = GroupKind::Gamma0;
        g.id = "gamma0:1";
        return g;
    }
    long long mu = 1, e2 = 1, e3 = 1;
    const auto ps = prime_factors(n);
    for (long long p : ps) {
        mu *= p + 1;
        e2 *= p == 2 ? 1 : (p % 4 == 1 ? 2 : 0);
        e3 *= p == 3 ? 1 : (p % 3 == 1 ? 2 : 0);
    }
    const long long cusps = 1LL << ps.size();
    const long long g12 = 12 + mu - 3 * e2 - 4 * e3 - 6 * cusps;
    GroupDescriptor g;
    g.kind = GroupKind::Gamma0;
    g.level = n;
    g.signature.genus = int(g12 / 12);
    for (long long i = 0; i < e2; ++i) g.signature.elliptic_orders.push_back(2);
    for (long long i = 0; i < e3; ++i) g.signature.elliptic_orders.push_back(3);
    g.signature.cusps = int(cusps);
    g.id = "gamma0:" + std::to_string(n);
    return g;
}

GroupDescriptor gamma0_plus(long long f) {
    if (f != 5 && f != 6)
        throw Error(Errc::UnsupportedGroup, "gamma0plus is catalogued for levels 5 and 6 only");
    GroupDescriptor g;
    g.kind = GroupKind::Gamma0Plus;
    g.level = f;
    g.signature = {0, {2, 2, 2}, 1};
    g.id = "gamma0plus:" + std::to_string(f);
    return g;
}

GroupDescriptor compact_surface(int genus, std::vector<int> elliptic_orders,
                                std::optional<double> systole_length, int systole_multiplicity) {
    GroupDescriptor g;
    g.kind = GroupKind::AbstractCompact;
    g.level = 1;
    g.signature = {genus, std::move(elliptic_orders), 0};
    g.systole_length = systole_length;
    g.systole_multiplicity = systole_multiplicity;
    std::ostringstream id;
    id << "compact:" << genus;
    for (std::size_t i = 0; i < g.signature.elliptic_orders.size(); ++i)
        id << (i == 0 ? ":" : ",") << g.signature.elliptic_orders[i];
    g.id = id.str();
    if (systole_multiplicity < 1) throw Error(Errc::InvalidArgument, "systole multiplicity must be positive");
    if (systole_length && !(*systole_length > 0))
        throw Error(Errc::InvalidArgument, "systole length must be positive");
    volume(g);
    return g;
}

namespace {

long long parse_int(const std::string& s, const std::string& id) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw Error(Errc::UnknownGroup, "bad group id: " + id);
    }
    if (pos != s.size()) throw Error(Errc::UnknownGroup, "bad group id: " + id);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

GroupDescriptor parse_group(const std::string& id) {
    if (id == "psl2z") return modular_group();
    const auto parts = split(id, ':');
    if (parts.size() == 2 && parts[0] == "gamma0") {
        const long long n = parse_int(parts[1], id);
        if (n < 1 || !is_squarefree(n)) throw Error(Errc::UnknownGroup, "gamma0 level must be squarefree: " + id);
        return gamma0(n);
    }
    if (parts.size() == 2 && parts[0] == "gamma0plus") {
        const long long f = parse_int(parts[1], id);
        if (f != 5 && f != 6) throw Error(Errc::UnknownGroup, "no catalog entry for " + id);
        return gamma0_plus(f);
    }
    if ((parts.size() == 2 || parts.size() == 3) && parts[0] == "compact") {
        const long long genus = parse_int(parts[1], id);
        if (genus < 0) throw Error(Errc::UnknownGroup, "negative genus: " + id);
        std::vector<int> orders;
        if (parts.size() == 3 && !parts[2].empty()) {
            for (const auto& o : split(parts[2], ',')) {
                const long long m = parse_int(o, id);
                if (m < 2) throw Error(Errc::UnknownGroup, "elliptic orders must be >= 2: " + id);
                orders.push_back(int(m));
            }
        }
        try {
            return compact_surface(int(genus), orders);
        } catch (const Error& e) {
            throw Error(Errc::UnknownGroup, std::string(e.what()) + ": " + id);
        }
    }
    throw Error(Errc::UnknownGroup, "unknown group id: " + id);
}

double volume(const GroupDescriptor& g) {
    const Signature& s = g.signature;
    double chi = 2.0 * s.genus - 2.0 + s.cusps;
    for (int m : s.elliptic_orders) chi += 1.0 - 1.0 / m;
    if (!(chi > 1e-12)) throw Error(Errc::InvalidSignature, "signature has non-positive area");
    return 2.0 * std::numbers::pi * chi;
}

bool has_matrix_model(const GroupDescriptor& g) { return g.kind != GroupKind::AbstractCompact; }

double GroupElement::real_trace() const { return std::abs(double(a + d)) / std::sqrt(double(e)); }
double GroupElement::real_c() const { return std::abs(double(c)) / std::sqrt(double(e)); }

GroupElement GroupElement::normalized() const {
    const bool flip = c < 0 || (c == 0 && (d < 0 || (d == 0 && a < 0)));
    return flip ? GroupElement{-a, -b, -c, -d, e} : *this;
}

bool satisfies_invariants(const GroupDescriptor& g, const GroupElement& x) {
    if (x.e < 1 || x.det() != x.e) return false;
    switch (g.kind) {
        case GroupKind::Modular:
        case GroupKind::Gamma0: return x.e == 1 && x.c % g.level == 0;
        case GroupKind::Gamma0Plus:
            return g.level % x.e == 0 && x.a % x.e == 0 && x.d % x.e == 0 && x.c % g.level == 0;
        case GroupKind::AbstractCompact: return false;
    }
    return false;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    i128 p[4] = {(i128)x.a * y.a + (i128)x.b * y.c, (i128)x.a * y.b + (i128)x.b * y.d,
                 (i128)x.c * y.a + (i128)x.d * y.c, (i128)x.c * y.b + (i128)x.d * y.d};
    i128 E = (i128)x.e * y.e;
    long long g = 0;
    for (i128 v : p) g = std::gcd(g, (long long)(v < 0 ? -v : v));
    // largest k with k | entries and k^2 | E
    for (long long k = std::min<long long>(g, (long long)std::sqrt((double)E) + 1); k > 1; --k) {
        if (g % k == 0 && E % ((i128)k * k) == 0) {
            for (i128& v : p) v /= k;
            E /= (i128)k * k;
            break;
        }
    }
    return {(long long)p[0], (long long)p[1], (long long)p[2], (long long)p[3], (long long)E};
}

GroupElement conjugate(const GroupElement& h, const GroupElement& x) {
    return multiply(multiply(h, x), h.inverse());
}

namespace {

std::vector<long long> scales(const GroupDescriptor& g) {
    if (g.kind == GroupKind::Gamma0Plus) return divisors(g.level);
    return {1};
}

long long floor_ll(double v) { return (long long)std::floor(v + 1e-9); }

}  // namespace

std::vector<GroupElement> enumerate_elements(const GroupDescriptor& g, double c_bound,
                                             double trace_bound, double entry_bound) {
    if (!has_matrix_model(g)) throw Error(Errc::UnsupportedKind, "no matrix model for " + g.id);
    if (!(c_bound > 0) || !(trace_bound > 0)) throw Error(Errc::InvalidArgument, "bounds must be positive");
    if (entry_bound <= 0) entry_bound = c_bound + trace_bound;
    std::vector<GroupElement> out;
    const long long f = g.level;
    for (long long e : scales(g)) {
        const double se = std::sqrt(double(e));
        const long long cmax = floor_ll(c_bound * se);
        const long long tmax = floor_ll(trace_bound * se);
        const long long emax = floor_ll(entry_bound * se);
        if (e == 1 && tmax >= 2) {
            for (long long b = -emax; b <= emax; ++b) out.push_back({1, b, 0, 1, 1});
        }
        for (long long c = f; c <= cmax; c += f) {
            for (long long tr = -(tmax / e) * e; tr <= tmax; tr += e) {
                for (long long a = -(emax / e) * e; a <= emax; a += e) {
                    const long long d = tr - a;
                    if (std::llabs(d) > emax) continue;
                    const i128 num = (i128)a * d - e;
                    if (num % c != 0) continue;
                    const long long b = (long long)(num / c);
                    if (std::llabs(b) > emax) continue;
                    GroupElement x{a, b, c, d, e};
                    if (!satisfies_invariants(g, x)) throw Error(Errc::InvalidArgument, "enumeration invariant broken");
                    out.push_back(x);
                }
            }
        }
    }
    return out;
}

SystoleResult systole_search(const GroupDescriptor& g, double trace_ceiling) {
    if (!has_matrix_model(g)) throw Error(Errc::UnsupportedKind, "no matrix model for " + g.id);
    if (!(trace_ceiling > 2)) throw Error(Errc::InvalidArgument, "trace ceiling must exceed 2");
    const long long f = g.level;
    std::optional<Rational> best;
    GroupElement witness;
    for (long long e : scales(g)) {
        const long long m = f / e;
        for (long long t = 1; double(e) * t * t <= trace_ceiling * trace_ceiling; ++t) {
            const Rational t2((i128)e * t * t, 1);
            if (t2 <= Rational(4)) continue;
            if (best && t2 >= *best) break;
            for (long long x = 0; x < m || (m == 1 && x == 0); ++x) {
                const i128 lhs = (i128)e * x * (t - x) - 1;
                if (lhs % m != 0) continue;
                const long long a = e * x, d = e * (t - x);
                const i128 num = (i128)a * d - e;
                GroupElement w{a, (long long)(num / f), f, d, e};
                if (num % f != 0 || !satisfies_invariants(g, w))
                    throw Error(Errc::InvalidArgument, "systole witness failed its invariants");
                best = t2;
                witness = w;
                break;
            }
            if (best && *best == t2) break;
        }
    }
    if (!best) throw Error(Errc::NoHyperbolicFound, "no hyperbolic element below the trace ceiling");
    SystoleResult r;
    r.trace_sq = *best;
    r.trace = std::sqrt(best->to_double());
    r.length = 2.0 * std::acosh(r.trace / 2.0);
    r.exp_length = norm_from_trace_sq(*best);
    r.witness = witness.normalized();
    return r;
}

namespace {

long long isqrt(long long n) {
    long long r = (long long)std::sqrt((double)n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Form rho(const Form& f, long long D, long long s) {
    const long long m = 2 * std::llabs(f.c);
    // largest b' <= floor(sqrt D) with b' = -b (mod 2|c|)
    const long long r = ((s + f.b) % m + m) % m;
    const long long b2 = s - r;
    return {f.c, b2, (b2 * b2 - D) / (4 * f.c)};
}

}  // namespace

std::vector<std::vector<Form>> reduced_cycles(long long D) {
    const long long s = isqrt(D);
    if (D <= 0 || s * s == D) throw Error(Errc::InvalidArgument, "discriminant must be a positive non-square");
    std::vector<Form> reduced;
    for (long long b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
        const long long n = (D - b * b) / 4;
        for (long long A = 1; 2 * A <= s + b; ++A) {
            const long long lo = 2 * A + b;
            if (lo * lo <= D) continue;
            const long long hi = 2 * A - b;
            if (hi > 0 && hi * hi >= D) break;
            if (n % A != 0) continue;
            reduced.push_back({A, b, -n / A});
            reduced.push_back({-A, b, n / A});
        }
    }
    std::sort(reduced.begin(), reduced.end());
    std::set<Form> seen;
    std::vector<std::vector<Form>> cycles;
    for (const Form& start : reduced) {
        if (seen.count(start)) continue;
        std::vector<Form> cyc;
        Form cur = start;
        do {
            seen.insert(cur);
            cyc.push_back(cur);
            cur = rho(cur, D, s);
        } while (!(cur == start) && cyc.size() <= reduced.size());
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

long long modular_class_count(long long t) {
    t = std::llabs(t);
    if (t < 3) throw Error(Errc::InvalidArgument, "trace must satisfy |t| >= 3");
    return (long long)reduced_cycles(t * t - 4).size();
}

std::vector<GroupElement> modular_class_reps(long long t) {
    t = std::llabs(t);
    if (t < 3) throw Error(Errc::InvalidArgument, "trace must satisfy |t| >= 3");
    std::vector<GroupElement> out;
    for (const auto& cyc : reduced_cycles(t * t - 4)) {
        const Form& q = cyc.front();
        out.push_back(GroupElement{(t - q.b) / 2, -q.c, q.a, (t + q.b) / 2, 1}.normalized());
    }
    return out;
}

long long power_trace(long long t, int k) {
    long long u0 = 2, u1 = t;
    if (k == 0) return 2;
    for (int j = 1; j < k; ++j) {
        const long long u2 = t * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

std::optional<GroupElement> integral_root(const GroupElement& x0, long long t0, int k) {
    GroupElement x = x0;
    if (x.a + x.d < 0) x = {-x.a, -x.b, -x.c, -x.d, x.e};
    // x = U_{k-1} r - U_{k-2} I for a root r of trace t0
    long long um2 = 0, um1 = 1;
    for (int j = 1; j < k; ++j) {
        const long long u = t0 * um1 - um2;
        um2 = um1;
        um1 = u;
    }
    const long long a = x.a + um2, d = x.d + um2;
    if (a % um1 || d % um1 || x.b % um1 || x.c % um1) return std::nullopt;
    GroupElement r{a / um1, x.b / um1, x.c / um1, d / um1, 1};
    if (r.det() != 1 || r.a + r.d != t0) return std::nullopt;
    return r;
}

namespace {

double norm_of_trace(double t) {
    const double r = (t + std::sqrt((t - 2.0) * (t + 2.0))) / 2.0;
    return r * r;
}

struct PrimitiveRoots {
    // for each trace t: list of (t0, k), k >= 2, with power_trace(t0, k) == t
    std::map<long long, std::vector<std::pair<long long, int>>> roots;
};

PrimitiveRoots power_table(long long tmax) {
    PrimitiveRoots pr;
    for (long long t0 = 3; t0 * t0 - 2 <= tmax; ++t0) {
        for (int k = 2;; ++k) {
            const long long t = power_trace(t0, k);
            if (t > tmax) break;
            pr.roots[t].push_back({t0, k});
        }
    }
    return pr;
}

long long max_trace_for_norm(double x) {
    long long t = 2;
    while (norm_of_trace(double(t + 1)) <= x) ++t;
    return t;
}

void sort_census(std::vector<GeodesicClass>& c) {
    std::sort(c.begin(), c.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
        if (a.trace_sq_scaled != b.trace_sq_scaled) return a.trace_sq_scaled < b.trace_sq_scaled;
        return a.primitive_norm < b.primitive_norm;
    });
}

GeodesicClass make_class(long long t, long long t0, int k, long long mult) {
    GeodesicClass g;
    g.trace_sq_scaled = Rational((i128)t * t, 1);
    g.norm = norm_of_trace(double(t));
    g.length = std::log(g.norm);
    g.primitive = k == 1;
    g.primitive_norm = norm_of_trace(double(t0));
    g.multiplicity = mult;
    g.power = k;
    return g;
}

}  // namespace

std::vector<GeodesicClass> modular_geodesic_census(double x) {
    const double n0 = norm_of_trace(3.0);
    if (!(x >= n0)) throw Error(Errc::CutoffTooSmall, "census cutoff below the shortest geodesic");
    const long long tmax = max_trace_for_norm(x);
    const PrimitiveRoots pr = power_table(tmax);
    std::map<long long, long long> prim;
    std::vector<GeodesicClass> out;
    for (long long t = 3; t <= tmax; ++t) {
        long long p = modular_class_count(t);
        const auto it = pr.roots.find(t);
        if (it != pr.roots.end()) {
            for (const auto& [t0, k] : it->second) {
                p -= prim[t0];
                if (prim[t0] > 0) out.push_back(make_class(t, t0, k, prim[t0]));
            }
        }
        prim[t] = p;
        if (p > 0) out.push_back(make_class(t, t, 1, p));
    }
    sort_census(out);
    return out;
}

namespace {

// P^1(Z/N) as canonical representatives of rows (c : d)
struct ProjectiveLine {
    long long n;
    std::vector<int> index;  // (c * n + d) -> point id or -1
    std::vector<std::pair<long long, long long>> points;

    explicit ProjectiveLine(long long n_) : n(n_), index(n_ * n_, -1) {
        std::vector<long long> units;
        for (long long u = 1; u <= n; ++u)
            if (std::gcd(u, n) == 1) units.push_back(u % n);
        for (long long c = 0; c < n; ++c) {
            for (long long d = 0; d < n; ++d) {
                if (std::gcd(std::gcd(c, d), n) != 1 || index[c * n + d] >= 0) continue;
                const int id = int(points.size());
                points.push_back({c, d});
                for (long long u : units) index[(u * c % n) * n + (u * d % n)] = id;
            }
        }
    }
    int act(int p, const GroupElement& g) const {
        const auto [c, d] = points[p];
        auto md = [&](long long v) { return ((v % n) + n) % n; };
        const long long c2 = md(md(c * md(g.a)) + md(d * md(g.c)));
        const long long d2 = md(md(c * md(g.b)) + md(d * md(g.d)));
        return index[c2 * n + d2];
    }
};

}  // namespace

std::vector<GeodesicClass> geodesic_census(const GroupDescriptor& g, double x) {
    if (g.kind == GroupKind::Modular || (g.kind == GroupKind::Gamma0 && g.level == 1))
        return modular_geodesic_census(x);
    if (g.kind != GroupKind::Gamma0)
        throw Error(Errc::UnsupportedGroup, "geodesic census is available for psl2z and gamma0:N");
    const double n0 = norm_of_trace(3.0);
    if (!(x >= n0)) throw Error(Errc::CutoffTooSmall, "census cutoff below the shortest geodesic");
    const long long tmax = max_trace_for_norm(x);
    const PrimitiveRoots pr = power_table(tmax);
    const ProjectiveLine line(g.level);
    // (trace, primitive trace) -> multiplicity, with the power recorded
    std::map<std::pair<long long, long long>, std::pair<long long, int>> acc;
    for (long long t0 = 3; t0 <= tmax; ++t0) {
        const auto roots = pr.roots.find(t0);
        for (const GroupElement& rep : modular_class_reps(t0)) {
            bool prim = true;
            if (roots != pr.roots.end()) {
                for (const auto& [r, k] : roots->second)
                    if (integral_root(rep, r, k)) {
                        prim = false;
                        break;
                    }
            }
            if (!prim) continue;
            std::vector<char> seen(line.points.size(), 0);
            for (int p = 0; p < int(line.points.size()); ++p) {
                if (seen[p]) continue;
                int len = 0, q = p;
                do {
                    seen[q] = 1;
                    q = line.act(q, rep);
                    ++len;
                } while (q != p);
                const long long tp = power_trace(t0, len);
                if (norm_of_trace(double(t0)) > x || tp > tmax) continue;
                for (int j = 1;; ++j) {
                    const long long tj = power_trace(tp, j);
                    if (tj > tmax) break;
                    auto& slot = acc[{tj, tp}];
                    slot.first += 1;
                    slot.second = j;
                }
            }
        }
    }
    std::vector<GeodesicClass> out;
    for (const auto& [key, val] : acc) out.push_back(make_class(key.first, key.second, val.second, val.first));
    sort_census(out);
    return out;
}

long long primitive_count_at(const std::vector<GeodesicClass>& census, const Rational& trace_sq) {
    long long n = 0;
    for (const auto& c : census)
        if (c.primitive && c.trace_sq_scaled == trace_sq) n += c.multiplicity;
    return n;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MultiplicityResult systole_multiplicity(const GroupDescriptor& g, long long search_bound) {
    MultiplicityResult res;
    switch (g.kind) {
        case GroupKind::AbstractCompact:
            res.count = g.systole_multiplicity;
            res.exact = true;
            return res;
        case GroupKind::Modular:
        case GroupKind::Gamma0: {
            const SystoleResult sys = systole_search(g);
            const auto census = geodesic_census(g, sys.exp_length.to_double() * (1 + 1e-9));
            res.count = int(primitive_count_at(census, sys.trace_sq));
            res.exact = true;
            return res;
        }
        case GroupKind::Gamma0Plus: break;
    }
    // bounded conjugacy search: elements at the systole trace, reduced modulo translation,
    // joined under conjugation by small group elements
    const SystoleResult sys = systole_search(g);
    const long long f = g.level, e = sys.witness.e;
    const long long tr = std::llabs(sys.witness.a + sys.witness.d);
    const long long C = search_bound > 0 ? search_bound : 48;
    std::map<std::tuple<long long, long long, long long>, int> ids;
    std::vector<GroupElement> elems;
    for (long long cp = 1; cp <= C; ++cp) {
        const long long c = f * cp;
        for (long long a = 0; a < c; a += e) {
            for (long long t : {tr, -tr}) {
                const long long d = t - a;
                const i128 num = (i128)a * d - e;
                if (num % c != 0) continue;
                GroupElement x{a, (long long)(num / c), c, d, e};
                ids[{c, a, t}] = int(elems.size());
                elems.push_back(x);
            }
        }
    }
    auto canonical = [&](GroupElement x) -> int {
        x = x.normalized();
        if (x.c <= 0) return -1;
        const long long t = x.a + x.d;
        const long long a = ((x.a % x.c) + x.c) % x.c;
        const auto it = ids.find({x.c, a, t});
        return it == ids.end() ? -1 : it->second;
    };
    const double sf = std::sqrt(double(f));
    const auto conj = enumerate_elements(g, 2.0 * sf, 2.0 * sf + 1.0, 2.0 * sf + 2.0);
    DisjointSets ds(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const GroupElement& h : conj) {
            const int j = canonical(conjugate(h, elems[i]));
            if (j >= 0) ds.unite(int(i), j);
        }
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i].c <= f * std::max<long long>(1, C / 4)) roots.insert(ds.find(int(i)));
    res.count = int(roots.size());
    res.exact = false;
    res.search_bound = C;
    return res;
}

}  // namespace szl
