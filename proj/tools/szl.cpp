// szl: command-line front end over the szl library

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "szl/counting.hpp"
#include "szl/predict.hpp"
#include "szl/zeta.hpp"

#ifndef SZL_VERSION
#define SZL_VERSION "0.0.0"
#endif

using namespace szl;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunConfig {
    std::string command;
    std::string group_id = "psl2z";
    double T = 15.0;
    double U = 1.0;
    int k = 1;
    std::string s = "2,0";
    double x = 1e5;
    std::string target;
    std::string law = "nver";
    std::string format = "json";
    bool plot = false;
    std::string plot_file;
    double census_cutoff = 1e5;
    bool census_cutoff_given = false;
    double series_cutoff = 1e4;
    double c_max = 0.0;
    int m0_override = 0;
    double systole = 0.0;
    int systole_mult = 1;
    bool no_cache = false;
    std::string cache_dir;
    double tail_tol = EvalSettings{}.tail_tol;
    double contour_tol = ContourOptions{}.tol;
};

// one reported scalar
struct Row {
    std::string name;
    json value;
    std::string unit;
    std::string provenance;
};

class Report {
public:
    void add(const std::string& name, json v, const std::string& prov, const std::string& unit = "") {
        rows_.push_back({name, std::move(v), unit, prov});
    }
    void add_c(const std::string& name, cplx v, const std::string& prov, const std::string& unit = "") {
        add(name, json{{"re", v.real()}, {"im", v.imag()}}, prov, unit);
    }
    void tail(const std::string& name, double v) { tails_[name] = v; }

    json outputs() const {
        json o = json::object();
        for (const auto& r : rows_) o[r.name] = r.value;
        return o;
    }
    const std::vector<Row>& rows() const { return rows_; }
    const json& tails() const { return tails_; }

private:
    std::vector<Row> rows_;
    json tails_ = json::object();
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void csv_rows(std::ostream& os, const std::string& name, const json& v, const Row& r) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) csv_rows(os, name + "." + it.key(), it.value(), r);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) csv_rows(os, name + "[" + std::to_string(i) + "]", v[i], r);
    } else {
        const std::string text = v.is_string() ? v.get<std::string>() : v.is_number_float() ? fmt(v.get<double>()) : v.dump();
        os << csv_field(name) << ',' << csv_field(text) << ',' << csv_field(r.unit) << ',' << csv_field(r.provenance)
           << '\n';
    }
}

cplx parse_point(const std::string& text) {
    std::stringstream ss(text);
    std::string re, im;
    std::getline(ss, re, ',');
    std::getline(ss, im);
    try {
        std::size_t used = 0;
        const double r = std::stod(re, &used);
        if (used != re.size()) throw std::invalid_argument(text);
        const double i = im.empty() ? 0.0 : std::stod(im);
        return {r, i};
    } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, "--s expects <re>,<im>: " + text);
    }
}

// ---------------------------------------------------------------- census cache

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

i128 parse_i128(const std::string& s) {
    i128 v = 0;
    std::size_t i = 0;
    const bool neg = !s.empty() && s[0] == '-';
    if (neg) i = 1;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error(Errc::InvalidArgument, "corrupt cache entry");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

fs::path cache_root(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "szl";
    if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "szl";
    return fs::temp_directory_path() / "szl-cache";
}

std::string census_key(const GroupDescriptor& g, double cutoff) {
    return "census|" + std::string(kind_name(g.kind)) + "|" + std::to_string(g.level) + "|" + fmt(cutoff) + "|" +
           SZL_VERSION;
}

std::optional<std::vector<GeodesicClass>> load_census(const fs::path& p, const std::string& key) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != key) return std::nullopt;
    std::vector<GeodesicClass> out;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string num, den;
        GeodesicClass c;
        int prim = 0;
        if (!(ls >> num >> den >> c.norm >> c.length >> prim >> c.primitive_norm >> c.multiplicity >> c.power))
            return std::nullopt;
        c.trace_sq_scaled = Rational(parse_i128(num), parse_i128(den));
        c.primitive = prim != 0;
        out.push_back(c);
    }
    return out;
}

void store_census(const fs::path& p, const std::string& key, const std::vector<GeodesicClass>& census) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) return;
    const fs::path tmp = p.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << key << '\n';
        for (const auto& c : census)
            out << i128_str(c.trace_sq_scaled.num()) << ' ' << i128_str(c.trace_sq_scaled.den()) << ' '
                << fmt(c.norm) << ' ' << fmt(c.length) << ' ' << (c.primitive ? 1 : 0) << ' '
                << fmt(c.primitive_norm) << ' ' << c.multiplicity << ' ' << c.power << '\n';
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, p, ec);
    if (ec) fs::remove(tmp, ec);
}

// ---------------------------------------------------------------- context

struct Session {
    RunConfig cfg;
    GroupDescriptor group;
    ContextOptions opt;
    ZetaContext ctx;
    std::string cache_state = "unused";
};

bool census_supported(const GroupDescriptor& g) {
    return g.kind == GroupKind::Modular || g.kind == GroupKind::Gamma0;
}

void load_group(Session& ss) {
    const RunConfig& cfg = ss.cfg;
    ss.group = parse_group(cfg.group_id);
    if (ss.group.kind == GroupKind::AbstractCompact) {
        if (!(cfg.systole > 0))
            throw Error(Errc::InvalidArgument, "compact surfaces need --systole <length>");
        ss.group.systole_length = cfg.systole;
        ss.group.systole_multiplicity = cfg.systole_mult;
    }
    ss.opt.census_cutoff = cfg.census_cutoff;
    ss.opt.decompose.c_max = cfg.c_max;
    ss.opt.decompose.b_qmax = cfg.series_cutoff;
    if (cfg.m0_override > 0) ss.opt.invariants.m0_override = cfg.m0_override;
    ss.opt.settings.tail_tol = cfg.tail_tol;
    ss.opt.settings.validate();

    ZetaContext& ctx = ss.ctx;
    ctx.group = ss.group;
    ctx.settings = ss.opt.settings;
    if (ss.group.kind != GroupKind::AbstractCompact) ctx.scat = decompose(ss.group, ss.opt.decompose);
    ctx.inv = invariants(ss.group, ctx.scat ? &*ctx.scat : nullptr, ss.opt.invariants);
}

void load_census(Session& ss) {
    ZetaContext& ctx = ss.ctx;
    if (!census_supported(ss.group)) throw Error(Errc::UnsupportedGroup, "no geodesic census for " + ss.group.id);
    const double cutoff = ss.opt.census_cutoff;
    if (!(cutoff > ctx.inv.exp_systole)) throw Error(Errc::CutoffTooSmall, "census cutoff below the systole norm");
    const std::string key = census_key(ss.group, cutoff);
    const fs::path path = cache_root(ss.cfg) / (std::to_string(fnv1a(key)) + ".census");
    std::optional<std::vector<GeodesicClass>> census;
    if (!ss.cfg.no_cache) census = load_census(path, key);
    if (census) {
        ss.cache_state = "hit";
    } else {
        census = geodesic_census(ss.group, cutoff);
        if (ss.cfg.no_cache) {
            ss.cache_state = "bypassed";
        } else {
            store_census(path, key, *census);
            ss.cache_state = "miss";
        }
    }
    ctx.has_census = true;
    ctx.census_cutoff = cutoff;
    ctx.census = std::move(*census);
    attach_series(ctx);
}

// ---------------------------------------------------------------- plots

struct Curve {
    std::string label;
    std::vector<double> xs, ys;
    std::string color;
};

void write_svg(const std::string& path, const std::string& title, const std::string& xlabel,
               const std::vector<Curve>& curves) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.xs.size(); ++i) {
            if (!std::isfinite(c.ys[i])) continue;
            x0 = std::min(x0, c.xs[i]);
            x1 = std::max(x1, c.xs[i]);
            y0 = std::min(y0, c.ys[i]);
            y1 = std::max(y1, c.ys[i]);
        }
    if (!(x1 > x0)) x1 = x0 + 1;
    if (!(y1 > y0)) y1 = y0 + 1;
    const double W = 640, H = 400, L = 70, R = 20, Tm = 40, B = 50;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - Tm - B); };
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write plot " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n"
        << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << L << "\" y1=\"" << Tm << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    char buf[64];
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
        std::snprintf(buf, sizeof buf, "%.4g", xv);
        out << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.4g", yv);
        out << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << buf << "</text>\n";
    }
    out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << xlabel
        << "</text>\n";
    int slot = 0;
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.xs.size(); ++i)
            if (std::isfinite(c.ys[i])) out << px(c.xs[i]) << ',' << py(c.ys[i]) << ' ';
        out << "\"/>\n";
        const double ly = Tm + 14 + 16 * slot++;
        out << "<line x1=\"" << L + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << L + 30 << "\" y2=\"" << ly - 4
            << "\" stroke=\"" << c.color << "\"/>\n"
            << "<text x=\"" << L + 36 << "\" y=\"" << ly << "\">" << c.label << "</text>\n";
    }
    out << "</svg>\n";
}

std::string plot_path(const RunConfig& cfg) {
    return cfg.plot_file.empty() ? "szl_" + cfg.command + ".svg" : cfg.plot_file;
}

// ---------------------------------------------------------------- commands

json expansion_json(const AsymptoticExpansion& e) {
    return {{"T2", e.coeff_T2}, {"TlogT", e.coeff_TlogT}, {"T", e.coeff_T}, {"error_class", error_class_name(e.error_class)}};
}

void cmd_group_info(Session& ss, Report& rep) {
    const GroupDescriptor& g = ss.group;
    const SurfaceInvariants& inv = ss.ctx.inv;
    json sig = {{"genus", g.signature.genus}, {"elliptic_orders", g.signature.elliptic_orders},
                {"cusps", g.signature.cusps}};
    rep.add("kind", kind_name(g.kind), "exact");
    rep.add("signature", sig, "exact");
    rep.add("volume", inv.volume, "exact");
    rep.add("n1", inv.n1, "exact");
    rep.add("systole_length", inv.systole_length, inv.systole ? "exact" : "input");
    if (inv.systole) {
        const auto& s = *inv.systole;
        rep.add("tau0", s.trace, "exact");
        rep.add("tau0_sq", s.trace_sq.str(), "exact");
        rep.add("exp_systole", s.exp_length.str(), "exact");
        rep.add("systole_witness", json{{"a", s.witness.a}, {"b", s.witness.b}, {"c", s.witness.c}, {"d", s.witness.d},
                                       {"scale", s.witness.e}},
                "exact");
    }
    rep.add("exp_systole_value", inv.exp_systole, "exact");
    rep.add("m0", inv.m0, inv.m0_exact ? "exact" : "search");
    if (ss.ctx.scat) {
        const auto& sd = *ss.ctx.scat;
        rep.add("g1", sd.g1(), sd.from_closed_form ? "closed-form" : "series");
        rep.add("g2", sd.ladder[1].g, sd.from_closed_form ? "closed-form" : "series");
        rep.add("g_ratio_sq", sd.g_ratio_sq.str(), "exact");
        rep.add("d1", sd.d1(), sd.from_closed_form ? "closed-form" : "series");
        rep.add("b2", b2_constant(sd), "closed-form");
    }
    rep.add("trichotomy", trichotomy_name(inv.trichotomy), "exact");
    rep.add("A", inv.A, "exact");
    rep.add("a", inv.a, "closed-form");
    for (int k = 1; k <= 4; ++k) rep.add("a_" + std::to_string(k), inv.a_k(k), "closed-form");
}

void cmd_eval(Session& ss, Report& rep) {
    const RunConfig& cfg = ss.cfg;
    const cplx s = parse_point(cfg.s);
    ZetaContext& ctx = ss.ctx;
    const std::string& t = cfg.target;
    auto need_scat = [&] {
        if (!ctx.scat) throw Error(Errc::UnsupportedGroup, "compact surfaces have no scattering");
        return *ctx.scat;
    };
    if (t == "phi") {
        if (ss.group.kind == GroupKind::Modular || ss.group.kind == GroupKind::Gamma0 ||
            (ss.group.kind == GroupKind::Gamma0Plus && ss.group.level == 5)) {
            rep.add_c("phi", phi_closed_form(ss.group, s, ctx.settings), "closed-form");
        } else {
            const auto& sd = need_scat();
            const SeriesValue h = evaluate(sd.H, s, ctx.settings);
            rep.add_c("phi", k_factor(sd, s, ctx.settings) * h.value, "series");
            rep.tail("H", h.tail);
        }
    } else if (t == "K") {
        rep.add_c("K", k_factor(need_scat(), s, ctx.settings), "closed-form");
    } else if (t == "H") {
        const SeriesValue h = evaluate(need_scat().H, s, ctx.settings);
        rep.add_c("H", h.value, "series");
        rep.tail("H", h.tail);
    } else if (t == "Z") {
        load_census(ss);
        const Estimate lz = selberg_log_z(ctx, s);
        rep.add_c("log_Z", lz.value, "census");
        rep.add_c("Z", std::exp(lz.value), "census");
        rep.tail("log_Z", lz.error);
    } else if (t == "D") {
        load_census(ss);
        const Estimate d = d_m(ctx, s);
        rep.add_c("D", d.value, "census");
        rep.tail("D", d.error);
    } else if (t == "zh_deriv") {
        load_census(ss);
        const Estimate v = zh_and_derivatives(ctx, cfg.k, s);
        rep.add_c("zh_deriv", v.value, "census");
        rep.tail("zh_deriv", v.error);
    } else if (t == "x_mk") {
        load_census(ss);
        const Estimate v = x_mk(ctx, cfg.k, s);
        rep.add_c("x_mk", v.value, "census");
        rep.add("abs_x_mk_minus_1", std::abs(v.value - 1.0), "census");
        rep.tail("x_mk", v.error);
    } else if (t == "eta_logderiv") {
        rep.add_c("eta_logderiv", eta_logderiv(ctx, s), "closed-form");
    } else if (t == "f") {
        rep.add_c("f", f_m(ctx, s), "closed-form");
        rep.add_c("f_logderiv", f_logderiv(ctx, s), "closed-form");
    } else {
        throw Error(Errc::InvalidArgument, "unknown eval target: " + t);
    }
}

cplx test_function(cplx z) {
    // zeros at 0.25+3i and 0.75+7i, pole at 0.5+5i
    return (z - cplx(0.25, 3)) * (z - cplx(0.75, 7)) / (z - cplx(0.5, 5));
}

json contour_json(const ContourResult& c, const Rectangle& r) {
    return {{"rectangle", {r.x1, r.x2, r.y1, r.y2}},
            {"net_count", c.net_count},
            {"horizontal_moment", c.horizontal_moment},
            {"winding_residual", c.residual},
            {"mesh_points", c.mesh_points}};
}

void cmd_count(Session& ss, Report& rep) {
    const RunConfig& cfg = ss.cfg;
    ContourOptions copt;
    copt.tol = cfg.contour_tol;
    const std::string t = cfg.target.empty() ? "H" : cfg.target;
    if (t == "H") {
        const HCount h = h_zero_count(ss.ctx, cfg.T, copt);
        const auto pred = predict_hejhal_h(ss.ctx.inv);
        rep.add("n_ver", h.n_ver, "contour");
        rep.add("n_hor", h.n_hor, "contour");
        rep.add("T_used", h.T, "contour");
        rep.add("poles_inside", h.poles_inside, "oracle");
        rep.add("contour", contour_json(h.contour, h.rect), "contour");
        rep.add("hejhal_prediction", pred(h.T), "predictor");
        rep.add("hejhal_relative_difference", std::abs(h.n_hor - pred(h.T)) / std::abs(pred(h.T)), "predictor");
        rep.tail("winding_residual", h.contour.residual);
        if (cfg.plot) {
            Curve counted{"counted N_hor(T; H)", {}, {}, "#1f77b4"}, law{"predicted", {}, {}, "#d62728"};
            for (int i = 1; i <= 12; ++i) {
                const double Ti = std::max(1.0, h.T * i / 12.0);
                counted.xs.push_back(Ti);
                counted.ys.push_back(h_zero_count(ss.ctx, Ti, copt).n_hor);
                law.xs.push_back(Ti);
                law.ys.push_back(pred(Ti));
            }
            write_svg(plot_path(cfg), "Horizontal count of zeros of H: " + ss.group.id, "T", {counted, law});
        }
    } else if (t == "riemann_zeta") {
        const Rectangle r{-1.0, 2.0, 1.0, cfg.T};
        const auto c = littlewood_count([&](cplx s) { return riemann_zeta(s, ss.ctx.settings).value; }, r, copt);
        const auto heights = zeta_zero_heights(cfg.T, 0.05, ss.ctx.settings);
        rep.add("n_ver", c.net_count, "contour");
        rep.add("n_hor", c.horizontal_moment, "contour");
        rep.add("contour", contour_json(c, r), "contour");
        rep.add("sign_change_count", heights.size(), "oracle");
        rep.add("zero_heights", heights, "oracle");
        rep.tail("winding_residual", c.residual);
        if (cfg.plot) {
            Curve counted{"zeros found", {}, {}, "#1f77b4"}, law{"Riemann-von Mangoldt", {}, {}, "#d62728"};
            for (int i = 1; i <= 200; ++i) {
                const double Ti = cfg.T * i / 200.0;
                counted.xs.push_back(Ti);
                counted.ys.push_back(double(std::count_if(heights.begin(), heights.end(), [&](double h) { return h <= Ti; })));
                law.xs.push_back(Ti);
                law.ys.push_back(Ti / (2 * kPi) * std::log(Ti / (2 * kPi * std::numbers::e)) + 7.0 / 8.0);
            }
            write_svg(plot_path(cfg), "Zeros of the Riemann zeta function", "T", {counted, law});
        }
    } else if (t == "test") {
        const Rectangle r{0.0, 1.0, 1.0, cfg.T};
        const auto c = littlewood_count(test_function, r, copt);
        long expect = 0;
        double moment = 0.0;
        for (auto [z, w] : {std::pair{cplx(0.25, 3), 1}, {cplx(0.75, 7), 1}, {cplx(0.5, 5), -1}})
            if (z.imag() < cfg.T) {
                expect += w;
                moment += w * z.real();
            }
        rep.add("n_ver", c.net_count, "contour");
        rep.add("n_hor", c.horizontal_moment, "contour");
        rep.add("contour", contour_json(c, r), "contour");
        rep.add("expected_net_count", expect, "exact");
        rep.add("expected_moment", moment, "exact");
        rep.tail("winding_residual", c.residual);
    } else {
        throw Error(Errc::InvalidArgument, "unknown count target: " + t);
    }
}

void cmd_predict(Session& ss, Report& rep) {
    const RunConfig& cfg = ss.cfg;
    const SurfaceInvariants& inv = ss.ctx.inv;
    const std::string& law = cfg.law;
    std::optional<AsymptoticExpansion> e;
    if (law == "nver") e = predict_nver_deriv(inv, cfg.k);
    else if (law == "nhor") e = predict_nhor_deriv(inv, cfg.k);
    else if (law == "weyl") e = predict_weyl(inv);
    else if (law == "weyl_new") {
        e = predict_weyl_new(inv);
        rep.add("discrepancy", weyl_discrepancy(inv), "predictor");
    } else if (law == "hejhal_h") e = predict_hejhal_h(inv);
    else if (law == "comparison") {
        const Residual r = comparison_residual(inv, cfg.k);
        rep.add("res_TlogT", r.res_TlogT, "predictor");
        rep.add("res_T", r.res_T, "predictor");
    } else if (law == "short_sum") {
        rep.add("short_sum", short_sum(inv, cfg.T, cfg.U), "predictor");
    } else if (law == "ratio") {
        rep.add("ratio", ratio_vanishing(inv, cfg.k, cfg.T), "predictor");
    } else {
        throw Error(Errc::InvalidArgument, "unknown law: " + law);
    }
    if (e) {
        rep.add("expansion", expansion_json(*e), "predictor");
        rep.add("value", (*e)(cfg.T), "predictor");
        if (cfg.plot) {
            Curve c{law, {}, {}, "#1f77b4"};
            for (int i = 1; i <= 200; ++i) {
                const double Ti = 1.0 + (cfg.T - 1.0) * i / 200.0;
                c.xs.push_back(Ti);
                c.ys.push_back((*e)(Ti));
            }
            write_svg(plot_path(cfg), "Predicted count (" + law + "): " + ss.group.id, "T", {c});
        }
    }
}

void cmd_psi(Session& ss, Report& rep) {
    const RunConfig& cfg = ss.cfg;
    if (!cfg.census_cutoff_given) ss.opt.census_cutoff = std::max(ss.opt.census_cutoff, cfg.x);
    load_census(ss);
    const ZetaContext& ctx = ss.ctx;
    const double psi = psi_m(ctx, cfg.x);
    long long prim = 0, classes = 0;
    for (const auto& c : ctx.census) {
        if (c.norm > cfg.x) break;
        classes += c.multiplicity;
        if (c.primitive) prim += c.multiplicity;
    }
    rep.add("psi", psi, "census");
    rep.add("psi_over_x", psi / cfg.x, "census");
    rep.add("classes_up_to_x", classes, "census");
    rep.add("primitive_classes_up_to_x", prim, "census");
    rep.add("census_entries", ctx.census.size(), "census");
    rep.add("min_norm", ctx.census.empty() ? 0.0 : ctx.census.front().norm, "census");
    if (cfg.plot) {
        Curve c{"psi(x)/x", {}, {}, "#1f77b4"}, one{"1", {}, {}, "#999999"};
        double acc = 0.0;
        const double lo = std::log(ctx.census.empty() ? 2.0 : ctx.census.front().norm), hi = std::log(cfg.x);
        std::size_t idx = 0;
        for (int i = 0; i <= 300; ++i) {
            const double xi = std::exp(lo + (hi - lo) * i / 300.0);
            while (idx < ctx.census.size() && ctx.census[idx].norm <= xi) {
                acc += double(ctx.census[idx].multiplicity) * mangoldt(ctx.census[idx]);
                ++idx;
            }
            c.xs.push_back(std::log10(xi));
            c.ys.push_back(acc / xi);
            one.xs.push_back(std::log10(xi));
            one.ys.push_back(1.0);
        }
        write_svg(plot_path(cfg), "Prime geodesic counting: " + ss.group.id, "log10 x", {c, one});
    }
}

json inputs_json(const RunConfig& cfg) {
    json in = {{"group", cfg.group_id}};
    if (cfg.command == "eval") in.update({{"target", cfg.target}, {"s", cfg.s}, {"k", cfg.k}});
    if (cfg.command == "count") in.update({{"target", cfg.target.empty() ? "H" : cfg.target}, {"T", cfg.T}});
    if (cfg.command == "predict") in.update({{"law", cfg.law}, {"T", cfg.T}, {"k", cfg.k}, {"U", cfg.U}});
    if (cfg.command == "psi") in.update({{"x", cfg.x}});
    if (cfg.systole > 0) in.update({{"systole", cfg.systole}, {"systole_multiplicity", cfg.systole_mult}});
    if (cfg.m0_override > 0) in["m0_override"] = cfg.m0_override;
    return in;
}

json diagnostics_json(const Session& ss, const Report& rep) {
    const auto& st = ss.ctx.settings;
    json cut = {{"census", ss.ctx.has_census ? ss.ctx.census_cutoff : ss.opt.census_cutoff},
                {"series", ss.ctx.has_census ? ss.ctx.series_cutoff : ss.opt.decompose.b_qmax},
                {"c_max", ss.opt.decompose.c_max},
                {"h_qmax", ss.opt.decompose.h_qmax}};
    json tol = {{"tail_tol", st.tail_tol},
                {"target_rel_tol", st.target_rel_tol},
                {"cauchy_radius", st.cauchy_radius},
                {"contour_tol", ss.cfg.contour_tol}};
    json d = {{"cutoffs", cut}, {"tolerances", tol}, {"tail_estimates", rep.tails()}, {"census_cache", ss.cache_state}};
    if (ss.cfg.plot) d["plot"] = plot_path(ss.cfg);
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"szl: Selberg zeta functions and scattering determinants of hyperbolic surfaces"};
    app.set_config("--config", "", "key = value defaults; command-line flags override");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", SZL_VERSION);

    app.add_option("--group", cfg.group_id, "psl2z, gamma0:N, gamma0plus:5|6, compact:g[:m1,m2,...]");
    app.add_option("--T", cfg.T, "height");
    app.add_option("--U", cfg.U, "short-sum window");
    app.add_option("--k", cfg.k, "derivative order")->check(CLI::PositiveNumber);
    app.add_option("--s", cfg.s, "evaluation point <re>,<im>");
    app.add_option("--x", cfg.x, "prime geodesic bound")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--plot", cfg.plot, "write an SVG plot");
    app.add_option("--plot-file", cfg.plot_file, "plot path (default szl_<command>.svg)");
    auto* cc = app.add_option("--census-cutoff", cfg.census_cutoff, "largest geodesic norm")->check(CLI::PositiveNumber);
    app.add_option("--series-cutoff", cfg.series_cutoff, "frequency cutoff of H'/H")->check(CLI::PositiveNumber);
    app.add_option("--c-max", cfg.c_max, "largest c in the S(c) series (0: automatic)")->check(CLI::NonNegativeNumber);
    app.add_option("--m0-override", cfg.m0_override, "systole multiplicity")->check(CLI::PositiveNumber);
    app.add_option("--systole", cfg.systole, "systole length of a compact surface")->check(CLI::PositiveNumber);
    app.add_option("--systole-multiplicity", cfg.systole_mult)->check(CLI::PositiveNumber);
    app.add_option("--tail-tol", cfg.tail_tol, "tolerated truncation error")->check(CLI::PositiveNumber);
    app.add_option("--contour-tol", cfg.contour_tol)->check(CLI::PositiveNumber);
    app.add_flag("--no-cache", cfg.no_cache, "ignore and do not write the census cache");
    app.add_option("--cache-dir", cfg.cache_dir);

    auto* info = app.add_subcommand("group-info", "signature, systole, scattering ladder and trichotomy");
    auto* eval = app.add_subcommand("eval", "evaluate one function at --s");
    eval->add_option("--target", cfg.target)
        ->required()
        ->check(CLI::IsMember({"phi", "K", "H", "Z", "D", "zh_deriv", "x_mk", "eta_logderiv", "f"}));
    auto* count = app.add_subcommand("count", "count zeros in a rectangle by the argument principle");
    count->add_option("--target", cfg.target)->check(CLI::IsMember({"H", "riemann_zeta", "test"}));
    auto* predict = app.add_subcommand("predict", "asymptotic counting laws");
    predict->add_option("--law", cfg.law)
        ->check(CLI::IsMember({"nver", "nhor", "weyl", "weyl_new", "hejhal_h", "comparison", "short_sum", "ratio"}));
    auto* psi = app.add_subcommand("psi", "prime geodesic counting function");

    CLI11_PARSE(app, argc, argv);
    cfg.census_cutoff_given = cc->count() > 0;
    for (auto* sc : {info, eval, count, predict, psi})
        if (sc->parsed()) cfg.command = sc->get_name();

    Session ss;
    ss.cfg = cfg;
    Report rep;
    try {
        load_group(ss);
        if (cfg.command == "group-info") cmd_group_info(ss, rep);
        else if (cfg.command == "eval") cmd_eval(ss, rep);
        else if (cfg.command == "count") cmd_count(ss, rep);
        else if (cfg.command == "predict") cmd_predict(ss, rep);
        else cmd_psi(ss, rep);
    } catch (const Error& e) {
        json err = {{"command", cfg.command}, {"group", cfg.group_id}, {"error", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump(2) << '\n';
        return 2;
    }

    if (cfg.format == "csv") {
        std::cout << "name,value,unit,provenance\n";
        for (const auto& r : rep.rows()) csv_rows(std::cout, r.name, r.value, r);
    } else {
        json out = {{"command", cfg.command},
                    {"group", cfg.group_id},
                    {"inputs", inputs_json(cfg)},
                    {"outputs", rep.outputs()},
                    {"diagnostics", diagnostics_json(ss, rep)},
                    {"version", SZL_VERSION}};
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}
