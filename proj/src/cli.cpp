#include <jetfinsler/berwald_moor.hpp>
#include <jetfinsler/cli.hpp>
#include <jetfinsler/connection_engine.hpp>
#include <jetfinsler/field_theory.hpp>
#include <jetfinsler/linalg.hpp>
#include <jetfinsler/metric_engine.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace jetfinsler::cli {

using json = nlohmann::ordered_json;

namespace {

auto config_error(std::string const& what) -> ConfigError { return ConfigError("scenario: " + what); }

auto slot_name(Slot s) -> std::string
{
    std::string out = s.species == Species::time ? "T" : s.species == Species::spatial ? "S" : "F";
    return out + (s.variance == Variance::up ? "_up" : "_dn");
}

template <typename value_t, Slot... slots> auto to_json(DTensor<value_t, slots...> const& t) -> json
{
    json out;
    out["slots"] = json::array();
    for (auto s : DTensor<value_t, slots...>::signature) out["slots"].push_back(slot_name(s));
    out["values"] = json::array();
    for (auto v : t.data()) out["values"].push_back(v);
    return out;
}

auto to_json(JetPoint const& p) -> json
{
    return json{{"t", p.t}, {"x", {p.x(1), p.x(2), p.x(3)}}, {"y", {p.y(1), p.y(2), p.y(3)}}};
}

auto triple_key(std::array<int, 3> const& k) -> std::string
{
    return std::to_string(k[0]) + std::to_string(k[1]) + std::to_string(k[2]);
}

auto kind_name(ConnectionKind k) -> std::string { return k == ConnectionKind::apriori ? "apriori" : "canonical"; }

auto require_number(json const& j, std::string const& what) -> double
{
    if (!j.is_number()) throw config_error(what + " must be a number");
    auto const v = j.get<double>();
    if (!std::isfinite(v)) throw config_error(what + " must be finite");
    return v;
}

auto parse_range(json const& j, std::string const& what) -> std::array<double, 2>
{
    if (!j.is_array() || j.size() != 2) throw config_error(what + " must be a two-element array");
    std::array<double, 2> r{require_number(j[0], what), require_number(j[1], what)};
    if (r[0] > r[1]) throw config_error(what + " is empty");
    return r;
}

auto parse_vec3(json const& j, std::string const& what) -> Vec3<double>
{
    if (!j.is_array() || j.size() != 3) throw config_error(what + " must be a three-element array");
    return {{require_number(j[0], what), require_number(j[1], what), require_number(j[2], what)}};
}

auto check_keys(json const& j, std::set<std::string> const& allowed, std::string const& where) -> void
{
    if (!j.is_object()) throw config_error(where + " must be an object");
    for (auto const& [key, value] : j.items())
        if (!allowed.contains(key)) throw config_error("unknown key '" + key + "' in " + where);
}

auto parse_sampler(json const& j) -> Sampler
{
    check_keys(j, {"count", "seed", "y_min", "y_max", "t_range", "x_range"}, "sampler");
    Sampler s;
    if (!j.contains("count") || !j["count"].is_number_integer() || j["count"].get<long long>() < 0)
        throw config_error("sampler.count must be a non-negative integer");
    s.count = static_cast<int>(j["count"].get<long long>());
    if (!j.contains("seed") || !j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
        throw config_error("sampler.seed must be a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
    if (!j.contains("y_min") || !j.contains("y_max")) throw config_error("sampler needs y_min and y_max");
    s.y_min = require_number(j["y_min"], "sampler.y_min");
    s.y_max = require_number(j["y_max"], "sampler.y_max");
    if (!(s.y_min > 0.0)) throw config_error("sampler.y_min must be positive");
    if (s.y_max < s.y_min) throw config_error("sampler.y_max must not be below y_min");
    if (j.contains("t_range")) s.t_range = parse_range(j["t_range"], "sampler.t_range");
    if (j.contains("x_range")) s.x_range = parse_range(j["x_range"], "sampler.x_range");
    return s;
}

auto scenario_json(Scenario const& s) -> json
{
    json out;
    out["temporal_metric"] = s.temporal_metric;
    if (s.berwald_moor) out["cubic"] = "berwald_moor";
    else {
        json entries = json::object();
        for (auto const& [k, text] : s.cubic_entries) entries[triple_key(k)] = text;
        out["cubic"] = json{{"entries", entries}};
    }
    out["connection"] = kind_name(s.connection);
    json points      = json::object();
    points["explicit"] = json::array();
    for (auto const& p : s.points) points["explicit"].push_back(to_json(p));
    if (s.sampler) {
        auto const& sm    = *s.sampler;
        points["sampler"] = json{{"count", sm.count},
                                 {"seed", sm.seed},
                                 {"y_min", sm.y_min},
                                 {"y_max", sm.y_max},
                                 {"t_range", {sm.t_range[0], sm.t_range[1]}},
                                 {"x_range", {sm.x_range[0], sm.x_range[1]}}};
    }
    out["points"]            = points;
    out["einstein_constant"] = s.einstein_constant;
    out["tolerances"]        = json{{"ad_rel", s.tolerances.ad_rel},
                                    {"fd_rel", s.tolerances.fd_rel},
                                    {"identity", s.tolerances.identity}};
    out["outputs"]           = s.outputs;
    return out;
}

struct Worst
{
    double deviation{};
    double tolerance{};
};

class Recorder
{
public:
    Recorder(ValidationReport& report, std::map<std::string, Worst>& worst) : report_{report}, worst_{worst} {}

    auto check(json& object, std::string const& name, std::string const& check, double deviation, double tolerance,
               char const* metric) -> void
    {
        bool const pass = deviation <= tolerance;
        object["checks"].push_back(json{{"name", check},
                                        {"metric", metric},
                                        {"deviation", std::isfinite(deviation) ? json(deviation) : json("non-finite")},
                                        {"tolerance", tolerance},
                                        {"pass", pass}});
        ++report_.comparisons;
        if (!pass) {
            ++report_.failures;
            report_.passed = false;
        }
        auto& w = worst_[name + "." + check];
        w.tolerance = tolerance;
        if (!std::isfinite(deviation)) w.deviation = std::numeric_limits<double>::infinity();
        else w.deviation = std::max(w.deviation, deviation);
    }

private:
    ValidationReport& report_;
    std::map<std::string, Worst>& worst_;
};

auto new_object() -> json { return json{{"values", json::object()}, {"checks", json::array()}}; }

auto scaled_floor(double v) -> double { return std::max(1.0, v); }

template <typename tensor_t> auto antisymmetry_deviation(tensor_t const& F) -> double
{
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) worst = std::max(worst, std::abs(F(i, j) + F(j, i)));
    return worst;
}

struct PointContext
{
    Scenario const& scenario;
    CubicForm const& G;
    TemporalMetric const& tm;
    connection::NonlinearConnection const& nlc;
    std::set<std::string> const& wanted;
    Recorder& rec;
};

auto evaluate_point(PointContext const& ctx, JetPoint const& p) -> json
{
    auto const& tol   = ctx.scenario.tolerances;
    auto const kind   = ctx.scenario.connection;
    bool const closed = ctx.scenario.berwald_moor;
    bool const field  = closed && kind == ConnectionKind::apriori;
    auto const K      = ctx.scenario.einstein_constant;
    auto& rec         = ctx.rec;
    if (closed) bm::check_orthant(p.y);

    auto const geo   = connection::evaluate_geometry(ctx.G, ctx.tm, p, ctx.nlc);
    auto const gm    = connection::metric_generic(geo);
    auto const gc    = connection::cartan_generic(geo);
    auto const gt    = connection::torsions_generic(geo);
    auto const gcurv = connection::curvatures_generic(geo, gt);
    auto const gr    = connection::ricci_generic(gcurv);
    auto const gsc   = connection::scalar_curvature_generic(geo, gr);

    json objects = json::object();
    auto wants   = [&](char const* name) { return ctx.wanted.contains(name); };

    // Objects with a generic and, for Berwald-Moor, a closed-form value.
    auto pair_object = [&](char const* name, auto const& generic, auto const* reference) {
        if (!wants(name)) return;
        auto obj                = new_object();
        obj["values"]["generic"] = to_json(generic);
        if (reference != nullptr) {
            obj["values"]["closed"] = to_json(*reference);
            rec.check(obj, name, "closed_form", slot_relative_deviation(generic, *reference), tol.ad_rel,
                      "slot_relative");
        }
        objects[name] = std::move(obj);
    };

    if (wants("metric")) {
        auto obj                 = new_object();
        obj["values"]["generic"] = to_json(gm.first);
        auto const formula = metric::metric_lower_generic(ctx.G, ctx.tm, p, metric::MetricMode::formula);
        obj["values"]["formula"] = to_json(formula);
        rec.check(obj, "metric", "formula", slot_relative_deviation(gm.first, formula), tol.ad_rel, "slot_relative");
        if (closed) {
            auto const cm          = bm::bm_metric(p, ctx.tm);
            obj["values"]["closed"] = to_json(cm.first);
            rec.check(obj, "metric", "closed_form", slot_relative_deviation(gm.first, cm.first), tol.ad_rel,
                      "slot_relative");
        }
        objects["metric"] = std::move(obj);
    }
    if (wants("metric_inverse")) {
        auto obj                 = new_object();
        obj["values"]["generic"] = to_json(gm.second);
        auto const formula       = metric::metric_upper_generic(ctx.G, ctx.tm, p);
        obj["values"]["formula"] = to_json(formula);
        rec.check(obj, "metric_inverse", "formula", slot_relative_deviation(gm.second, formula), tol.ad_rel,
                  "slot_relative");
        if (closed) {
            auto const cm          = bm::bm_metric(p, ctx.tm);
            obj["values"]["closed"] = to_json(cm.second);
            rec.check(obj, "metric_inverse", "closed_form", slot_relative_deviation(gm.second, cm.second), tol.ad_rel,
                      "slot_relative");
        }
        objects["metric_inverse"] = std::move(obj);
    }

    std::optional<CartanConnection> cc;
    std::optional<TorsionSet> ct;
    std::optional<CurvatureSet> ccurv;
    std::optional<RicciSet> cr;
    std::optional<double> csc;
    if (closed) {
        cc    = bm::bm_cartan(p, ctx.tm, kind);
        ct    = bm::bm_torsions(p, ctx.tm, kind);
        ccurv = bm::bm_curvatures(p, ctx.tm, kind);
        cr    = bm::bm_ricci(p, ctx.tm, kind);
        csc   = bm::bm_scalar_curvature(p, ctx.tm, kind);
    }
    auto ref = [&](auto const& opt, auto member) { return opt ? &((*opt).*member) : nullptr; };

    pair_object("G", gc.G, ref(cc, &CartanConnection::G));
    pair_object("L", gc.L, ref(cc, &CartanConnection::L));
    pair_object("C", gc.C, ref(cc, &CartanConnection::C));
    pair_object("P_mixed", gt.P_mixed, ref(ct, &TorsionSet::P_mixed));
    pair_object("P_fiber", gt.P_fiber, ref(ct, &TorsionSet::P_fiber));
    pair_object("R_time", gt.R_time, ref(ct, &TorsionSet::R_time));
    pair_object("R_hh", gcurv.R_hh, ref(ccurv, &CurvatureSet::R_hh));
    pair_object("P_hv", gcurv.P_hv, ref(ccurv, &CurvatureSet::P_hv));
    pair_object("S", gcurv.S_vv, ref(ccurv, &CurvatureSet::S_vv));
    pair_object("ricci_R", gr.R, ref(cr, &RicciSet::R));
    pair_object("ricci_P", gr.P, ref(cr, &RicciSet::P));
    pair_object("ricci_S", gr.S, ref(cr, &RicciSet::S));

    if (wants("scalar_curvature")) {
        auto obj                 = new_object();
        obj["values"]["generic"] = gsc;
        if (csc) {
            obj["values"]["closed"] = *csc;
            rec.check(obj, "scalar_curvature", "closed_form", std::abs(gsc - *csc) / std::abs(*csc), tol.ad_rel,
                      "relative");
        }
        objects["scalar_curvature"] = std::move(obj);
    }

    if (wants("identities")) {
        auto obj      = new_object();
        auto const g  = gm.first;
        auto const gi = gm.second;
        double inv = 0.0, sym = 0.0, cy = 0.0, trace = 0.0, anti = 0.0;
        double const cmax = scaled_floor(max_abs(gc.C));
        double const ymax = std::max({p.y(1), p.y(2), p.y(3)});
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                double gg = 0.0, contracted = 0.0;
                for (int m = 1; m <= 3; ++m) {
                    gg += g(i, m) * gi(m, j);
                    contracted += gc.C(i, j, m) * p.y(m);
                }
                inv = std::max(inv, std::abs(gg - (i == j ? 1.0 : 0.0)));
                cy  = std::max(cy, std::abs(contracted) / (cmax * ymax));
                for (int k = 1; k <= 3; ++k) sym = std::max(sym, std::abs(gc.C(i, j, k) - gc.C(i, k, j)) / cmax);
            }
        auto const smax = scaled_floor(max_abs(gcurv.S_vv));
        for (int l = 1; l <= 3; ++l)
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        anti = std::max(anti, std::abs(gcurv.S_vv(l, i, j, k) + gcurv.S_vv(l, i, k, j)) / smax);
        auto const cubic = metric::contract_cubic(ctx.G, p);
        double euler3 = 0.0, euler2 = 0.0;
        for (int i = 1; i <= 3; ++i) {
            euler3 += cubic.Gi11(i) * p.y(i);
            double row = 0.0;
            for (int j = 1; j <= 3; ++j) row += cubic.Gij1(i, j) * p.y(j);
            euler2 = std::max(euler2, std::abs(row - 2.0 * cubic.Gi11(i)) / scaled_floor(std::abs(cubic.Gi11(i))));
        }
        euler3 = std::abs(euler3 - 3.0 * cubic.G111) / scaled_floor(std::abs(cubic.G111));
        rec.check(obj, "identities", "metric_inverse", inv, tol.identity, "absolute");
        rec.check(obj, "identities", "C_symmetry", sym, tol.identity, "scaled");
        rec.check(obj, "identities", "C_contracted_with_y", cy, tol.identity, "scaled");
        rec.check(obj, "identities", "S_antisymmetry", anti, tol.identity, "scaled");
        rec.check(obj, "identities", "euler_G111", euler3, tol.identity, "scaled");
        rec.check(obj, "identities", "euler_Gi11", euler2, tol.identity, "scaled");
        if (closed) {
            for (int k = 1; k <= 3; ++k) {
                double tr = 0.0;
                for (int i = 1; i <= 3; ++i) tr += gc.C(i, i, k);
                trace = std::max(trace, std::abs(tr) / cmax);
            }
            rec.check(obj, "identities", "C_trace", trace, tol.identity, "scaled");
        }
        objects["identities"] = std::move(obj);
    }

    if (wants("fd_concordance")) {
        auto obj         = new_object();
        auto const up    = metric::metric_upper_generic(ctx.G, ctx.tm, p);
        double const h   = 1e-5;
        DTensor<double, F_up, S_dn, F_dn> C;
        for (int m = 1; m <= 3; ++m) {
            auto plus = p, minus = p;
            plus.y(m) += h;
            minus.y(m) -= h;
            auto const gp = metric::metric_lower_generic(ctx.G, ctx.tm, plus);
            auto const gn = metric::metric_lower_generic(ctx.G, ctx.tm, minus);
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k) C(i, j, k) += 0.5 * up(i, m) * (gp(j, k) - gn(j, k)) / (2.0 * h);
        }
        obj["values"]["finite_difference"] = to_json(C);
        rec.check(obj, "fd_concordance", "C", slot_relative_deviation(C, gc.C), tol.fd_rel, "slot_relative");
        objects["fd_concordance"] = std::move(obj);
    }

    auto skipped = [](char const* why) { return json{{"skipped", why}}; };
    char const* const field_reason = "closed forms require the Berwald-Moor cubic with the a priori connection";

    std::optional<field::EinsteinBlocks> cblocks;
    std::optional<field::EinsteinBlocks> gblocks;
    if (field) {
        cblocks = field::einstein_blocks(p, ctx.tm, K);
        gblocks = field::assemble_einstein(geo.h11, ctx.tm.kappa(p.t), gm.first, gr, gsc, K);
    }

    if (wants("einstein_blocks")) {
        if (!field) objects["einstein_blocks"] = skipped(field_reason);
        else {
            auto obj = new_object();
            auto block_json = [](field::EinsteinBlocks const& b) {
                auto const& o = b.T_mixed_offdiag;
                return json{{"K", b.K},           {"xi11", b.xi11},
                            {"T_11", b.T_11},     {"T_ij", to_json(b.T_ij)},
                            {"T_fiber", to_json(b.T_fiber)},
                            {"T_1i", to_json(o.T_1i)},
                            {"T_i1", to_json(o.T_i1)},
                            {"T_fiber_1", to_json(o.T_fiber_1)},
                            {"T_1_fiber", to_json(o.T_1_fiber)},
                            {"T_i_fiber", to_json(o.T_i_fiber)},
                            {"T_fiber_i", to_json(o.T_fiber_i)}};
            };
            auto const& c = *cblocks;
            auto const& g = *gblocks;
            obj["values"]["generic"] = block_json(g);
            obj["values"]["closed"]  = block_json(c);
            double dev = std::abs(g.T_11 - c.T_11) / std::abs(c.T_11);
            dev        = std::max({dev, slot_relative_deviation(g.T_ij, c.T_ij), slot_relative_deviation(g.T_fiber, c.T_fiber),
                                   slot_relative_deviation(g.T_mixed_offdiag.T_i_fiber, c.T_mixed_offdiag.T_i_fiber),
                                   slot_relative_deviation(g.T_mixed_offdiag.T_fiber_i, c.T_mixed_offdiag.T_fiber_i)});
            rec.check(obj, "einstein_blocks", "closed_form", dev, tol.ad_rel, "slot_relative");
            double sym = 0.0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    sym = std::max(sym, std::abs(c.T_ij(i, j) - c.T_ij(j, i)) / scaled_floor(max_abs(c.T_ij)));
                    sym = std::max(sym, std::abs(c.T_fiber(i, j) - c.T_fiber(j, i)) / scaled_floor(max_abs(c.T_fiber)));
                    sym = std::max(sym, std::abs(c.T_mixed_offdiag.T_i_fiber(i, j) - c.T_mixed_offdiag.T_fiber_i(i, j)));
                }
            rec.check(obj, "einstein_blocks", "block_symmetry", sym, tol.identity, "scaled");
            objects["einstein_blocks"] = std::move(obj);
        }
    }

    if (wants("stress_energy")) {
        if (!field) objects["stress_energy"] = skipped(field_reason);
        else {
            auto obj = new_object();
            auto mixed_json = [](field::StressEnergyMixed const& T) {
                return json{{"T1_1", T.T1_1},
                            {"Tm_1", to_json(T.Tm_1)},
                            {"Tm_11", to_json(T.Tm_11)},
                            {"T1_i", to_json(T.T1_i)},
                            {"Tm_i", to_json(T.Tm_i)},
                            {"Tm_1i", to_json(T.Tm_1i)},
                            {"T1_fiber_i", to_json(T.T1_fiber_i)},
                            {"Tm_fiber_i", to_json(T.Tm_fiber_i)},
                            {"Tmm_fiber_i", to_json(T.Tmm_fiber_i)}};
            };
            auto deviation = [](field::StressEnergyMixed const& a, field::StressEnergyMixed const& r) {
                return std::max({std::abs(a.T1_1 - r.T1_1) / std::abs(r.T1_1), slot_relative_deviation(a.Tm_1, r.Tm_1),
                                 slot_relative_deviation(a.Tm_11, r.Tm_11), slot_relative_deviation(a.T1_i, r.T1_i),
                                 slot_relative_deviation(a.Tm_i, r.Tm_i), slot_relative_deviation(a.Tm_1i, r.Tm_1i),
                                 slot_relative_deviation(a.T1_fiber_i, r.T1_fiber_i),
                                 slot_relative_deviation(a.Tm_fiber_i, r.Tm_fiber_i),
                                 slot_relative_deviation(a.Tmm_fiber_i, r.Tmm_fiber_i)});
            };
            auto const identities  = field::stress_energy_mixed(p, ctx.tm, K);
            auto const contraction = field::raise_blocks(*cblocks, bm::bm_metric(p, ctx.tm).second, geo.h11);
            auto const generic     = field::raise_blocks(*gblocks, gm.second, geo.h11);
            obj["values"]["closed"]      = mixed_json(identities);
            obj["values"]["contraction"] = mixed_json(contraction);
            obj["values"]["generic"]     = mixed_json(generic);
            rec.check(obj, "stress_energy", "contraction", deviation(contraction, identities), tol.ad_rel,
                      "slot_relative");
            rec.check(obj, "stress_energy", "generic", deviation(generic, identities), tol.ad_rel, "slot_relative");
            objects["stress_energy"] = std::move(obj);
        }
    }

    if (wants("conservation")) {
        if (!field) objects["conservation"] = skipped(field_reason);
        else {
            auto obj      = new_object();
            auto const r  = field::conservation_residuals(p, ctx.tm, K);
            obj["values"] = json{{"law1_lhs", r.law1_lhs},
                                 {"law1_rhs", r.law1_rhs},
                                 {"law2_lhs", to_json(r.law2_lhs)},
                                 {"law3_lhs", to_json(r.law3_lhs)}};
            rec.check(obj, "conservation", "law1", r.law1_residual(), tol.ad_rel, "absolute");
            rec.check(obj, "conservation", "law2", max_abs(r.law2_lhs), tol.ad_rel, "absolute");
            rec.check(obj, "conservation", "law3", max_abs(r.law3_lhs), tol.ad_rel, "absolute");
            objects["conservation"] = std::move(obj);
        }
    }

    if (wants("em_two_form")) {
        auto obj = new_object();
        auto em_json = [](field::EMSet const& e) {
            return json{{"F_em", to_json(e.F_em)}, {"D_bar", to_json(e.D_bar)}, {"D", to_json(e.D)},
                        {"d_em", to_json(e.d_em)}, {"F_time", to_json(e.F_time)}, {"F_h", to_json(e.F_h)},
                        {"F_v", to_json(e.F_v)}};
        };
        auto const gen           = field::em_two_form(field::em_inputs(ctx.tm, geo));
        obj["values"]["generic"] = em_json(gen);
        rec.check(obj, "em_two_form", "F_antisymmetry", antisymmetry_deviation(gen.F_em), tol.identity, "absolute");
        if (field) {
            auto const cls          = field::em_two_form(field::em_inputs_closed(ctx.tm, p));
            obj["values"]["closed"] = em_json(cls);
            rec.check(obj, "em_two_form", "F_vanishes_generic", max_abs(gen.F_em), tol.identity, "absolute");
            rec.check(obj, "em_two_form", "F_vanishes_closed", max_abs(cls.F_em), tol.identity, "absolute");
            auto const derivs = std::max({max_abs(gen.F_time), max_abs(gen.F_h), max_abs(gen.F_v), max_abs(cls.F_time),
                                          max_abs(cls.F_h), max_abs(cls.F_v)});
            rec.check(obj, "em_two_form", "F_derivatives_vanish", derivs, tol.ad_rel, "absolute");
            rec.check(obj, "em_two_form", "D_bar", max_abs_diff(gen.D_bar, cls.D_bar), tol.ad_rel, "absolute");
            rec.check(obj, "em_two_form", "D", slot_relative_deviation(gen.D, cls.D), tol.ad_rel, "slot_relative");
            rec.check(obj, "em_two_form", "d_em", slot_relative_deviation(gen.d_em, cls.d_em), tol.ad_rel,
                      "slot_relative");
        }
        objects["em_two_form"] = std::move(obj);
    }
    return objects;
}

} // namespace

auto output_names() -> std::vector<std::string> const&
{
    static std::vector<std::string> const names{
        "metric",  "metric_inverse", "G",       "L",           "C",           "P_mixed",          "P_fiber",
        "R_time",  "R_hh",           "P_hv",    "S",           "ricci_R",     "ricci_P",          "ricci_S",
        "scalar_curvature", "einstein_blocks", "stress_energy", "conservation", "em_two_form", "identities",
        "fd_concordance"};
    return names;
}

auto parse_scenario(std::string_view text) -> Scenario
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (nlohmann::json::exception const& e) {
        throw config_error(std::string("not a valid document: ") + e.what());
    }
    check_keys(doc,
               {"temporal_metric", "cubic", "connection", "points", "einstein_constant", "tolerances", "outputs"},
               "scenario");

    Scenario s;
    if (!doc.contains("temporal_metric") || !doc["temporal_metric"].is_string())
        throw config_error("temporal_metric must be an expression string");
    s.temporal_metric = doc["temporal_metric"].get<std::string>();
    static_cast<void>(TemporalMetric::parse(s.temporal_metric));

    if (doc.contains("cubic")) {
        auto const& c = doc["cubic"];
        if (c.is_string()) {
            if (c.get<std::string>() != "berwald_moor") throw config_error("unknown cubic '" + c.get<std::string>() + "'");
        } else {
            check_keys(c, {"entries"}, "cubic");
            if (!c.contains("entries") || !c["entries"].is_object()) throw config_error("cubic.entries must be an object");
            s.berwald_moor = false;
            std::map<std::array<int, 3>, Expression> parsed;
            for (auto const& [key, value] : c["entries"].items()) {
                if (key.size() != 3 || !std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '1' && ch <= '3'; }))
                    throw config_error("cubic entry key '" + key + "' must be three digits in 1..3");
                if (!value.is_string()) throw config_error("cubic entry '" + key + "' must be an expression string");
                std::array<int, 3> idx{key[0] - '0', key[1] - '0', key[2] - '0'};
                s.cubic_entries[idx] = value.get<std::string>();
                parsed[idx]          = Expression::parse(value.get<std::string>());
            }
            static_cast<void>(CubicForm::from_entries(parsed));
        }
    }

    if (doc.contains("connection")) {
        if (!doc["connection"].is_string()) throw config_error("connection must be a string");
        auto const k = doc["connection"].get<std::string>();
        if (k == "apriori") s.connection = ConnectionKind::apriori;
        else if (k == "canonical") s.connection = ConnectionKind::canonical;
        else throw config_error("connection must be 'apriori' or 'canonical'");
    }

    if (!doc.contains("points")) throw config_error("points are required");
    auto const& pts = doc["points"];
    check_keys(pts, {"explicit", "sampler"}, "points");
    if (pts.contains("explicit")) {
        if (!pts["explicit"].is_array()) throw config_error("points.explicit must be an array");
        for (auto const& e : pts["explicit"]) {
            check_keys(e, {"t", "x", "y"}, "explicit point");
            if (!e.contains("y")) throw config_error("explicit point needs y");
            JetPoint p;
            p.t = e.contains("t") ? require_number(e["t"], "point.t") : 0.0;
            if (e.contains("x")) p.x = parse_vec3(e["x"], "point.x");
            p.y = parse_vec3(e["y"], "point.y");
            s.points.push_back(p);
        }
    }
    if (pts.contains("sampler")) s.sampler = parse_sampler(pts["sampler"]);
    if (s.points.empty() && (!s.sampler || s.sampler->count == 0)) throw config_error("no points to evaluate");

    if (doc.contains("einstein_constant")) {
        s.einstein_constant = require_number(doc["einstein_constant"], "einstein_constant");
        if (s.einstein_constant == 0.0) throw config_error("einstein_constant must be nonzero");
    }

    if (doc.contains("tolerances")) {
        auto const& t = doc["tolerances"];
        check_keys(t, {"ad_rel", "fd_rel", "identity"}, "tolerances");
        auto read = [&](char const* key, double& target) {
            if (!t.contains(key)) return;
            target = require_number(t[key], std::string("tolerances.") + key);
            if (!(target > 0.0)) throw config_error(std::string("tolerances.") + key + " must be positive");
        };
        read("ad_rel", s.tolerances.ad_rel);
        read("fd_rel", s.tolerances.fd_rel);
        read("identity", s.tolerances.identity);
    }

    std::vector<std::string> requested{"all"};
    if (doc.contains("outputs")) {
        if (!doc["outputs"].is_array()) throw config_error("outputs must be an array of names");
        requested.clear();
        for (auto const& o : doc["outputs"]) {
            if (!o.is_string()) throw config_error("outputs must be an array of names");
            requested.push_back(o.get<std::string>());
        }
    }
    auto const& names = output_names();
    for (auto const& name : requested) {
        if (name == "all") {
            s.outputs = names;
            break;
        }
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw config_error("unknown output '" + name + "'");
        if (std::find(s.outputs.begin(), s.outputs.end(), name) == s.outputs.end()) s.outputs.push_back(name);
    }
    return s;
}

auto load_scenario(std::string const& path) -> Scenario
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

auto sample_points(Sampler const& s) -> std::vector<JetPoint>
{
    std::mt19937_64 engine(s.seed);
    auto uniform = [&](double lo, double hi) {
        auto const u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    };
    std::vector<JetPoint> out;
    out.reserve(static_cast<std::size_t>(s.count));
    for (int n = 0; n < s.count; ++n) {
        JetPoint p;
        p.t = uniform(s.t_range[0], s.t_range[1]);
        for (int i = 1; i <= 3; ++i) p.x(i) = uniform(s.x_range[0], s.x_range[1]);
        for (int i = 1; i <= 3; ++i) p.y(i) = uniform(s.y_min, s.y_max);
        out.push_back(p);
    }
    return out;
}

auto generator_description() -> json
{
    return json{{"algorithm", "mt19937_64"},
                {"uniform", "u = (bits >> 11) * 2^-53, value = lo + u * (hi - lo)"},
                {"draw_order", "per point: t, x1, x2, x3, y1, y2, y3"}};
}

auto scenario_points(Scenario const& scenario) -> std::vector<JetPoint>
{
    auto points = scenario.points;
    if (scenario.sampler) {
        auto const sampled = sample_points(*scenario.sampler);
        points.insert(points.end(), sampled.begin(), sampled.end());
    }
    return points;
}

auto run(Scenario const& scenario) -> ValidationReport
{
    auto const start = std::chrono::steady_clock::now();
    auto const tm    = TemporalMetric::parse(scenario.temporal_metric);
    CubicForm G      = CubicForm::berwald_moor();
    if (!scenario.berwald_moor) {
        std::map<std::array<int, 3>, Expression> entries;
        for (auto const& [k, text] : scenario.cubic_entries) entries[k] = Expression::parse(text);
        G = CubicForm::from_entries(entries);
    }
    connection::NonlinearConnection const nlc(scenario.connection);
    std::set<std::string> const wanted(scenario.outputs.begin(), scenario.outputs.end());

    ValidationReport report;
    std::map<std::string, Worst> worst;
    Recorder rec(report, worst);
    PointContext const ctx{scenario, G, tm, nlc, wanted, rec};

    auto generator = generator_description();
    if (scenario.sampler) generator["seed"] = scenario.sampler->seed;

    json points = json::array();
    auto const all = scenario_points(scenario);
    for (std::size_t n = 0; n < all.size(); ++n) {
        json entry{{"index", n}, {"point", to_json(all[n])}};
        try {
            entry["objects"] = evaluate_point(ctx, all[n]);
            entry["status"]  = "ok";
            ++report.points_evaluated;
        } catch (Error const& e) {
            entry["status"] = "skipped";
            entry["error"]  = e.what();
            ++report.points_skipped;
        }
        points.push_back(std::move(entry));
    }

    json worst_json = json::object();
    for (auto const& [name, w] : worst)
        worst_json[name] = json{{"deviation", std::isfinite(w.deviation) ? json(w.deviation) : json("non-finite")},
                                {"tolerance", w.tolerance},
                                {"pass", w.deviation <= w.tolerance}};

    auto& doc               = report.document;
    doc["schema_version"]   = kSchemaVersion;
    doc["generator"]        = generator;
    doc["scenario"]         = scenario_json(scenario);
    doc["points"]           = std::move(points);
    doc["summary"]          = json{{"points_total", all.size()},
                                   {"points_evaluated", report.points_evaluated},
                                   {"points_skipped", report.points_skipped},
                                   {"comparisons", report.comparisons},
                                   {"failures", report.failures},
                                   {"passed", report.passed},
                                   {"worst", worst_json}};
    doc["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto ValidationReport::summary_text() const -> std::string
{
    std::ostringstream out;
    out << "points: " << points_evaluated << " evaluated, " << points_skipped << " skipped\n";
    out << "comparisons: " << comparisons << ", failures: " << failures << "\n";
    if (document.contains("summary"))
        for (auto const& [name, w] : document["summary"]["worst"].items()) {
            out << "  " << (w["pass"].get<bool>() ? "ok   " : "FAIL ") << name << "  worst " << w["deviation"].dump()
                << "  tol " << w["tolerance"].dump() << "\n";
        }
    out << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

auto formula_table() -> std::vector<FormulaEntry> const&
{
    static std::vector<FormulaEntry> const table{
        {"A coefficients", "A^i_jk = (3d^i_j + 3d^i_k + 3d_jk - 9d^i_j d_jk - 2)/9: -2/9 (i=j=k), 1/9 (two equal), -2/9 (distinct)",
         "berwald_moor.hpp bm::a_coefficient"},
        {"metric", "g_ij = (2 - 3d_ij) G_111^(2/3) / (9 y^i y^j)",
         "berwald_moor.hpp bm::metric_lower"},
        {"inverse metric", "g^jk = (2 - 3d^jk) G_111^(-2/3) y^j y^k", "berwald_moor.hpp bm::metric_upper"},
        {"C tensor", "C^i(1)_j(k) = A^i_jk y^i / (y^j y^k)", "berwald_moor.hpp bm::cartan_C"},
        {"Cartan connection", "kappa = h^11 h_11'/2, G^k_j1 = 0, L^i_jk = (kappa/2) C^i(1)_j(k)", "berwald_moor.hpp bm::cartan"},
        {"torsions", "P_mixed = -(kappa/2) C, P_fiber = C, R^(k)_(1)1j = (1/2)(kappa' - kappa^2) d^k_j",
         "berwald_moor.hpp bm::torsions"},
        {"S curvature", "S^l(1)(1)_i(j)(k) by the nine-case table, zero for j = k", "berwald_moor.hpp bm::S_table"},
        {"S curvature bracket", "S^l_i(j)(k) = C^m_ij C^l_mk - C^m_ik C^l_mj", "berwald_moor.hpp bm::S_bracket"},
        {"curvatures", "R^l_ijk = (kappa^2/4) S, P^l(1)_ij(k) = (kappa/2) S", "berwald_moor.hpp bm::curvatures"},
        {"Ricci tensors", "S_(i)(j) = (3d_ij - 1)/(9 y^i y^j), R_ij = (kappa^2/4) S_(i)(j), P_i(j) = (kappa/2) S_(i)(j)",
         "berwald_moor.hpp bm::ricci"},
        {"raised S Ricci", "S^m11_i = G_111^(-2/3) ((1 - 3d^m_i)/3) y^m / y^i", "berwald_moor.hpp bm::S_raised"},
        {"scalar curvature", "Sc = -((4h_11 + kappa^2)/2) G_111^(-2/3)", "berwald_moor.hpp bm::scalar_curvature"},
        {"Einstein blocks", "xi_11 = (4h_11 + kappa^2)/(4K), T_11 = xi_11 G_111^(-2/3) h_11, T_ij = (kappa^2/4K) S_(i)(j) + xi_11 G_111^(-2/3) g_ij",
         "field_theory.hpp field::einstein_blocks"},
        {"mixed stress-energy", "T^m_i = (kappa^2/4K) S^m11_i + xi_11 G_111^(-2/3) d^m_i, T^(m)_(1)i = (h_11 kappa/2K) S^m11_i",
         "field_theory.hpp field::stress_energy_closed"},
        {"conservation law 1", "RHS = ((h^11)^2/16K) h_11' [2h_11'' - (3/h_11) h_11'^2] G_111^(-2/3)",
         "field_theory.cpp field::conservation_residuals"},
        {"electromagnetic form", "F^(1)_(i)j = 0", "field_theory.hpp field::em_two_form"},
    };
    return table;
}

auto print_formula_table() -> std::string
{
    std::ostringstream out;
    auto const& table = formula_table();
    out << "closed forms implemented: " << table.size() << "\n";
    for (std::size_t n = 0; n < table.size(); ++n)
        out << n + 1 << ". " << table[n].operation << "\n   " << table[n].formula << "\n   " << table[n].location << "\n";
    return out.str();
}

} // namespace jetfinsler::cli
