// Acceptance checks, one PASS/FAIL line per criterion. Exit status is nonzero
// iff any criterion fails.

#include <jetfinsler/berwald_moor.hpp>
#include <jetfinsler/cli.hpp>
#include <jetfinsler/connection_engine.hpp>
#include <jetfinsler/field_theory.hpp>
#include <jetfinsler/metric_engine.hpp>

#include "support/field_corpus.hpp"
#include "support/finite_difference.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jetfinsler;
using connection::NonlinearConnection;

struct Outcome
{
    bool pass;
    std::string detail;
};

auto fmt(double v) -> std::string
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

auto metric_texts() -> std::vector<char const*> { return {"1", "exp(2*t)", "t^2 + 1"}; }

/// 100 seeded points per metric, y in [0.2, 5]^3, t in [-1, 1].
auto grid_points() -> std::vector<JetPoint>
{
    cli::Sampler const s{100, 20240601, 0.2, 5.0, {-1.0, 1.0}, {-1.0, 1.0}};
    return cli::sample_points(s);
}

auto floor1(double v) -> double { return std::max(1.0, std::abs(v)); }

auto cross_engine() -> Outcome
{
    auto const start = std::chrono::steady_clock::now();
    auto const bm    = CubicForm::berwald_moor();
    auto const nlc   = NonlinearConnection::apriori();
    auto const pts   = grid_points();
    double worst     = 0.0;
    for (auto const* text : metric_texts()) {
        auto const tm = TemporalMetric::parse(text);
        for (auto const& p : pts) {
            auto const geo   = connection::evaluate_geometry(bm, tm, p, nlc);
            auto const gm    = connection::metric_generic(geo);
            auto const cm    = bm::bm_metric(p, tm);
            auto const gc    = connection::cartan_generic(geo);
            auto const cc    = bm::bm_cartan(p, tm);
            auto const gt    = connection::torsions_generic(geo);
            auto const ct    = bm::bm_torsions(p, tm);
            auto const gcurv = connection::curvatures_generic(geo, gt);
            auto const ccurv = bm::bm_curvatures(p, tm);
            auto const gr    = connection::ricci_generic(gcurv);
            auto const cr    = bm::bm_ricci(p, tm);
            auto const gsc   = connection::scalar_curvature_generic(geo, gr);
            auto const csc   = bm::bm_scalar_curvature(p, tm);
            worst = std::max({worst, slot_relative_deviation(gm.first, cm.first),
                              slot_relative_deviation(gm.second, cm.second), slot_relative_deviation(gc.C, cc.C),
                              slot_relative_deviation(gc.L, cc.L), slot_relative_deviation(gc.G, cc.G),
                              slot_relative_deviation(gt.P_mixed, ct.P_mixed),
                              slot_relative_deviation(gt.P_fiber, ct.P_fiber),
                              slot_relative_deviation(gt.R_time, ct.R_time),
                              slot_relative_deviation(gcurv.R_hh, ccurv.R_hh),
                              slot_relative_deviation(gcurv.P_hv, ccurv.P_hv),
                              slot_relative_deviation(gcurv.S_vv, ccurv.S_vv), slot_relative_deviation(gr.R, cr.R),
                              slot_relative_deviation(gr.P, cr.P), slot_relative_deviation(gr.S, cr.S),
                              std::abs(gsc - csc) / std::abs(csc)});
        }
    }
    auto const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-9 && seconds <= 60.0,
            "worst relative error " + fmt(worst) + " (tol 1e-9), " + fmt(seconds) + " s (limit 60 s)"};
}

auto identity_suite() -> Outcome
{
    auto const bm  = CubicForm::berwald_moor();
    auto const nlc = NonlinearConnection::apriori();
    auto const tm  = TemporalMetric::parse("exp(2*t)");
    double euler = 0.0, inverse = 0.0, csym = 0.0, cy = 0.0, ctrace = 0.0, santi = 0.0, sdiag = 0.0, sc = 0.0;
    double divergence = 0.0;
    for (auto const& p : grid_points()) {
        auto const cubic = metric::contract_cubic(bm, p);
        double e3 = 0.0;
        for (int i = 1; i <= 3; ++i) {
            e3 += cubic.Gi11(i) * p.y(i);
            double row = 0.0;
            for (int j = 1; j <= 3; ++j) row += cubic.Gij1(i, j) * p.y(j);
            euler = std::max(euler, std::abs(row - 2.0 * cubic.Gi11(i)) / floor1(cubic.Gi11(i)));
        }
        euler = std::max(euler, std::abs(e3 - 3.0 * cubic.G111) / floor1(cubic.G111));

        auto const geo  = connection::evaluate_geometry(bm, tm, p, nlc);
        auto const gm   = connection::metric_generic(geo);
        auto const C    = connection::cartan_generic(geo).C;
        auto const S    = connection::curvatures_generic(geo).S_vv;
        auto const cmax = std::max(1.0, max_abs(C));
        auto const smax = std::max(1.0, max_abs(S));
        auto const ymax = std::max({p.y(1), p.y(2), p.y(3)});
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                double gg = 0.0, contracted = 0.0;
                for (int m = 1; m <= 3; ++m) {
                    gg += gm.first(i, m) * gm.second(m, j);
                    contracted += C(i, j, m) * p.y(m);
                }
                inverse = std::max(inverse, std::abs(gg - (i == j ? 1.0 : 0.0)));
                cy      = std::max(cy, std::abs(contracted) / (cmax * ymax));
                for (int k = 1; k <= 3; ++k) {
                    csym = std::max(csym, std::abs(C(i, j, k) - C(i, k, j)) / cmax);
                    for (int l = 1; l <= 3; ++l) santi = std::max(santi, std::abs(S(l, i, j, k) + S(l, i, k, j)) / smax);
                    sdiag = std::max(sdiag, std::abs(S(k, i, j, j)) / smax);
                }
            }
            double tr = 0.0;
            for (int m = 1; m <= 3; ++m) tr += C(m, m, i);
            ctrace = std::max(ctrace, std::abs(tr) / cmax);
        }

        auto const raised = bm::bm_S_raised(p);
        auto const Cc     = bm::bm_C(p);
        auto const scale  = std::max(1.0, max_abs(raised)) * cmax;
        auto const v      = seed(p, 1);
        auto const St     = bm::S_raised(v.y);
        auto const G23    = std::pow(p.y(1) * p.y(2) * p.y(3), 2.0 / 3.0);
        for (int i = 1; i <= 3; ++i) {
            double sum = 0.0, div = 0.0;
            for (int m = 1; m <= 3; ++m) {
                div += St(m, i).partial({diff::coord_y(m)});
                for (int r = 1; r <= 3; ++r) sum += raised(m, r) * Cc(r, i, m);
            }
            sc               = std::max(sc, std::abs(sum) / scale);
            auto const exact = 2.0 / 3.0 / p.y(i) / G23;
            divergence       = std::max(divergence, std::abs(div - exact) / std::abs(exact));
        }
    }
    bool const pass = euler <= 1e-12 && inverse <= 1e-12 && csym <= 1e-12 && cy <= 1e-12 && ctrace <= 1e-12 &&
                      santi <= 1e-12 && sdiag <= 1e-12 && sc <= 1e-12 && divergence <= 1e-10;
    return {pass, "euler " + fmt(euler) + ", g.g^-1 " + fmt(inverse) + ", C sym " + fmt(csym) + ", C.y " + fmt(cy) +
                      ", C trace " + fmt(ctrace) + ", S antisym " + fmt(santi) + ", S(j=k) " + fmt(sdiag) +
                      ", S.C " + fmt(sc) + ", fiber divergence " + fmt(divergence) + " (tol 1e-10)"};
}

auto canonical_degeneration() -> Outcome
{
    auto const bm  = CubicForm::berwald_moor();
    auto const nlc = NonlinearConnection::canonical();
    auto const tm  = TemporalMetric::parse("1");
    double vanishing = 0.0, fiber = 0.0;
    for (auto const& p : grid_points()) {
        auto const geo  = connection::evaluate_geometry(bm, tm, p, nlc);
        auto const tors = connection::torsions_generic(geo);
        auto const curv = connection::curvatures_generic(geo, tors);
        vanishing       = std::max({vanishing, max_abs(tors.P_mixed), max_abs(tors.R_time), max_abs(curv.R_hh),
                                    max_abs(curv.P_hv)});
        fiber = std::max(fiber, max_abs_diff(tors.P_fiber, connection::cartan_generic(geo).C));
    }
    return {vanishing <= 1e-12 && fiber <= 1e-12,
            "max |P_mixed, R_time, R_hh, P_hv| " + fmt(vanishing) + " (tol 1e-12); P_fiber carries no connection "
            "term and equals C within " + fmt(fiber)};
}

auto field_anchor() -> Outcome
{
    auto const unit = [] {
        JetPoint p;
        p.y = {{1.0, 1.0, 1.0}};
        return p;
    }();
    auto const flat = TemporalMetric::parse("1");
    auto const expo = TemporalMetric::parse("exp(2*t)");
    auto const bm   = CubicForm::berwald_moor();
    auto const nlc  = NonlinearConnection::apriori();
    std::vector<std::pair<std::string, double>> misses;
    auto near = [&](std::string const& what, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol)) misses.emplace_back(what, got);
    };

    auto const fb = field::einstein_blocks(unit, flat, 1.0);
    near("xi11 (h=1)", fb.xi11, 1.0, 1e-12);
    near("T^1_1 (h=1)", field::stress_energy_mixed(unit, flat, 1.0).T1_1, 1.0, 1e-12);
    near("Sc (h=1)", bm::bm_scalar_curvature(unit, flat), -2.0, 1e-12);

    auto const eb = field::einstein_blocks(unit, expo, 1.0);
    near("xi11 (exp)", eb.xi11, 1.25, 1e-12);
    near("Sc (exp)", bm::bm_scalar_curvature(unit, expo), -2.5, 1e-12);
    auto const geo = connection::evaluate_geometry(bm, expo, unit, nlc);
    auto const gr  = connection::ricci_generic(connection::curvatures_generic(geo));
    near("Sc generic (exp)", connection::scalar_curvature_generic(geo, gr), -2.5, 1e-12);
    auto const cr = bm::bm_ricci(unit, expo);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            double const want = i == j ? 1.0 / 18.0 : -1.0 / 36.0;
            near("R_ij closed", cr.R(i, j), want, 1e-12);
            near("R_ij generic", gr.R(i, j), want, 1e-12);
        }
    auto const law = field::conservation_residuals(unit, expo, 1.0);
    near("law 1 RHS", law.law1_rhs, -0.5, 1e-12);
    near("law 1 residual", law.law1_residual(), 0.0, 1e-9);
    near("law 2", max_abs(law.law2_lhs), 0.0, 1e-9);
    near("law 3", max_abs(law.law3_lhs), 0.0, 1e-9);

    std::string detail = "xi11 " + fmt(fb.xi11) + "/" + fmt(eb.xi11) + ", Sc -2/-2.5, law 1 RHS " + fmt(law.law1_rhs) +
                         ", |LHS-RHS| " + fmt(law.law1_residual()) + ", laws 2-3 " +
                         fmt(std::max(max_abs(law.law2_lhs), max_abs(law.law3_lhs)));
    for (auto const& [what, got] : misses) detail += "; miss " + what + " = " + fmt(got);
    return {misses.empty(), detail};
}

auto em_triviality() -> Outcome
{
    auto const bm  = CubicForm::berwald_moor();
    auto const nlc = NonlinearConnection::apriori();
    auto const pts = grid_points();
    double F = 0.0, derivs = 0.0;
    for (auto const* text : metric_texts()) {
        auto const tm = TemporalMetric::parse(text);
        for (auto const& p : pts)
            for (auto const& e : {field::em_two_form(bm, tm, p, nlc), field::em_two_form(field::em_inputs_closed(tm, p))}) {
                F      = std::max(F, max_abs(e.F_em));
                derivs = std::max({derivs, max_abs(e.F_time), max_abs(e.F_h), max_abs(e.F_v)});
            }
    }
    return {F <= 1e-12 && derivs <= 1e-9,
            "max |F_em| " + fmt(F) + " (tol 1e-12), covariant derivatives " + fmt(derivs) + " (tol 1e-9)"};
}

auto differentiation_kernel() -> Outcome
{
    auto const corpus = testing::field_corpus();
    double exact = 0.0, fd = 0.0;
    for (auto const& entry : corpus) {
        for (auto const& known : entry.partials) {
            auto const want = known.exact(entry.point);
            auto const got  = diff::partial(entry.field, entry.point, known.spec);
            exact           = std::max(exact, std::abs(got - want) / floor1(want));
        }
        for (int a = 0; a < diff::kVariables; ++a) {
            diff::PartialSpec const first{static_cast<diff::Coord>(a)};
            fd = std::max(fd, testing::fd_deviation(entry.field, entry.point, first));
            for (int b = a; b < diff::kVariables; ++b)
                fd = std::max(fd, testing::fd_deviation(entry.field, entry.point, first.with(static_cast<diff::Coord>(b))));
        }
    }
    return {corpus.size() >= 10 && exact <= 1e-12 && fd <= 1e-5,
            std::to_string(corpus.size()) + " fields, exact error " + fmt(exact) + " (tol 1e-12), FD " + fmt(fd) +
                " (tol 1e-5)"};
}

auto exit_status(std::string const& command) -> int
{
    auto const status = std::system((command + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

auto cli_contract() -> Outcome
{
    std::string const data = JETFINSLER_TEST_DATA;
    std::string const tool = JETFINSLER_CLI;
    auto const scenario    = cli::load_scenario(data + "/golden_scenario.json");

    auto strip = [](nlohmann::ordered_json doc) {
        doc.erase("wall_time_seconds");
        return doc.dump();
    };
    auto const first  = strip(cli::run(scenario).document);
    auto const second = strip(cli::run(scenario).document);
    std::ifstream in(data + "/golden_report.json");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto golden = buffer.str();
    while (!golden.empty() && golden.back() == '\n') golden.pop_back();

    int const ok       = exit_status(tool + " run " + data + "/golden_scenario.json");
    int const exceeded = exit_status(tool + " run " + data + "/golden_scenario.json --tolerance-ad 1e-18");
    int const config   = exit_status(tool + " run " + data + "/bad_scenario.json");
    bool const pass    = first == second && first == golden && ok == 0 && exceeded != 0 && config != 0;
    return {pass, std::string("repeat run identical: ") + (first == second ? "yes" : "no") +
                      ", golden match: " + (first == golden ? "yes" : "no") + ", exit codes pass/exceeded/config " +
                      std::to_string(ok) + "/" + std::to_string(exceeded) + "/" + std::to_string(config)};
}

} // namespace

int main()
{
    struct Criterion
    {
        char const* title;
        std::function<Outcome()> check;
    };
    std::vector<Criterion> const criteria{
        {"cross-engine equivalence", cross_engine},
        {"identity suite", identity_suite},
        {"canonical-connection degeneration", canonical_degeneration},
        {"field-theory anchor values", field_anchor},
        {"electromagnetic triviality", em_triviality},
        {"differentiation kernel", differentiation_kernel},
        {"CLI determinism and exit status", cli_contract},
    };
    int failures = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Outcome outcome{false, ""};
        try {
            outcome = criteria[n].check();
        } catch (std::exception const& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("criterion %zu: %s  %s  [%s]\n", n + 1, outcome.pass ? "PASS" : "FAIL", criteria[n].title,
                    outcome.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
