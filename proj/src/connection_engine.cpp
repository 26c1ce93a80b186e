#include <jetfinsler/connection_engine.hpp>
#include <jetfinsler/linalg.hpp>
#include <jetfinsler/metric_engine.hpp>

#include <cmath>

namespace jetfinsler::connection {

using diff::Coord;
using diff::Taylor;

auto NonlinearConnection::at(TemporalMetric const& tm, JetPoint const& p) const -> NlcComponents
{
    return components(tm.kappa(p.t), p.y);
}

auto NonlinearConnection::at(TemporalMetric const& tm, JetVariables const& v) const -> BasicNlcComponents<Taylor>
{
    return components(tm.kappa(v), v.y);
}

auto adapted(Taylor const& f, BasicNlcComponents<Taylor> const& nlc, Direction d) -> Taylor
{
    switch (d.kind) {
    case Direction::Kind::time: {
        auto out = f.derivative(Coord::t);
        for (int p = 1; p <= 3; ++p) out -= nlc.M(p) * f.derivative(diff::coord_y(p));
        return out;
    }
    case Direction::Kind::spatial: {
        auto out = f.derivative(diff::coord_x(d.index));
        for (int p = 1; p <= 3; ++p) out -= nlc.N(p, d.index) * f.derivative(diff::coord_y(p));
        return out;
    }
    case Direction::Kind::fiber:
        return f.derivative(diff::coord_y(d.index));
    }
    return f;
}

auto adapted_derivative(diff::ScalarField const& field, TemporalMetric const& tm, JetPoint const& p,
                        NonlinearConnection const& nlc, Direction d) -> double
{
    auto const v = seed(p, 2);
    return adapted(field(v), nlc.at(tm, v), d).value();
}

namespace {

auto time() -> Direction { return Direction::time(); }
auto dx(int i) -> Direction { return Direction::spatial(i); }
auto dy(int i) -> Direction { return Direction::fiber(i); }

} // namespace

auto evaluate_geometry(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p, NonlinearConnection const& nlc)
    -> PointGeometry
{
    PointGeometry geo;
    geo.point = p;
    geo.h11   = tm.h11(p.t);

    auto const v    = seed(p, diff::kMaxOrder);
    auto const G111 = metric::cubic_G111(G, v);
    if (!(G111.value() > 0.0)) throw DomainError("G_111 is not positive at the evaluation point");
    auto const h  = tm.h11(v);
    auto const F2 = diff::pow(G111, 2.0 / 3.0) / h;

    auto const half_h = 0.5 * h.truncated(2);
    for (int i = 1; i <= 3; ++i) {
        auto const dFi = F2.derivative(diff::coord_y(i));
        for (int j = i; j <= 3; ++j) {
            geo.g(i, j) = half_h * dFi.derivative(diff::coord_y(j));
            geo.g(j, i) = geo.g(i, j);
        }
    }
    auto const g0    = values(geo.g);
    auto const scale = frobenius(g0);
    if (!(std::abs(determinant(g0)) >= 1e-12 * scale * scale * scale))
        throw DegenerateMetric("fundamental metric is singular");
    geo.g_inv = inverse(geo.g, determinant(geo.g));

    geo.nlc = nlc.at(tm, v);

    DTensor<Taylor, S_dn, S_dn> dg_t;
    DTensor<Taylor, S_dn, S_dn, S_dn> dg_x;
    DTensor<Taylor, S_dn, S_dn, F_dn> dg_y;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            dg_t(a, b) = adapted(geo.g(a, b), geo.nlc, time());
            for (int c = 1; c <= 3; ++c) {
                dg_x(a, b, c) = adapted(geo.g(a, b), geo.nlc, dx(c));
                dg_y(a, b, c) = adapted(geo.g(a, b), geo.nlc, dy(c));
            }
        }

    auto& cartan = geo.cartan;
    cartan.kappa = tm.kappa(v);
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j) {
            Taylor s = 0.0;
            for (int m = 1; m <= 3; ++m) s += geo.g_inv(k, m) * dg_t(m, j);
            cartan.G(k, j) = 0.5 * s;
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = j; k <= 3; ++k) {
                Taylor l = 0.0;
                Taylor c = 0.0;
                for (int m = 1; m <= 3; ++m) {
                    l += geo.g_inv(i, m) * (dg_x(j, m, k) + dg_x(k, m, j) - dg_x(j, k, m));
                    c += geo.g_inv(i, m) * (dg_y(j, m, k) + dg_y(k, m, j) - dg_y(j, k, m));
                }
                cartan.L(i, j, k) = 0.5 * l;
                cartan.L(i, k, j) = cartan.L(i, j, k);
                cartan.C(i, j, k) = 0.5 * c;
                cartan.C(i, k, j) = cartan.C(i, j, k);
            }
    return geo;
}

auto metric_generic(PointGeometry const& geo) -> MetricPair { return {values(geo.g), values(geo.g_inv)}; }

auto cartan_generic(PointGeometry const& geo) -> CartanConnection { return values(geo.cartan); }

auto cartan_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p, NonlinearConnection const& nlc)
    -> CartanConnection
{
    return cartan_generic(evaluate_geometry(G, tm, p, nlc));
}

auto torsions_generic(PointGeometry const& geo) -> TorsionSet
{
    auto const& nlc = geo.nlc;
    auto const& L   = geo.cartan.L;
    TorsionSet out;
    for (int k = 1; k <= 3; ++k) {
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                out.P_mixed(k, i, j) = adapted(nlc.N(k, i), nlc, dy(j)).value() - L(k, j, i).value();
                out.P_fiber(k, i, j) = geo.cartan.C(k, i, j).value();
            }
        for (int j = 1; j <= 3; ++j)
            out.R_time(k, j) = adapted(nlc.M(k), nlc, dx(j)).value() - adapted(nlc.N(k, j), nlc, time()).value();
    }
    return out;
}

auto curvatures_generic(PointGeometry const& geo, TorsionSet const& torsions) -> CurvatureSet
{
    auto const& nlc = geo.nlc;
    auto const& Lt  = geo.cartan.L;
    auto const& Ct  = geo.cartan.C;
    auto const L    = values(Lt);
    auto const C    = values(Ct);

    DTensor<double, S_up, S_dn, S_dn, S_dn> dL_x;
    DTensor<double, S_up, S_dn, S_dn, F_dn> dL_y;
    DTensor<double, F_up, S_dn, F_dn, S_dn> dC_x;
    DTensor<double, F_up, S_dn, F_dn, F_dn> dC_y;
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    dL_x(l, i, j, k) = adapted(Lt(l, i, j), nlc, dx(k)).value();
                    dL_y(l, i, j, k) = adapted(Lt(l, i, j), nlc, dy(k)).value();
                    dC_x(l, i, j, k) = adapted(Ct(l, i, j), nlc, dx(k)).value();
                    dC_y(l, i, j, k) = adapted(Ct(l, i, j), nlc, dy(k)).value();
                }

    CurvatureSet out;
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    double r = dL_x(l, i, j, k) - dL_x(l, i, k, j);
                    double s = dC_y(l, i, j, k) - dC_y(l, i, k, j);
                    // C^l_i(k)|j
                    double c_bar = dC_x(l, i, k, j);
                    double p     = dL_y(l, i, j, k);
                    for (int m = 1; m <= 3; ++m) {
                        r += L(m, i, j) * L(l, m, k) - L(m, i, k) * L(l, m, j);
                        s += C(m, i, j) * C(l, m, k) - C(m, i, k) * C(l, m, j);
                        c_bar += C(m, i, k) * L(l, m, j) - C(l, m, k) * L(m, i, j) - C(l, i, m) * L(m, k, j);
                        p += C(l, i, m) * torsions.P_mixed(m, j, k);
                    }
                    out.R_hh(l, i, j, k) = r;
                    out.P_hv(l, i, j, k) = p - c_bar;
                    out.S_vv(l, i, j, k) = s;
                }
    return out;
}

auto curvatures_generic(PointGeometry const& geo) -> CurvatureSet
{
    return curvatures_generic(geo, torsions_generic(geo));
}

auto ricci_generic(CurvatureSet const& curv) -> RicciSet
{
    RicciSet out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            double r = 0.0, p = 0.0, s = 0.0;
            for (int m = 1; m <= 3; ++m) {
                r += curv.R_hh(m, i, j, m);
                p += curv.P_hv(m, i, j, m);
                s += curv.S_vv(m, i, j, m);
            }
            out.R(i, j) = r;
            out.P(i, j) = p;
            out.S(i, j) = s;
        }
    return out;
}

auto scalar_curvature_generic(PointGeometry const& geo, RicciSet const& ricci) -> double
{
    double r = 0.0, s = 0.0;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            auto const up = geo.g_inv(p, q).value();
            r += up * ricci.R(p, q);
            s += up * ricci.S(p, q);
        }
    return r + geo.h11 * s;
}

} // namespace jetfinsler::connection
