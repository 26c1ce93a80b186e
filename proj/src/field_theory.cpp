#include <jetfinsler/field_theory.hpp>
#include <jetfinsler/metric_engine.hpp>

#include <cmath>

namespace jetfinsler::field {

using connection::Direction;
using diff::Taylor;

auto check_einstein_constant(double K) -> void
{
    if (K == 0.0 || !std::isfinite(K)) throw ZeroEinsteinConstant("Einstein constant must be finite and nonzero");
}

auto assemble_einstein(double h11, double kappa, DTensor<double, S_dn, S_dn> const& g, RicciSet const& ricci,
                       double scalar_curvature, double K) -> EinsteinBlocks
{
    check_einstein_constant(K);
    auto const half = scalar_curvature / 2.0;
    EinsteinBlocks out;
    out.K    = K;
    out.xi11 = xi11(h11, kappa, K);
    // The temporal Ricci component vanishes for the Cartan canonical connection.
    out.T_11 = -half * h11 / K;
    auto& off = out.T_mixed_offdiag;
    for (int i = 1; i <= 3; ++i) {
        off.T_1i(i)      = 0.0;
        off.T_i1(i)      = 0.0;
        off.T_fiber_1(i) = 0.0;
        off.T_1_fiber(i) = 0.0;
        for (int j = 1; j <= 3; ++j) {
            out.T_ij(i, j)      = (ricci.R(i, j) - half * g(i, j)) / K;
            out.T_fiber(i, j)   = (ricci.S(i, j) - half * g(i, j) / h11) / K;
            off.T_i_fiber(i, j) = ricci.P(i, j) / K;
            off.T_fiber_i(i, j) = ricci.P(j, i) / K;
        }
    }
    return out;
}

auto einstein_blocks(JetPoint const& p, TemporalMetric const& tm, double K) -> EinsteinBlocks
{
    check_einstein_constant(K);
    auto const [g, g_inv] = bm::bm_metric(p, tm);
    return assemble_einstein(tm.h11(p.t), tm.kappa(p.t), g, bm::bm_ricci(p, tm), bm::bm_scalar_curvature(p, tm), K);
}

auto raise_blocks(EinsteinBlocks const& b, DTensor<double, S_up, S_up> const& g_inv, double h11) -> StressEnergyMixed
{
    auto const& off = b.T_mixed_offdiag;
    auto const hu   = 1.0 / h11;
    StressEnergyMixed out;
    out.T1_1 = hu * b.T_11;
    for (int m = 1; m <= 3; ++m) {
        out.T1_i(m)       = hu * off.T_1i(m);
        out.T1_fiber_i(m) = hu * off.T_1_fiber(m);
        out.Tm_1(m)       = 0.0;
        out.Tm_11(m)      = 0.0;
        for (int r = 1; r <= 3; ++r) {
            out.Tm_1(m) += g_inv(m, r) * off.T_i1(r);
            out.Tm_11(m) += h11 * g_inv(m, r) * off.T_fiber_1(r);
        }
        for (int i = 1; i <= 3; ++i) {
            double a = 0.0, b1 = 0.0, c = 0.0, d = 0.0;
            for (int r = 1; r <= 3; ++r) {
                a += g_inv(m, r) * b.T_ij(r, i);
                b1 += g_inv(m, r) * off.T_fiber_i(r, i);
                c += g_inv(m, r) * off.T_i_fiber(r, i);
                d += g_inv(m, r) * b.T_fiber(r, i);
            }
            out.Tm_i(m, i)        = a;
            out.Tm_1i(m, i)       = h11 * b1;
            out.Tm_fiber_i(m, i)  = c;
            out.Tmm_fiber_i(m, i) = h11 * d;
        }
    }
    return out;
}

auto stress_energy_mixed(JetPoint const& p, TemporalMetric const& tm, double K) -> StressEnergyMixed
{
    bm::check_orthant(p.y);
    return stress_energy_closed(p.y, tm.h11(p.t), tm.kappa(p.t), K);
}

auto conservation_residuals(JetPoint const& p, TemporalMetric const& tm, double K) -> ConservationResiduals
{
    check_einstein_constant(K);
    bm::check_orthant(p.y);
    auto const v     = seed(p, 2);
    auto const kappa = tm.kappa(v);
    auto const nlc   = connection::NonlinearConnection::apriori().at(tm, v);
    auto const T     = stress_energy_closed(v.y, tm.h11(v), kappa, K);
    auto const cc    = bm::cartan(p.y, tm.kappa(p.t));
    auto const k0    = kappa.value();

    auto dt = [&](Taylor const& f) { return connection::adapted(f, nlc, Direction::time()).value(); };
    auto dx = [&](Taylor const& f, int m) { return connection::adapted(f, nlc, Direction::spatial(m)).value(); };
    auto dy = [&](Taylor const& f, int m) { return connection::adapted(f, nlc, Direction::fiber(m)).value(); };

    ConservationResiduals out;

    // T^1_1/1: the kappa terms of the mixed index cancel.
    double law1 = dt(T.T1_1);
    for (int m = 1; m <= 3; ++m) {
        law1 += dx(T.Tm_1(m), m) + dy(T.Tm_11(m), m);
        for (int r = 1; r <= 3; ++r)
            law1 += T.Tm_1(r).value() * cc.L(m, r, m) + T.Tm_11(r).value() * cc.C(m, r, m);
    }
    out.law1_lhs = law1;

    auto const h   = tm.h11(p.t);
    auto const hd  = tm.h11_derivative(p.t, 1);
    auto const hdd = tm.h11_derivative(p.t, 2);
    out.law1_rhs   = hd * (2.0 * hdd - 3.0 * hd * hd / h) / (16.0 * K * h * h) / bm::G111_two_thirds(p.y);

    for (int i = 1; i <= 3; ++i) {
        double law2 = dt(T.T1_i(i)) + T.T1_i(i).value() * k0;
        double law3 = dt(T.T1_fiber_i(i)) + 2.0 * T.T1_fiber_i(i).value() * k0;
        for (int r = 1; r <= 3; ++r) law2 -= T.T1_i(r).value() * cc.G(r, i);
        for (int m = 1; m <= 3; ++m) {
            law2 += dx(T.Tm_i(m, i), m) + dy(T.Tm_1i(m, i), m);
            law3 += dx(T.Tm_fiber_i(m, i), m) + dy(T.Tmm_fiber_i(m, i), m);
            for (int r = 1; r <= 3; ++r) {
                law2 += T.Tm_i(r, i).value() * cc.L(m, r, m) - T.Tm_i(m, r).value() * cc.L(r, i, m);
                law2 += T.Tm_1i(r, i).value() * cc.C(m, r, m) - T.Tm_1i(m, r).value() * cc.C(r, i, m);
                law3 += T.Tm_fiber_i(r, i).value() * cc.L(m, r, m) - T.Tm_fiber_i(m, r).value() * cc.L(r, i, m);
                law3 += T.Tmm_fiber_i(r, i).value() * cc.C(m, r, m) - T.Tmm_fiber_i(m, r).value() * cc.C(r, i, m);
            }
        }
        out.law2_lhs(i) = law2;
        out.law3_lhs(i) = law3;
    }
    return out;
}

auto em_two_form(EmInputs const& in) -> EMSet
{
    auto const& g  = in.g;
    auto const& N  = in.nlc.N;
    auto const& L  = in.cartan.L;
    auto const& C  = in.cartan.C;
    auto const& Gc = in.cartan.G;
    auto const& y  = in.y;
    auto const& hu = in.h_upper;

    DTensor<Taylor, F_dn, S_dn> F;
    EMSet out;
    for (int i = 1; i <= 3; ++i) {
        Taylor dbar(0.0);
        for (int m = 1; m <= 3; ++m)
            dbar += connection::adapted(g(i, m), in.nlc, Direction::time()) * y(m);
        out.D_bar(i) = (0.5 * hu * dbar).value();

        for (int j = 1; j <= 3; ++j) {
            Taylor f(0.0);
            for (int m = 1; m <= 3; ++m) {
                f += g(j, m) * N(m, i) - g(i, m) * N(m, j);
                for (int r = 1; r <= 3; ++r) f += (g(i, r) * L(r, j, m) - g(j, r) * L(r, i, m)) * y(m);
            }
            F(i, j)         = 0.5 * hu * f;
            out.F_em(i, j)  = F(i, j).value();

            Taylor D(0.0), d = g(i, j);
            for (int q = 1; q <= 3; ++q) {
                Taylor Ly = -N(q, j);
                Taylor Cy(0.0);
                for (int m = 1; m <= 3; ++m) {
                    Ly += L(q, j, m) * y(m);
                    Cy += C(q, m, j) * y(m);
                }
                D += g(i, q) * Ly;
                d += g(i, q) * Cy;
            }
            out.D(i, j)    = (hu * D).value();
            out.d_em(i, j) = (hu * d).value();
        }
    }

    auto const kappa = in.cartan.kappa.value();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto ft = connection::adapted(F(i, j), in.nlc, Direction::time()).value() + F(i, j).value() * kappa;
            for (int m = 1; m <= 3; ++m)
                ft -= F(m, j).value() * Gc(m, i).value() + F(i, m).value() * Gc(m, j).value();
            out.F_time(i, j) = ft;
            for (int k = 1; k <= 3; ++k) {
                auto fh = connection::adapted(F(i, j), in.nlc, Direction::spatial(k)).value();
                auto fv = connection::adapted(F(i, j), in.nlc, Direction::fiber(k)).value();
                for (int m = 1; m <= 3; ++m) {
                    fh -= F(m, j).value() * L(m, i, k).value() + F(i, m).value() * L(m, j, k).value();
                    fv -= F(m, j).value() * C(m, i, k).value() + F(i, m).value() * C(m, j, k).value();
                }
                out.F_h(i, j, k) = fh;
                out.F_v(i, j, k) = fv;
            }
        }
    return out;
}

auto em_inputs(TemporalMetric const& tm, connection::PointGeometry const& geo) -> EmInputs
{
    auto const v = seed(geo.point, 2);
    EmInputs in;
    in.h_upper = 1.0 / tm.h11(v);
    in.y       = v.y;
    in.g       = geo.g;
    in.nlc     = geo.nlc;
    in.cartan  = geo.cartan;
    return in;
}

auto em_two_form(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p,
                 connection::NonlinearConnection const& nlc) -> EMSet
{
    return em_two_form(em_inputs(tm, connection::evaluate_geometry(G, tm, p, nlc)));
}

auto em_inputs_closed(TemporalMetric const& tm, JetPoint const& p) -> EmInputs
{
    bm::check_orthant(p.y);
    auto const v     = seed(p, 2);
    auto const kappa = tm.kappa(v);
    EmInputs in;
    in.h_upper = 1.0 / tm.h11(v);
    in.y       = v.y;
    in.g       = bm::metric_lower(v.y);
    in.nlc     = connection::NonlinearConnection::apriori().at(tm, v);
    in.cartan  = bm::cartan(v.y, kappa);
    return in;
}

} // namespace jetfinsler::field
