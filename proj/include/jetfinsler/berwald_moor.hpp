#pragma once

// Closed forms of the rheonomic Berwald-Moor metric of order three,
//
//   F = sqrt(h^11(t)) (y^1 y^2 y^3)^(1/3),
//
// with the Cartan canonical connection of the a priori nonlinear connection
// M = -kappa y, N = -(kappa / 2) delta. The canonical connection (N = 0) is
// provided as a variant: its L, P_mixed, R_time, R_hh and P_hv all vanish.
//
// The templates accept doubles or Taylor values of y, h_11 and kappa. No
// implicit summation is used anywhere in this header.

#include <jetfinsler/geometry_types.hpp>
#include <jetfinsler/jetspace.hpp>
#include <jetfinsler/scalar.hpp>

#include <string>

namespace jetfinsler::bm {

using ATable = DTensor<double, F_up, S_dn, F_dn>;

/// A^i_jk = (3 d^i_j + 3 d^i_k + 3 d_jk - 9 d^i_j d_jk - 2) / 9.
constexpr auto a_coefficient(int i, int j, int k) -> double
{
    auto const d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    return (3 * d(i, j) + 3 * d(i, k) + 3 * d(j, k) - 9 * d(i, j) * d(j, k) - 2) / 9.0;
}

auto a_coefficients() -> ATable;

template <Scalar scalar_t> auto check_orthant(Vec3<scalar_t> const& y) -> void
{
    for (int i = 1; i <= 3; ++i)
        if (!(scalar::value_of(y(i)) > 0.0))
            throw DomainError("Berwald-Moor closed forms need y^" + std::to_string(i) + " > 0");
}

template <Scalar scalar_t> auto G111(Vec3<scalar_t> const& y) -> scalar_t
{
    check_orthant(y);
    return y(1) * y(2) * y(3);
}

/// G_111^(2/3) as (G_111^(1/3))^2.
template <Scalar scalar_t> auto G111_two_thirds(Vec3<scalar_t> const& y) -> scalar_t
{
    auto const c = scalar::rpow(G111(y), 1.0 / 3.0);
    return c * c;
}

template <Scalar scalar_t> auto metric_lower(Vec3<scalar_t> const& y) -> DTensor<scalar_t, S_dn, S_dn>
{
    auto const G23 = G111_two_thirds(y);
    DTensor<scalar_t, S_dn, S_dn> g;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) g(i, j) = (2.0 - 3.0 * scalar::kronecker(i, j)) / 9.0 * G23 / (y(i) * y(j));
    return g;
}

template <Scalar scalar_t> auto metric_upper(Vec3<scalar_t> const& y) -> DTensor<scalar_t, S_up, S_up>
{
    auto const inv = 1.0 / G111_two_thirds(y);
    DTensor<scalar_t, S_up, S_up> g;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) g(j, k) = (2.0 - 3.0 * scalar::kronecker(j, k)) * inv * y(j) * y(k);
    return g;
}

/// C^i(1)_j(k) = A^i_jk y^i / (y^j y^k).
template <Scalar scalar_t> auto cartan_C(Vec3<scalar_t> const& y) -> DTensor<scalar_t, F_up, S_dn, F_dn>
{
    check_orthant(y);
    DTensor<scalar_t, F_up, S_dn, F_dn> C;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) C(i, j, k) = a_coefficient(i, j, k) * y(i) / (y(j) * y(k));
    return C;
}

template <Scalar scalar_t>
auto cartan(Vec3<scalar_t> const& y, scalar_t const& kappa, ConnectionKind kind = ConnectionKind::apriori)
    -> BasicCartanConnection<scalar_t>
{
    BasicCartanConnection<scalar_t> out;
    out.kappa     = kappa;
    out.C         = cartan_C(y);
    auto const lf = kind == ConnectionKind::apriori ? scalar_t(0.5 * kappa) : scalar_t(0.0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            out.G(i, j) = scalar_t(0.0);
            for (int k = 1; k <= 3; ++k) out.L(i, j, k) = lf * out.C(i, j, k);
        }
    return out;
}

template <Scalar scalar_t>
auto torsions(Vec3<scalar_t> const& y, scalar_t const& kappa, scalar_t const& kappa_dot,
              ConnectionKind kind = ConnectionKind::apriori) -> BasicTorsionSet<scalar_t>
{
    bool const apriori = kind == ConnectionKind::apriori;
    auto const C       = cartan_C(y);
    auto const pf      = apriori ? scalar_t(-0.5 * kappa) : scalar_t(0.0);
    auto const rf      = apriori ? scalar_t(0.5 * (kappa_dot - kappa * kappa)) : scalar_t(0.0);
    BasicTorsionSet<scalar_t> out;
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j) {
            out.R_time(k, j) = k == j ? rf : scalar_t(0.0);
            for (int i = 1; i <= 3; ++i) {
                out.P_mixed(k, i, j) = pf * C(k, i, j);
                out.P_fiber(k, i, j) = C(k, i, j);
            }
        }
    return out;
}

/// S^l(1)(1)_i(j)(k) from the nine-case table; zero when j = k.
template <Scalar scalar_t> auto S_table(Vec3<scalar_t> const& y) -> DTensor<scalar_t, F_up, S_dn, F_dn, F_dn>
{
    check_orthant(y);
    DTensor<scalar_t, F_up, S_dn, F_dn, F_dn> S;
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    scalar_t v = 0.0;
                    if (j == k) {
                    }
                    else if (i == j) {
                        if (l == j) {
                            // case 8: S^l_l(l)(k) = 0
                        }
                        else if (l == k)
                            v = 1.0 / (9.0 * y(i) * y(i)); // case 6
                        else
                            v = -1.0 / 9.0 * y(l) / (y(i) * y(i) * y(k)); // case 1
                    }
                    else if (i == k) {
                        if (l == k) {
                            // case 9: S^l_l(j)(l) = 0
                        }
                        else if (l == j)
                            v = -1.0 / (9.0 * y(i) * y(i)); // case 7
                        else
                            v = 1.0 / 9.0 * y(l) / (y(i) * y(i) * y(j)); // case 2
                    }
                    else {
                        if (l == i) {
                            // case 3: S^i_i(j)(k) = 0
                        }
                        else if (l == j)
                            v = 1.0 / (9.0 * y(i) * y(k)); // case 4
                        else
                            v = -1.0 / (9.0 * y(i) * y(j)); // case 5
                    }
                    S(l, i, j, k) = v;
                }
    return S;
}

/// S from the A-bracket expression for j != k; zero when j = k.
template <Scalar scalar_t> auto S_bracket(Vec3<scalar_t> const& y) -> DTensor<scalar_t, F_up, S_dn, F_dn, F_dn>
{
    check_orthant(y);
    auto const d = [](int a, int b) { return scalar::kronecker(a, b); };
    DTensor<scalar_t, F_up, S_dn, F_dn, F_dn> S;
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    if (j == k) {
                        S(l, i, j, k) = scalar_t(0.0);
                        continue;
                    }
                    auto const Aijl = a_coefficient(l, i, j);
                    auto const Aikl = a_coefficient(l, i, k);
                    double AA       = 0.0;
                    for (int m = 1; m <= 3; ++m)
                        AA += a_coefficient(m, i, j) * a_coefficient(l, m, k) - a_coefficient(m, i, k) * a_coefficient(l, m, j);
                    scalar_t v = Aijl * d(k, l) / (y(i) * y(j)) - Aikl * d(j, l) / (y(i) * y(k));
                    v += Aikl * d(i, j) * y(l) / (y(i) * y(i) * y(k)) - Aijl * d(i, k) * y(l) / (y(i) * y(i) * y(j));
                    v += AA * y(l) / (y(i) * y(j) * y(k));
                    S(l, i, j, k) = v;
                }
    return S;
}

template <Scalar scalar_t>
auto curvatures(Vec3<scalar_t> const& y, scalar_t const& kappa, ConnectionKind kind = ConnectionKind::apriori)
    -> BasicCurvatureSet<scalar_t>
{
    bool const apriori = kind == ConnectionKind::apriori;
    auto const rf      = apriori ? scalar_t(0.25 * kappa * kappa) : scalar_t(0.0);
    auto const pf      = apriori ? scalar_t(0.5 * kappa) : scalar_t(0.0);
    BasicCurvatureSet<scalar_t> out;
    out.S_vv = S_table(y);
    for (int l = 1; l <= 3; ++l)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    out.R_hh(l, i, j, k) = rf * out.S_vv(l, i, j, k);
                    out.P_hv(l, i, j, k) = pf * out.S_vv(l, i, j, k);
                }
    return out;
}

/// S_(i)(j) = ((3 d_ij - 1) / 9) / (y^i y^j).
template <Scalar scalar_t> auto S_ricci(Vec3<scalar_t> const& y) -> DTensor<scalar_t, F_dn, F_dn>
{
    check_orthant(y);
    DTensor<scalar_t, F_dn, F_dn> S;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) S(i, j) = (3.0 * scalar::kronecker(i, j) - 1.0) / 9.0 / (y(i) * y(j));
    return S;
}

template <Scalar scalar_t>
auto ricci(Vec3<scalar_t> const& y, scalar_t const& kappa, ConnectionKind kind = ConnectionKind::apriori)
    -> BasicRicciSet<scalar_t>
{
    bool const apriori = kind == ConnectionKind::apriori;
    auto const rf      = apriori ? scalar_t(0.25 * kappa * kappa) : scalar_t(0.0);
    auto const pf      = apriori ? scalar_t(0.5 * kappa) : scalar_t(0.0);
    BasicRicciSet<scalar_t> out;
    out.S = S_ricci(y);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            out.R(i, j) = rf * out.S(i, j);
            out.P(i, j) = pf * out.S(i, j);
        }
    return out;
}

/// S^m11_i = G_111^(-2/3) ((1 - 3 d^m_i) / 3) (y^m / y^i).
template <Scalar scalar_t> auto S_raised(Vec3<scalar_t> const& y) -> DTensor<scalar_t, F_up, F_dn>
{
    auto const inv = 1.0 / G111_two_thirds(y);
    DTensor<scalar_t, F_up, F_dn> S;
    for (int m = 1; m <= 3; ++m)
        for (int i = 1; i <= 3; ++i) S(m, i) = inv * ((1.0 - 3.0 * scalar::kronecker(m, i)) / 3.0) * (y(m) / y(i));
    return S;
}

/// Sc = -((4 h_11 + kappa^2) / 2) G_111^(-2/3); the kappa^2 term is absent for the canonical connection.
template <Scalar scalar_t>
auto scalar_curvature(Vec3<scalar_t> const& y, scalar_t const& h11, scalar_t const& kappa,
                      ConnectionKind kind = ConnectionKind::apriori) -> scalar_t
{
    auto const k2 = kind == ConnectionKind::apriori ? scalar_t(kappa * kappa) : scalar_t(0.0);
    return -((4.0 * h11 + k2) / 2.0) / G111_two_thirds(y);
}

// Pointwise entry points.

auto bm_metric(JetPoint const& p, TemporalMetric const& tm) -> MetricPair;
auto bm_C(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn>;
auto bm_cartan(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind = ConnectionKind::apriori)
    -> CartanConnection;
auto bm_torsions(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind = ConnectionKind::apriori)
    -> TorsionSet;
auto bm_S(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn, F_dn>;
auto bm_S_bracket(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn, F_dn>;
auto bm_curvatures(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind = ConnectionKind::apriori)
    -> CurvatureSet;
auto bm_ricci(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind = ConnectionKind::apriori) -> RicciSet;
auto bm_S_raised(JetPoint const& p) -> DTensor<double, F_up, F_dn>;
auto bm_scalar_curvature(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind = ConnectionKind::apriori)
    -> double;

} // namespace jetfinsler::bm
