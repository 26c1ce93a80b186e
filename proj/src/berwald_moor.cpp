#include <jetfinsler/berwald_moor.hpp>

namespace jetfinsler::bm {

auto a_coefficients() -> ATable
{
    ATable A;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) A(i, j, k) = a_coefficient(i, j, k);
    return A;
}

auto bm_metric(JetPoint const& p, TemporalMetric const& tm) -> MetricPair
{
    static_cast<void>(tm.h11(p.t));
    return {metric_lower(p.y), metric_upper(p.y)};
}

auto bm_C(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn> { return cartan_C(p.y); }

auto bm_cartan(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind) -> CartanConnection
{
    return cartan(p.y, tm.kappa(p.t), kind);
}

auto bm_torsions(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind) -> TorsionSet
{
    return torsions(p.y, tm.kappa(p.t), tm.kappa_dot(p.t), kind);
}

auto bm_S(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn, F_dn> { return S_table(p.y); }

auto bm_S_bracket(JetPoint const& p) -> DTensor<double, F_up, S_dn, F_dn, F_dn> { return S_bracket(p.y); }

auto bm_curvatures(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind) -> CurvatureSet
{
    return curvatures(p.y, tm.kappa(p.t), kind);
}

auto bm_ricci(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind) -> RicciSet
{
    return ricci(p.y, tm.kappa(p.t), kind);
}

auto bm_S_raised(JetPoint const& p) -> DTensor<double, F_up, F_dn> { return S_raised(p.y); }

auto bm_scalar_curvature(JetPoint const& p, TemporalMetric const& tm, ConnectionKind kind) -> double
{
    return scalar_curvature(p.y, tm.h11(p.t), tm.kappa(p.t), kind);
}

} // namespace jetfinsler::bm
