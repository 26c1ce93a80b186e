#pragma once

// Third-root Finsler machinery for a general cubic form G_pqr(x):
//
//   G_111 = G_pqr y^p y^q y^r,   F = G_111^(1/3) (h^11)^(1/2),
//   g_ij  = (h_11 / 2) d^2 F^2 / dy^i dy^j.
//
// The metric and its inverse are available both from the closed general
// formulas in the cubic contractions and from direct differentiation of F^2.

#include <jetfinsler/difftools.hpp>
#include <jetfinsler/jetspace.hpp>
#include <jetfinsler/linalg.hpp>

namespace jetfinsler::metric {

using MetricLower = DTensor<double, S_dn, S_dn>;
using MetricUpper = DTensor<double, S_up, S_up>;

/// Contractions of the cubic form with the fiber coordinates.
struct CubicContractions
{
    double G111{};
    DTensor<double, S_dn> Gi11;
    MetricLower Gij1;
    MetricUpper Gup_jk1;
    double script_G111{};
    DTensor<double, S_up> G1_up;
};

/// G_111 = G_pqr y^p y^q y^r for doubles or Taylor values.
template <Scalar scalar_t> auto cubic_G111(CubicForm const& G, BasicJetPoint<scalar_t> const& p) -> scalar_t
{
    scalar_t sum = 0.0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) sum += G.component(a, b, c, p.x) * p.y(a) * p.y(b) * p.y(c);
    return sum;
}

/// Throws DegenerateCubic when |det G_ij1| < 1e-12 ||G_ij1||_F^3.
auto contract_cubic(CubicForm const& G, JetPoint const& p) -> CubicContractions;

/// F = G_111^(1/3) sqrt(h^11); DomainError unless G_111 > 0.
auto finsler_F(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p) -> double;

/// F and F^2 as differentiable fields.
auto finsler_F_field(CubicForm const& G, TemporalMetric const& tm) -> diff::ScalarField;
auto finsler_F2_field(CubicForm const& G, TemporalMetric const& tm) -> diff::ScalarField;

enum class MetricMode { formula, from_F };

/// g_ij by the closed general formula or by differentiating F^2.
/// Throws DomainError, DegenerateCubic (formula mode) or DegenerateMetric.
auto metric_lower_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p,
                          MetricMode mode = MetricMode::formula) -> MetricLower;

/// g^jk from the closed general formula.
/// Throws SingularDenominator when |G_111 - script_G_111| < 1e-12 |G_111|.
auto metric_upper_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p) -> MetricUpper;

/// Direct numerical inverse of a metric; DegenerateMetric when |det g| < 1e-12 ||g||_F^3.
auto invert_metric(MetricLower const& g) -> MetricUpper;

} // namespace jetfinsler::metric
