#include <jetfinsler/metric_engine.hpp>

#include <cmath>
#include <string>

namespace jetfinsler::metric {

using diff::Coord;
using diff::Taylor;

namespace {

auto require_positive_cubic(double G111) -> void
{
    if (!(G111 > 0.0)) throw DomainError("G_111 = " + std::to_string(G111) + " is not positive");
}

auto f2_taylor(CubicForm const& G, TemporalMetric const& tm, JetVariables const& v) -> Taylor
{
    auto const G111 = cubic_G111(G, v);
    require_positive_cubic(G111.value());
    return diff::pow(G111, 2.0 / 3.0) / tm.h11(v);
}

auto check_metric(MetricLower const& g) -> MetricLower const&
{
    auto const scale = frobenius(g);
    if (!(std::abs(determinant(g)) >= 1e-12 * scale * scale * scale))
        throw DegenerateMetric("fundamental metric is singular");
    return g;
}

} // namespace

auto contract_cubic(CubicForm const& G, JetPoint const& p) -> CubicContractions
{
    auto const table = G.table(p.x);
    auto const& y    = p.y;

    CubicContractions c;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            double s = 0.0;
            for (int q = 1; q <= 3; ++q) s += table(i, j, q) * y(q);
            c.Gij1(i, j) = 6.0 * s;
        }
    }
    for (int i = 1; i <= 3; ++i) {
        double s = 0.0;
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) s += table(i, q, r) * y(q) * y(r);
        c.Gi11(i) = 3.0 * s;
    }
    c.G111 = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) c.G111 += table(i, q, r) * y(i) * y(q) * y(r);

    auto const det   = determinant(c.Gij1);
    auto const scale = frobenius(c.Gij1);
    if (!(std::abs(det) >= 1e-12 * scale * scale * scale) || scale == 0.0)
        throw DegenerateCubic("G_ij1 is singular");
    c.Gup_jk1 = inverse(c.Gij1, det);

    for (int j = 1; j <= 3; ++j) {
        double s = 0.0;
        for (int q = 1; q <= 3; ++q) s += c.Gup_jk1(j, q) * c.Gi11(q);
        c.G1_up(j) = s;
    }
    double s = 0.0;
    for (int q = 1; q <= 3; ++q) s += c.G1_up(q) * c.Gi11(q);
    c.script_G111 = s / 3.0;
    return c;
}

auto finsler_F(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p) -> double
{
    auto const G111 = cubic_G111(G, p);
    require_positive_cubic(G111);
    return std::cbrt(G111) * std::sqrt(tm.h_upper(p.t));
}

auto finsler_F_field(CubicForm const& G, TemporalMetric const& tm) -> diff::ScalarField
{
    return diff::ScalarField([G, tm](JetVariables const& v) {
        auto const G111 = cubic_G111(G, v);
        require_positive_cubic(G111.value());
        return diff::pow(G111, 1.0 / 3.0) / diff::sqrt(tm.h11(v));
    });
}

auto finsler_F2_field(CubicForm const& G, TemporalMetric const& tm) -> diff::ScalarField
{
    return diff::ScalarField([G, tm](JetVariables const& v) { return f2_taylor(G, tm, v); });
}

auto metric_lower_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p, MetricMode mode)
    -> MetricLower
{
    MetricLower g;
    if (mode == MetricMode::formula) {
        static_cast<void>(tm.h11(p.t));
        auto const c = contract_cubic(G, p);
        require_positive_cubic(c.G111);
        auto const pre = std::pow(c.G111, -1.0 / 3.0) / 3.0;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) g(i, j) = pre * (c.Gij1(i, j) - c.Gi11(i) * c.Gi11(j) / (3.0 * c.G111));
    }
    else {
        auto const v   = seed(p, 2);
        auto const f2  = f2_taylor(G, tm, v);
        auto const h11 = tm.h11(p.t);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) g(i, j) = 0.5 * h11 * f2.partial({diff::coord_y(i), diff::coord_y(j)});
    }
    return check_metric(g);
}

auto metric_upper_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p) -> MetricUpper
{
    static_cast<void>(tm.h11(p.t));
    auto const c = contract_cubic(G, p);
    require_positive_cubic(c.G111);
    auto const gap = c.G111 - c.script_G111;
    if (!(std::abs(gap) >= 1e-12 * std::abs(c.G111))) throw SingularDenominator("G_111 - script G_111 vanishes");

    MetricUpper up;
    auto const pre = 3.0 * std::cbrt(c.G111);
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) up(j, k) = pre * (c.Gup_jk1(j, k) + c.G1_up(j) * c.G1_up(k) / (3.0 * gap));
    return up;
}

auto invert_metric(MetricLower const& g) -> MetricUpper
{
    check_metric(g);
    return inverse(g, determinant(g));
}

} // namespace jetfinsler::metric
