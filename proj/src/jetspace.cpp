#include <jetfinsler/jetspace.hpp>
#include <jetfinsler/linalg.hpp>

#include <algorithm>
#include <string>

namespace jetfinsler {

using diff::Coord;
using diff::Taylor;

// ---------------------------------------------------------------------------------------------------------------------
// TemporalMetric
// ---------------------------------------------------------------------------------------------------------------------

TemporalMetric::TemporalMetric(Expression h11) : h11_{std::move(h11)}
{
    for (int i = 1; i <= 3; ++i) {
        if (h11_.uses(diff::coord_x(i)) || h11_.uses(diff::coord_y(i)))
            throw ConfigError("temporal metric '" + h11_.text() + "' may depend on t only");
    }
}

namespace {

auto check_positive(double h, double t, std::string const& text) -> double
{
    if (!(h > 0.0))
        throw NonPositiveMetric("h11 = " + text + " is " + std::to_string(h) + " at t = " + std::to_string(t));
    return h;
}

auto time_series(Expression const& e, double t, int order) -> Taylor
{
    BasicJetPoint<Taylor> at;
    at.t = Taylor::variable(Coord::t, t, order);
    return e.evaluate(at);
}

} // namespace

auto TemporalMetric::h11(double t) const -> double
{
    JetPoint at;
    at.t = t;
    return check_positive(h11_.evaluate(at), t, h11_.text());
}

auto TemporalMetric::h11(JetVariables const& v) const -> Taylor
{
    auto h = h11_.evaluate(v);
    check_positive(h.value(), v.t.value(), h11_.text());
    return h;
}

auto TemporalMetric::h11_derivative(double t, int k) const -> double
{
    auto const h = time_series(h11_, t, k);
    check_positive(h.value(), t, h11_.text());
    std::vector<Coord> spec(static_cast<std::size_t>(k), Coord::t);
    return h.partial(diff::PartialSpec(spec));
}

auto TemporalMetric::kappa(double t) const -> double
{
    auto const h  = h11(t);
    auto const dh = h11_derivative(t, 1);
    return 0.5 * dh / h;
}

auto TemporalMetric::kappa_dot(double t) const -> double
{
    JetVariables v;
    v.t = Taylor::variable(Coord::t, t, 2);
    return kappa(v).partial({Coord::t});
}

auto TemporalMetric::kappa(JetVariables const& v) const -> Taylor
{
    auto const h = h11(v);
    return h.derivative(Coord::t) / (2.0 * h.truncated(h.order() - 1));
}

// ---------------------------------------------------------------------------------------------------------------------
// CubicForm
// ---------------------------------------------------------------------------------------------------------------------

auto CubicForm::slot(int p, int q, int r) -> std::size_t
{
    std::array<int, 3> idx{p, q, r};
    std::sort(idx.begin(), idx.end());
    // position of (p <= q <= r) in lexicographic order of the 10 sorted triples
    static constexpr std::array<std::array<int, 3>, 10> order{{
        {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3},
    }};
    auto const it = std::find(order.begin(), order.end(), idx);
    return static_cast<std::size_t>(it - order.begin());
}

auto CubicForm::berwald_moor() -> CubicForm
{
    CubicForm g;
    g.entries_.fill(Expression::constant(0.0));
    g.entries_[slot(1, 2, 3)] = Expression::constant(1.0 / 6.0);
    g.berwald_moor_           = true;
    return g;
}

auto CubicForm::from_entries(std::map<std::array<int, 3>, Expression> const& entries) -> CubicForm
{
    CubicForm g;
    g.entries_.fill(Expression::constant(0.0));
    std::array<bool, 10> seen{};
    for (auto const& [idx, expr] : entries) {
        for (auto i : idx)
            if (i < 1 || i > 3) throw ConfigError("cubic form index out of range 1..3");
        if (expr.uses(Coord::t))
            throw ConfigError("cubic form entry '" + expr.text() + "' may not depend on t");
        for (int i = 1; i <= 3; ++i)
            if (expr.uses(diff::coord_y(i)))
                throw ConfigError("cubic form entry '" + expr.text() + "' may not depend on y");
        auto const s = slot(idx[0], idx[1], idx[2]);
        if (seen[s] && g.entries_[s].text() != expr.text())
            throw ConfigError("conflicting entries for one symmetric cubic component");
        seen[s]      = true;
        g.entries_[s] = expr;
    }
    return g;
}

auto CubicForm::from_table(CubicTable const& table) -> CubicForm
{
    auto const sym = symmetrize(table);
    CubicForm g;
    g.entries_.fill(Expression::constant(0.0));
    for (int p = 1; p <= 3; ++p)
        for (int q = p; q <= 3; ++q)
            for (int r = q; r <= 3; ++r) g.entries_[slot(p, q, r)] = Expression::constant(sym(p, q, r));
    return g;
}

auto CubicForm::table(Vec3<double> const& x) const -> CubicTable
{
    CubicTable out;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) out(p, q, r) = (*this)(p, q, r, x);
    return out;
}

auto symmetrize(CubicTable const& table) -> CubicTable
{
    CubicTable out;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r)
                out(p, q, r) = (table(p, q, r) + table(p, r, q) + table(q, p, r) + table(q, r, p) + table(r, p, q)
                                 + table(r, q, p))
                               / 6.0;
    return out;
}

// ---------------------------------------------------------------------------------------------------------------------
// Coordinate changes
// ---------------------------------------------------------------------------------------------------------------------

auto TimeChange::identity() -> TimeChange
{
    return {[](Taylor const& t) { return t; }};
}

auto SpatialChange::identity() -> SpatialChange
{
    return {[](Vec3<Taylor> const& x) { return x; }};
}

auto transform_jet(JetPoint const& p, TimeChange const& time, SpatialChange const& space) -> JetPoint
{
    auto const vars = seed(p, 1);

    auto const t_new = time.map(vars.t);
    auto const dtnew_dt = t_new.partial({Coord::t});
    if (dtnew_dt == 0.0 || !std::isfinite(dtnew_dt)) throw SingularChange("dt~/dt vanishes");

    auto const x_new = space.map(vars.x);
    DTensor<double, S_up, S_dn> jac;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) jac(a, b) = x_new(a).partial({diff::coord_x(b)});

    auto const scale = frobenius(jac);
    if (!(std::abs(determinant(jac)) >= 1e-12 * scale * scale * scale))
        throw SingularChange("spatial Jacobian is rank deficient");

    JetPoint out;
    out.t = t_new.value();
    for (int a = 1; a <= 3; ++a) {
        out.x(a)  = x_new(a).value();
        double yv = 0.0;
        for (int b = 1; b <= 3; ++b) yv += jac(a, b) * p.y(b);
        out.y(a) = yv / dtnew_dt;
    }
    return out;
}

} // namespace jetfinsler
