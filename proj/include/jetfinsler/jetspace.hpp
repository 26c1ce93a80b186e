#pragma once

// Domain types of J^1(R, M^3): the temporal metric h_11(t) with its Christoffel
// symbol, the spatial cubic form G_pqr(x), and coordinate changes of jet points.

#include <jetfinsler/expression.hpp>
#include <jetfinsler/jet_point.hpp>
#include <jetfinsler/scalar.hpp>
#include <jetfinsler/tensor.hpp>

#include <array>
#include <functional>
#include <map>
#include <string_view>

namespace jetfinsler {

/// Riemannian metric h_11(t) on the time axis.
class TemporalMetric
{
public:
    /// Throws ConfigError if the expression depends on anything but t.
    explicit TemporalMetric(Expression h11);
    static auto parse(std::string_view text) -> TemporalMetric { return TemporalMetric(Expression::parse(text)); }

    [[nodiscard]] auto expression() const -> Expression const& { return h11_; }

    /// h_11(t); throws NonPositiveMetric unless positive.
    [[nodiscard]] auto h11(double t) const -> double;
    /// h^11 = 1 / h_11.
    [[nodiscard]] auto h_upper(double t) const -> double { return 1.0 / h11(t); }
    /// h_11 as a function of the seeded coordinates (depends on t only).
    [[nodiscard]] auto h11(JetVariables const& v) const -> diff::Taylor;

    /// d^k h_11 / dt^k for k <= 4.
    [[nodiscard]] auto h11_derivative(double t, int k) const -> double;

    /// kappa^1_11 = (h^11 / 2) dh_11/dt.
    [[nodiscard]] auto kappa(double t) const -> double;
    [[nodiscard]] auto kappa_dot(double t) const -> double;
    /// kappa as a field of the seeded coordinates; carries one order less than v.
    [[nodiscard]] auto kappa(JetVariables const& v) const -> diff::Taylor;

private:
    Expression h11_;
};

/// Free-function form of TemporalMetric::kappa.
inline auto kappa(TemporalMetric const& tm, double t) -> double { return tm.kappa(t); }

using CubicTable = DTensor<double, S_dn, S_dn, S_dn>;

/// Totally symmetric spatial tensor G_pqr(x) of kind (0,3).
class CubicForm
{
public:
    /// G_pqr = 1/3! for distinct indices, 0 otherwise.
    static auto berwald_moor() -> CubicForm;

    /// Entries keyed by index triples in any order; missing entries are zero.
    /// Throws ConfigError for out-of-range indices, conflicting duplicates or
    /// expressions depending on t or y.
    static auto from_entries(std::map<std::array<int, 3>, Expression> const& entries) -> CubicForm;

    /// Constant form from the symmetrization of an arbitrary table.
    static auto from_table(CubicTable const& table) -> CubicForm;

    [[nodiscard]] auto is_berwald_moor() const -> bool { return berwald_moor_; }

    /// Component G_pqr, independent of the order of p, q, r.
    template <Scalar scalar_t> [[nodiscard]] auto component(int p, int q, int r, Vec3<scalar_t> const& x) const -> scalar_t
    {
        BasicJetPoint<scalar_t> at;
        at.x = x;
        return entries_[slot(p, q, r)].evaluate(at);
    }

    [[nodiscard]] auto operator()(int p, int q, int r, Vec3<double> const& x) const -> double
    {
        return component<double>(p, q, r, x);
    }

    /// All 27 components at x.
    [[nodiscard]] auto table(Vec3<double> const& x) const -> CubicTable;

    /// Expression stored for the sorted triple.
    [[nodiscard]] auto entry(int p, int q, int r) const -> Expression const& { return entries_[slot(p, q, r)]; }

private:
    static auto slot(int p, int q, int r) -> std::size_t;

    std::array<Expression, 10> entries_;
    bool berwald_moor_{false};
};

/// Average over the six index permutations.
auto symmetrize(CubicTable const& table) -> CubicTable;

/// Monotone reparametrization t -> t~(t).
struct TimeChange
{
    std::function<diff::Taylor(diff::Taylor const&)> map;

    static auto identity() -> TimeChange;
};

/// Spatial diffeomorphism x -> x~(x); its Jacobian is obtained by exact differentiation.
struct SpatialChange
{
    std::function<Vec3<diff::Taylor>(Vec3<diff::Taylor> const&)> map;

    static auto identity() -> SpatialChange;
};

/// Applies t~ = t~(t), x~ = x~(x), y~^p = (dx~^p/dx^q)(dt/dt~) y^q.
/// Throws SingularChange if dt~/dt = 0 or the Jacobian is rank deficient.
auto transform_jet(JetPoint const& p, TimeChange const& time, SpatialChange const& space) -> JetPoint;

} // namespace jetfinsler
