#pragma once

// Definition-level geometry of J^1(R, M^3): the nonlinear connection, the
// adapted frame, the Cartan canonical connection, its torsions and curvatures.
//
// Everything is derived from g_ij = (h_11 / 2) d^2 F^2 / dy dy by exact
// differentiation. Per point, F^2 is expanded once to fourth order; g and g^-1
// are kept to second order and the connection coefficients to first order, so
// the curvature terms can take one more derivative without re-expansion.

#include <jetfinsler/difftools.hpp>
#include <jetfinsler/geometry_types.hpp>
#include <jetfinsler/jetspace.hpp>

namespace jetfinsler::connection {

class NonlinearConnection
{
public:
    explicit NonlinearConnection(ConnectionKind kind) : kind_{kind} {}
    static auto canonical() -> NonlinearConnection { return NonlinearConnection(ConnectionKind::canonical); }
    static auto apriori() -> NonlinearConnection { return NonlinearConnection(ConnectionKind::apriori); }

    [[nodiscard]] auto kind() const -> ConnectionKind { return kind_; }

    /// M = -kappa y, and N = 0 (canonical) or N = -(kappa / 2) delta (a priori).
    template <Scalar scalar_t>
    [[nodiscard]] auto components(scalar_t const& kappa, Vec3<scalar_t> const& y) const -> BasicNlcComponents<scalar_t>
    {
        BasicNlcComponents<scalar_t> out;
        for (int i = 1; i <= 3; ++i) {
            out.M(i) = -kappa * y(i);
            for (int j = 1; j <= 3; ++j)
                out.N(i, j) = (kind_ == ConnectionKind::apriori && i == j) ? scalar_t(-0.5 * kappa) : scalar_t(0.0);
        }
        return out;
    }

    [[nodiscard]] auto at(TemporalMetric const& tm, JetPoint const& p) const -> NlcComponents;
    /// Components as fields; they carry one order less than v.
    [[nodiscard]] auto at(TemporalMetric const& tm, JetVariables const& v) const -> BasicNlcComponents<diff::Taylor>;

private:
    ConnectionKind kind_;
};

struct Direction
{
    enum class Kind { time, spatial, fiber };
    Kind kind;
    int index;

    static auto time() -> Direction { return {Kind::time, 1}; }
    static auto spatial(int i) -> Direction { return {Kind::spatial, i}; }
    static auto fiber(int i) -> Direction { return {Kind::fiber, i}; }
};

/// delta/delta t = d/dt - M^(p) d/dy^p, delta/delta x^i = d/dx^i - N^(p)_i d/dy^p, d/dy^i.
auto adapted(diff::Taylor const& f, BasicNlcComponents<diff::Taylor> const& nlc, Direction d) -> diff::Taylor;

auto adapted_derivative(diff::ScalarField const& field, TemporalMetric const& tm, JetPoint const& p,
                        NonlinearConnection const& nlc, Direction d) -> double;

/// Per-point state of the generic engine.
struct PointGeometry
{
    JetPoint point;
    double h11{};
    DTensor<diff::Taylor, S_dn, S_dn> g;
    DTensor<diff::Taylor, S_up, S_up> g_inv;
    BasicNlcComponents<diff::Taylor> nlc;
    BasicCartanConnection<diff::Taylor> cartan;
};

/// Throws DomainError (G_111 <= 0) or DegenerateMetric.
auto evaluate_geometry(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p, NonlinearConnection const& nlc)
    -> PointGeometry;

auto metric_generic(PointGeometry const& geo) -> MetricPair;

auto cartan_generic(PointGeometry const& geo) -> CartanConnection;
auto cartan_generic(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p, NonlinearConnection const& nlc)
    -> CartanConnection;

auto torsions_generic(PointGeometry const& geo) -> TorsionSet;

auto curvatures_generic(PointGeometry const& geo, TorsionSet const& torsions) -> CurvatureSet;
auto curvatures_generic(PointGeometry const& geo) -> CurvatureSet;

/// R_ij = R^m_ijm, P_i(j) = P^m_ij(m), S_(i)(j) = S^m_i(j)(m).
auto ricci_generic(CurvatureSet const& curv) -> RicciSet;

/// Sc = g^pq R_pq + h_11 g^pq S_(p)(q).
auto scalar_curvature_generic(PointGeometry const& geo, RicciSet const& ricci) -> double;

} // namespace jetfinsler::connection
