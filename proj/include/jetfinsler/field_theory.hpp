#pragma once

// Einstein blocks, mixed stress-energy components, the three conservation
// laws and the electromagnetic 2-form of the Cartan canonical connection.
//
// The Einstein blocks are the left-hand sides (Ric - (Sc / 2) G) / K in the
// adapted frame, i.e. the stress-energy any matter model has to match.

#include <jetfinsler/berwald_moor.hpp>
#include <jetfinsler/connection_engine.hpp>
#include <jetfinsler/geometry_types.hpp>

namespace jetfinsler::field {

/// The six off-diagonal blocks of the adapted Einstein equations.
struct OffDiagonalBlocks
{
    DTensor<double, S_dn> T_1i;
    DTensor<double, S_dn> T_i1;
    DTensor<double, F_dn> T_fiber_1;        // T^(1)_(i)1
    DTensor<double, F_dn> T_1_fiber;        // T_1(i)^(1)
    DTensor<double, S_dn, F_dn> T_i_fiber;  // T_i(j)^(1)
    DTensor<double, F_dn, S_dn> T_fiber_i;  // T^(1)_(i)j
};

struct EinsteinBlocks
{
    double K{};
    double xi11{};
    double T_11{};
    DTensor<double, S_dn, S_dn> T_ij;
    DTensor<double, F_dn, F_dn> T_fiber; // T^(1)(1)_(i)(j)
    OffDiagonalBlocks T_mixed_offdiag;
};

/// The nine raised components, templated so they can be differentiated.
template <typename value_t> struct BasicStressEnergyMixed
{
    value_t T1_1{};                                  // T^1_1
    DTensor<value_t, S_up> Tm_1;                     // T^m_1
    DTensor<value_t, F_up> Tm_11;                    // T^(m)_(1)1
    DTensor<value_t, S_dn> T1_i;                     // T^1_i
    DTensor<value_t, S_up, S_dn> Tm_i;               // T^m_i
    DTensor<value_t, F_up, S_dn> Tm_1i;              // T^(m)_(1)i
    DTensor<value_t, F_dn> T1_fiber_i;               // T^1(1)_(i)
    DTensor<value_t, S_up, F_dn> Tm_fiber_i;         // T^m(1)_(i)
    DTensor<value_t, F_up, F_dn> Tmm_fiber_i;        // T^(m)(1)_(1)(i)
};
using StressEnergyMixed = BasicStressEnergyMixed<double>;

/// xi_11 = (4 h_11 + kappa^2) / (4 K).
template <Scalar scalar_t> auto xi11(scalar_t const& h11, scalar_t const& kappa, double K) -> scalar_t
{
    return (4.0 * h11 + kappa * kappa) / (4.0 * K);
}

/// Throws ZeroEinsteinConstant for K = 0.
auto check_einstein_constant(double K) -> void;

/// (Ric - (Sc / 2) G) / K from the metric, Ricci set and scalar curvature.
auto assemble_einstein(double h11, double kappa, DTensor<double, S_dn, S_dn> const& g, RicciSet const& ricci,
                       double scalar_curvature, double K) -> EinsteinBlocks;

/// Berwald-Moor blocks from the closed-form Ricci set, metric and scalar curvature.
auto einstein_blocks(JetPoint const& p, TemporalMetric const& tm, double K = 1.0) -> EinsteinBlocks;

/// Raises the Einstein blocks with g^-1 and h factors.
auto raise_blocks(EinsteinBlocks const& blocks, DTensor<double, S_up, S_up> const& g_inv, double h11)
    -> StressEnergyMixed;

/// The nine components from their closed identities (Berwald-Moor, a priori connection).
template <Scalar scalar_t>
auto stress_energy_closed(Vec3<scalar_t> const& y, scalar_t const& h11, scalar_t const& kappa, double K)
    -> BasicStressEnergyMixed<scalar_t>
{
    check_einstein_constant(K);
    auto const S     = bm::S_raised(y);
    auto const iso   = xi11(h11, kappa, K) / bm::G111_two_thirds(y);
    auto const zero  = scalar_t(0.0);
    BasicStressEnergyMixed<scalar_t> out;
    out.T1_1 = iso;
    for (int m = 1; m <= 3; ++m) {
        out.Tm_1(m)       = zero;
        out.Tm_11(m)      = zero;
        out.T1_i(m)       = zero;
        out.T1_fiber_i(m) = zero;
        for (int i = 1; i <= 3; ++i) {
            auto const d         = scalar::kronecker(m, i);
            out.Tm_i(m, i)        = kappa * kappa / (4.0 * K) * S(m, i) + iso * d;
            out.Tm_1i(m, i)       = h11 * kappa / (2.0 * K) * S(m, i);
            out.Tm_fiber_i(m, i)  = kappa / (2.0 * K) * S(m, i);
            out.Tmm_fiber_i(m, i) = h11 / K * S(m, i) + iso * d;
        }
    }
    return out;
}

auto stress_energy_mixed(JetPoint const& p, TemporalMetric const& tm, double K = 1.0) -> StressEnergyMixed;

struct ConservationResiduals
{
    double law1_lhs{};
    double law1_rhs{};
    DTensor<double, S_dn> law2_lhs;
    DTensor<double, F_dn> law3_lhs;

    [[nodiscard]] auto law1_residual() const -> double { return std::abs(law1_lhs - law1_rhs); }
};

/// Left-hand sides assembled term by term from the covariant-divergence definitions
/// with the a priori connection, and the closed right-hand side of law 1.
auto conservation_residuals(JetPoint const& p, TemporalMetric const& tm, double K = 1.0) -> ConservationResiduals;

/// Ingredients of the electromagnetic form as fields of first order or higher.
struct EmInputs
{
    diff::Taylor h_upper;
    Vec3<diff::Taylor> y;
    DTensor<diff::Taylor, S_dn, S_dn> g;
    BasicNlcComponents<diff::Taylor> nlc;
    BasicCartanConnection<diff::Taylor> cartan;
};

struct EMSet
{
    DTensor<double, F_dn, S_dn> F_em;          // F^(1)_(i)j
    DTensor<double, F_dn> D_bar;               // D-bar^(1)_(i)1
    DTensor<double, F_dn, S_dn> D;             // D^(1)_(i)j
    DTensor<double, F_dn, F_dn> d_em;          // d^(1)(1)_(i)(j)
    DTensor<double, F_dn, S_dn> F_time;        // F_/1
    DTensor<double, F_dn, S_dn, S_dn> F_h;     // F_|k
    DTensor<double, F_dn, S_dn, F_dn> F_v;     // F|^(1)_(k)
};

auto em_two_form(EmInputs const& in) -> EMSet;

/// From the generic engine's per-point state.
auto em_inputs(TemporalMetric const& tm, connection::PointGeometry const& geo) -> EmInputs;
auto em_two_form(CubicForm const& G, TemporalMetric const& tm, JetPoint const& p,
                 connection::NonlinearConnection const& nlc) -> EMSet;

/// From the Berwald-Moor closed forms with the a priori connection.
auto em_inputs_closed(TemporalMetric const& tm, JetPoint const& p) -> EmInputs;

} // namespace jetfinsler::field
