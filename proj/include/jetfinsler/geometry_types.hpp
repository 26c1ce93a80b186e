#pragma once

// Adapted-component containers shared by the generic and closed-form engines.
// Each is parameterized on the entry type so closed forms can be carried as
// Taylor values when they need to be differentiated further.

#include <jetfinsler/taylor.hpp>
#include <jetfinsler/tensor.hpp>

#include <utility>

namespace jetfinsler {

enum class ConnectionKind { canonical, apriori };

/// Temporal and spatial components M^(i)_(1)1 and N^(i)_(1)j.
template <typename value_t> struct BasicNlcComponents
{
    DTensor<value_t, F_up> M;
    DTensor<value_t, F_up, S_dn> N;
};

/// (kappa^1_11, G^k_j1, L^i_jk, C^i(1)_j(k)).
template <typename value_t> struct BasicCartanConnection
{
    value_t kappa{};
    DTensor<value_t, S_up, S_dn> G;
    DTensor<value_t, S_up, S_dn, S_dn> L;
    DTensor<value_t, F_up, S_dn, F_dn> C;
};

/// P^(k)(1)_(1)i(j), P^k(1)_i(j) and R^(k)_(1)1j.
template <typename value_t> struct BasicTorsionSet
{
    DTensor<value_t, F_up, S_dn, F_dn> P_mixed;
    DTensor<value_t, F_up, S_dn, F_dn> P_fiber;
    DTensor<value_t, F_up, S_dn> R_time;
};

/// R^l_ijk, P^l(1)_ij(k) and S^l(1)(1)_i(j)(k).
template <typename value_t> struct BasicCurvatureSet
{
    DTensor<value_t, S_up, S_dn, S_dn, S_dn> R_hh;
    DTensor<value_t, S_up, S_dn, S_dn, F_dn> P_hv;
    DTensor<value_t, F_up, S_dn, F_dn, F_dn> S_vv;
};

/// R_ij, P_i(j) and S_(i)(j).
template <typename value_t> struct BasicRicciSet
{
    DTensor<value_t, S_dn, S_dn> R;
    DTensor<value_t, S_dn, F_dn> P;
    DTensor<value_t, F_dn, F_dn> S;
};

using NlcComponents    = BasicNlcComponents<double>;
using CartanConnection = BasicCartanConnection<double>;
using TorsionSet       = BasicTorsionSet<double>;
using CurvatureSet     = BasicCurvatureSet<double>;
using RicciSet         = BasicRicciSet<double>;

using MetricPair = std::pair<DTensor<double, S_dn, S_dn>, DTensor<double, S_up, S_up>>;

/// Entrywise values of a Taylor-valued tensor.
template <Slot... slots> auto values(DTensor<diff::Taylor, slots...> const& t) -> DTensor<double, slots...>
{
    DTensor<double, slots...> out;
    auto const src = t.data();
    auto dst       = out.data();
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k].value();
    return out;
}

inline auto values(BasicCartanConnection<diff::Taylor> const& c) -> CartanConnection
{
    return {c.kappa.value(), values(c.G), values(c.L), values(c.C)};
}

} // namespace jetfinsler
