#pragma once

#include <jetfinsler/taylor.hpp>
#include <jetfinsler/tensor.hpp>

namespace jetfinsler {

/// Coordinates (t, x^1..x^3, y_1^1..y_1^3) of a point of J^1(R, M^3), or of the
/// coordinate functions seeded as Taylor variables.
template <typename value_t> struct BasicJetPoint
{
    value_t t{};
    Vec3<value_t> x{};
    Vec3<value_t> y{};
};

using JetPoint     = BasicJetPoint<double>;
using JetVariables = BasicJetPoint<diff::Taylor>;

/// Seeds every coordinate as an independent Taylor variable at p.
inline auto seed(JetPoint const& p, int order) -> JetVariables
{
    JetVariables v;
    v.t = diff::Taylor::variable(diff::Coord::t, p.t, order);
    for (int i = 1; i <= 3; ++i) {
        v.x(i) = diff::Taylor::variable(diff::coord_x(i), p.x(i), order);
        v.y(i) = diff::Taylor::variable(diff::coord_y(i), p.y(i), order);
    }
    return v;
}

} // namespace jetfinsler
