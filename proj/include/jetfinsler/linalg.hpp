#pragma once

#include <jetfinsler/scalar.hpp>
#include <jetfinsler/tensor.hpp>

namespace jetfinsler {

constexpr auto raised(Slot s) -> Slot { return {s.species, s.variance == Variance::up ? Variance::down : Variance::up}; }

template <typename value_t, Slot a, Slot b> auto determinant(DTensor<value_t, a, b> const& m) -> value_t
{
    return m(1, 1) * (m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2)) - m(1, 2) * (m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1))
           + m(1, 3) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1));
}

/// Frobenius norm of a 3x3 block.
template <Slot a, Slot b> auto frobenius(DTensor<double, a, b> const& m) -> double
{
    double s = 0.0;
    for (auto v : m.data()) s += v * v;
    return std::sqrt(s);
}

/// Adjugate inverse; the caller checks the determinant beforehand.
template <typename value_t, Slot a, Slot b>
auto inverse(DTensor<value_t, a, b> const& m, value_t const& det) -> DTensor<value_t, raised(b), raised(a)>
{
    DTensor<value_t, raised(b), raised(a)> inv;
    auto const inv_det = value_t(1.0) / det;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            // cofactor of m(j, i)
            int const r0 = (i % 3) + 1, r1 = ((i + 1) % 3) + 1;
            int const c0 = (j % 3) + 1, c1 = ((j + 1) % 3) + 1;
            inv(j, i) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * inv_det;
        }
    }
    return inv;
}

template <typename value_t, Slot a, Slot b, Slot c>
auto product(DTensor<value_t, a, b> const& lhs, DTensor<value_t, raised(b), c> const& rhs) -> DTensor<value_t, a, c>
{
    DTensor<value_t, a, c> out;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k) {
            value_t s = 0.0;
            for (int j = 1; j <= 3; ++j) s += lhs(i, j) * rhs(j, k);
            out(i, k) = s;
        }
    return out;
}

} // namespace jetfinsler
