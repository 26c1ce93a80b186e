#pragma once

// Small dense containers with 1-based indices, tagged by index species.
//
// Spatial (x) and fiber (y) indices range over {1, 2, 3}; the time index has a
// single value 1. Species tags are part of the type, so a (S_dn, S_dn) metric
// can't be passed where a (F_up, S_dn) nonlinear connection is expected.

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>

namespace jetfinsler {

enum class Species { time, spatial, fiber };
enum class Variance { up, down };

struct Slot
{
    Species species;
    Variance variance;

    [[nodiscard]] constexpr auto extent() const -> int { return species == Species::time ? 1 : 3; }
    constexpr auto operator==(Slot const&) const -> bool = default;
};

inline constexpr Slot T_up{Species::time, Variance::up};
inline constexpr Slot T_dn{Species::time, Variance::down};
inline constexpr Slot S_up{Species::spatial, Variance::up};
inline constexpr Slot S_dn{Species::spatial, Variance::down};
inline constexpr Slot F_up{Species::fiber, Variance::up};
inline constexpr Slot F_dn{Species::fiber, Variance::down};

/// Three components addressed 1..3.
template <typename value_t> struct Vec3
{
    std::array<value_t, 3> v{};

    constexpr auto operator()(int i) -> value_t&
    {
        assert(i >= 1 && i <= 3);
        return v[i - 1];
    }
    constexpr auto operator()(int i) const -> value_t const&
    {
        assert(i >= 1 && i <= 3);
        return v[i - 1];
    }
};

template <typename value_t, Slot... slots> class DTensor
{
public:
    using value_type = value_t;

    static constexpr std::size_t rank = sizeof...(slots);
    static constexpr std::array<Slot, rank> signature{slots...};
    static constexpr std::size_t size = (static_cast<std::size_t>(slots.extent()) * ... * std::size_t{1});

    DTensor() = default;

    /// Every entry set to `fill`.
    explicit DTensor(value_t const& fill) { data_.fill(fill); }

    template <typename... index_t>
        requires(sizeof...(index_t) == rank)
    auto operator()(index_t... idx) -> value_t&
    {
        return data_[offset(static_cast<int>(idx)...)];
    }

    template <typename... index_t>
        requires(sizeof...(index_t) == rank)
    auto operator()(index_t... idx) const -> value_t const&
    {
        return data_[offset(static_cast<int>(idx)...)];
    }

    [[nodiscard]] auto data() -> std::span<value_t, size> { return data_; }
    [[nodiscard]] auto data() const -> std::span<value_t const, size> { return data_; }

private:
    template <typename... index_t> static constexpr auto offset(index_t... idx) -> std::size_t
    {
        std::array<int, rank> const ids{idx...};
        std::size_t off = 0;
        for (std::size_t k = 0; k < rank; ++k) {
            auto const extent = signature[k].extent();
            assert(ids[k] >= 1 && ids[k] <= extent);
            off = off * static_cast<std::size_t>(extent) + static_cast<std::size_t>(ids[k] - 1);
        }
        return off;
    }

    std::array<value_t, size> data_{};
};

/// Largest absolute entry.
template <typename tensor_t> auto max_abs(tensor_t const& a) -> double
{
    double m = 0.0;
    for (auto v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

/// Largest absolute entrywise difference.
template <typename tensor_t> auto max_abs_diff(tensor_t const& a, tensor_t const& b) -> double
{
    double m = 0.0;
    auto const da = a.data();
    auto const db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k) m = std::max(m, std::abs(da[k] - db[k]));
    return m;
}

/// Deviation of `actual` from `reference` relative to the reference's largest entry;
/// an identically zero reference is compared absolutely.
template <typename tensor_t> auto slot_relative_deviation(tensor_t const& actual, tensor_t const& reference) -> double
{
    auto const scale = max_abs(reference);
    auto const diff  = max_abs_diff(actual, reference);
    return scale > 0.0 ? diff / scale : diff;
}

} // namespace jetfinsler
