#pragma once

// Elementary functions overloaded for plain doubles and Taylor values, so the
// closed forms and expression evaluator can be written once as templates.

#include <jetfinsler/errors.hpp>
#include <jetfinsler/taylor.hpp>

#include <cmath>
#include <concepts>
#include <string>

namespace jetfinsler {

template <typename scalar_t>
concept Scalar = std::same_as<scalar_t, double> || std::same_as<scalar_t, diff::Taylor>;

namespace scalar {

inline auto value_of(double v) -> double { return v; }
inline auto value_of(diff::Taylor const& v) -> double { return v.value(); }

inline auto exp(double v) -> double { return std::exp(v); }
inline auto sin(double v) -> double { return std::sin(v); }
inline auto cos(double v) -> double { return std::cos(v); }
inline auto exp(diff::Taylor const& v) -> diff::Taylor { return diff::exp(v); }
inline auto sin(diff::Taylor const& v) -> diff::Taylor { return diff::sin(v); }
inline auto cos(diff::Taylor const& v) -> diff::Taylor { return diff::cos(v); }

/// u^r on the branch exp(r log u); u must be positive.
inline auto rpow(double u, double r) -> double
{
    if (!(u > 0.0)) throw DomainError("real power of non-positive value " + std::to_string(u));
    return std::exp(r * std::log(u));
}
inline auto rpow(diff::Taylor const& u, double r) -> diff::Taylor { return diff::pow(u, r); }

inline auto ipow(double u, int n) -> double
{
    if (n < 0) {
        if (u == 0.0) throw DomainError("negative power of zero");
        return 1.0 / ipow(u, -n);
    }
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= u;
    return r;
}
inline auto ipow(diff::Taylor const& u, int n) -> diff::Taylor { return diff::ipow(u, n); }

inline auto kronecker(int i, int j) -> double { return i == j ? 1.0 : 0.0; }

} // namespace scalar
} // namespace jetfinsler
