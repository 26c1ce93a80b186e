#pragma once

// Truncated multivariate Taylor arithmetic over the seven jet coordinates
// (t, x1..x3, y1..y3), exact to total order 4.
//
// A Taylor value stores the normalized coefficients c_a = (d^a f)(p) / a! of
// every monomial of degree <= order(), in graded order. Arithmetic truncates
// to the smaller order of its operands; differentiation lowers the order by
// one. Constants carry the maximum order since they are exact at any order.

#include <jetfinsler/errors.hpp>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace jetfinsler::diff {

inline constexpr int kVariables = 7;
inline constexpr int kMaxOrder  = 4;

/// Jet coordinate identifiers; x and y are addressed 1-based through coord_x / coord_y.
enum class Coord : int { t = 0, x1, x2, x3, y1, y2, y3 };

constexpr auto coord_x(int i) -> Coord { return static_cast<Coord>(i); }
constexpr auto coord_y(int i) -> Coord { return static_cast<Coord>(3 + i); }
constexpr auto coord_index(Coord c) -> int { return static_cast<int>(c); }

/// Multi-index of a mixed partial. Stored as per-coordinate multiplicities, so the
/// order in which coordinates are listed never matters.
class PartialSpec
{
public:
    PartialSpec() = default;
    PartialSpec(std::initializer_list<Coord> coords);
    explicit PartialSpec(std::span<const Coord> coords);

    [[nodiscard]] auto order() const -> int;
    [[nodiscard]] auto count(Coord c) const -> int { return counts_[coord_index(c)]; }
    [[nodiscard]] auto multiplicities() const -> std::array<int, kVariables> const& { return counts_; }

    /// Appends one more differentiation along c.
    [[nodiscard]] auto with(Coord c) const -> PartialSpec;

    auto operator==(PartialSpec const&) const -> bool = default;

private:
    std::array<int, kVariables> counts_{};
};

class Taylor
{
public:
    /// The constant zero.
    Taylor();
    Taylor(double constant);

    static auto constant(double value, int order = kMaxOrder) -> Taylor;
    /// The coordinate function c seeded at `value`.
    static auto variable(Coord c, double value, int order) -> Taylor;

    [[nodiscard]] auto order() const -> int { return order_; }
    [[nodiscard]] auto value() const -> double { return coeffs_[0]; }

    /// Mixed partial derivative at the expansion point.
    [[nodiscard]] auto partial(PartialSpec const& spec) const -> double;

    /// Normalized coefficient of the monomial with the given multiplicities.
    [[nodiscard]] auto coefficient(PartialSpec const& spec) const -> double;

    /// Exact partial derivative as a Taylor value of order order() - 1.
    [[nodiscard]] auto derivative(Coord c) const -> Taylor;

    /// Drops every term above `order`.
    [[nodiscard]] auto truncated(int order) const -> Taylor;

    [[nodiscard]] auto coefficients() const -> std::span<double const> { return coeffs_; }

    auto operator+=(Taylor const& rhs) -> Taylor&;
    auto operator-=(Taylor const& rhs) -> Taylor&;
    auto operator*=(Taylor const& rhs) -> Taylor&;
    auto operator/=(Taylor const& rhs) -> Taylor&;
    auto operator+=(double rhs) -> Taylor&;
    auto operator-=(double rhs) -> Taylor&;
    auto operator*=(double rhs) -> Taylor&;
    auto operator/=(double rhs) -> Taylor&;

    friend auto operator-(Taylor const& u) -> Taylor;
    friend auto operator+(Taylor lhs, Taylor const& rhs) -> Taylor { return lhs += rhs; }
    friend auto operator-(Taylor lhs, Taylor const& rhs) -> Taylor { return lhs -= rhs; }
    friend auto operator*(Taylor const& lhs, Taylor const& rhs) -> Taylor;
    friend auto operator/(Taylor const& lhs, Taylor const& rhs) -> Taylor;

    friend auto operator+(Taylor lhs, double rhs) -> Taylor { return lhs += rhs; }
    friend auto operator-(Taylor lhs, double rhs) -> Taylor { return lhs -= rhs; }
    friend auto operator*(Taylor lhs, double rhs) -> Taylor { return lhs *= rhs; }
    friend auto operator/(Taylor lhs, double rhs) -> Taylor { return lhs /= rhs; }
    friend auto operator+(double lhs, Taylor rhs) -> Taylor { return rhs += lhs; }
    friend auto operator-(double lhs, Taylor const& rhs) -> Taylor { return -rhs + lhs; }
    friend auto operator*(double lhs, Taylor rhs) -> Taylor { return rhs *= lhs; }
    friend auto operator/(double lhs, Taylor const& rhs) -> Taylor;

private:
    Taylor(int order, bool);

    // Applies g(u) = sum_k a[k] (u - u0)^k, with a[k] = g^(k)(u0) / k!.
    [[nodiscard]] auto compose(std::span<double const> series) const -> Taylor;

    friend auto exp(Taylor const& u) -> Taylor;
    friend auto log(Taylor const& u) -> Taylor;
    friend auto sin(Taylor const& u) -> Taylor;
    friend auto cos(Taylor const& u) -> Taylor;
    friend auto pow(Taylor const& u, double exponent) -> Taylor;
    friend auto reciprocal(Taylor const& u) -> Taylor;

    int order_{kMaxOrder};
    std::vector<double> coeffs_;
};

auto exp(Taylor const& u) -> Taylor;
auto log(Taylor const& u) -> Taylor;
auto sin(Taylor const& u) -> Taylor;
auto cos(Taylor const& u) -> Taylor;
auto sqrt(Taylor const& u) -> Taylor;
auto reciprocal(Taylor const& u) -> Taylor;

/// Real power u^r; requires u > 0 at the expansion point.
auto pow(Taylor const& u, double exponent) -> Taylor;

/// Integer power by repeated multiplication; any sign of the base is allowed.
auto ipow(Taylor const& u, int exponent) -> Taylor;

/// Number of monomials of total degree <= order in seven variables.
auto monomial_count(int order) -> int;

} // namespace jetfinsler::diff
