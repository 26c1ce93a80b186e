#include <jetfinsler/taylor.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jetfinsler::diff {

namespace {

using Exponents = std::array<std::int8_t, kVariables>;

struct Product
{
    int lhs;
    int rhs;
    int result;
};

// Graded enumeration of monomials and the index tables driving multiplication
// and differentiation. Built once and shared read-only.
struct MonomialTables
{
    std::vector<Exponents> exponents;
    std::vector<double> factorial;                        // a! per monomial
    std::array<int, kMaxOrder + 1> count_upto{};          // monomials with degree <= k
    std::vector<Product> products;                        // sorted by deg(lhs) + deg(rhs)
    std::array<int, kMaxOrder + 1> products_upto{};
    std::array<std::vector<int>, kVariables> raised;      // index of a + e_v, or -1
    std::vector<int> lookup;                              // base-(kMaxOrder+1) key -> index

    static auto key(Exponents const& e) -> int
    {
        int k = 0;
        for (auto v : e) k = k * (kMaxOrder + 1) + v;
        return k;
    }

    static auto degree(Exponents const& e) -> int { return std::accumulate(e.begin(), e.end(), 0); }

    MonomialTables()
    {
        // enumerate degree by degree
        for (int d = 0; d <= kMaxOrder; ++d) {
            Exponents e{};
            enumerate(e, 0, d);
            count_upto[d] = static_cast<int>(exponents.size());
        }

        int key_space = 1;
        for (int v = 0; v < kVariables; ++v) key_space *= kMaxOrder + 1;
        lookup.assign(key_space, -1);
        for (int i = 0; i < static_cast<int>(exponents.size()); ++i) lookup[key(exponents[i])] = i;

        factorial.resize(exponents.size());
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            double f = 1.0;
            for (auto v : exponents[i])
                for (int m = 2; m <= v; ++m) f *= m;
            factorial[i] = f;
        }

        auto const n = static_cast<int>(exponents.size());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (degree(exponents[a]) + degree(exponents[b]) > kMaxOrder) continue;
                Exponents sum{};
                for (int v = 0; v < kVariables; ++v)
                    sum[v] = static_cast<std::int8_t>(exponents[a][v] + exponents[b][v]);
                products.push_back({a, b, lookup[key(sum)]});
            }
        }
        std::stable_sort(products.begin(), products.end(), [this](Product const& l, Product const& r) {
            return degree(exponents[l.result]) < degree(exponents[r.result]);
        });
        for (int d = 0; d <= kMaxOrder; ++d) {
            products_upto[d] = static_cast<int>(std::count_if(products.begin(), products.end(), [&](Product const& p) {
                return degree(exponents[p.result]) <= d;
            }));
        }

        for (int v = 0; v < kVariables; ++v) {
            raised[v].assign(n, -1);
            for (int i = 0; i < n; ++i) {
                auto e = exponents[i];
                if (degree(e) == kMaxOrder) continue;
                ++e[v];
                raised[v][i] = lookup[key(e)];
            }
        }
    }

private:
    void enumerate(Exponents& e, int var, int remaining)
    {
        if (var == kVariables - 1) {
            e[var] = static_cast<std::int8_t>(remaining);
            exponents.push_back(e);
            e[var] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[var] = static_cast<std::int8_t>(k);
            enumerate(e, var + 1, remaining - k);
        }
        e[var] = 0;
    }
};

auto tables() -> MonomialTables const&
{
    static MonomialTables const instance;
    return instance;
}

auto index_of(PartialSpec const& spec) -> int
{
    Exponents e{};
    auto const& m = spec.multiplicities();
    for (int v = 0; v < kVariables; ++v) e[v] = static_cast<std::int8_t>(m[v]);
    return tables().lookup[MonomialTables::key(e)];
}

void check_order(int order)
{
    if (order < 0 || order > kMaxOrder)
        throw OrderTooHigh("derivative order " + std::to_string(order) + " outside [0, "
                           + std::to_string(kMaxOrder) + "]");
}

} // namespace

// ---------------------------------------------------------------------------------------------------------------------
// PartialSpec
// ---------------------------------------------------------------------------------------------------------------------

PartialSpec::PartialSpec(std::initializer_list<Coord> coords) : PartialSpec(std::span<Coord const>(coords.begin(), coords.size())) {}

PartialSpec::PartialSpec(std::span<Coord const> coords)
{
    for (auto c : coords) ++counts_[coord_index(c)];
}

auto PartialSpec::order() const -> int { return std::accumulate(counts_.begin(), counts_.end(), 0); }

auto PartialSpec::with(Coord c) const -> PartialSpec
{
    auto next = *this;
    ++next.counts_[coord_index(c)];
    return next;
}

// ---------------------------------------------------------------------------------------------------------------------
// Taylor
// ---------------------------------------------------------------------------------------------------------------------

auto monomial_count(int order) -> int
{
    check_order(order);
    return tables().count_upto[order];
}

Taylor::Taylor() : Taylor(0.0) {}

Taylor::Taylor(double constant) : order_{kMaxOrder}, coeffs_(monomial_count(kMaxOrder), 0.0) { coeffs_[0] = constant; }

Taylor::Taylor(int order, bool) : order_{order}, coeffs_(monomial_count(order), 0.0) {}

auto Taylor::constant(double value, int order) -> Taylor
{
    Taylor r(order, true);
    r.coeffs_[0] = value;
    return r;
}

auto Taylor::variable(Coord c, double value, int order) -> Taylor
{
    Taylor r(order, true);
    r.coeffs_[0] = value;
    if (order >= 1) r.coeffs_[tables().raised[coord_index(c)][0]] = 1.0;
    return r;
}

auto Taylor::coefficient(PartialSpec const& spec) const -> double
{
    if (spec.order() > order_)
        throw OrderTooHigh("requested order " + std::to_string(spec.order()) + " exceeds carried order "
                           + std::to_string(order_));
    return coeffs_[index_of(spec)];
}

auto Taylor::partial(PartialSpec const& spec) const -> double
{
    auto const c = coefficient(spec);
    return c * tables().factorial[index_of(spec)];
}

auto Taylor::derivative(Coord c) const -> Taylor
{
    if (order_ == 0) throw OrderTooHigh("cannot differentiate an order-0 expansion");
    auto const& t = tables();
    auto const v  = coord_index(c);
    Taylor r(order_ - 1, true);
    for (int i = 0; i < static_cast<int>(r.coeffs_.size()); ++i) {
        auto const up = t.raised[v][i];
        r.coeffs_[i]  = (t.exponents[i][v] + 1) * coeffs_[up];
    }
    return r;
}

auto Taylor::truncated(int order) const -> Taylor
{
    check_order(order);
    if (order >= order_) return *this;
    Taylor r(order, true);
    std::copy_n(coeffs_.begin(), r.coeffs_.size(), r.coeffs_.begin());
    return r;
}

auto Taylor::operator+=(Taylor const& rhs) -> Taylor&
{
    if (rhs.order_ < order_) *this = truncated(rhs.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

auto Taylor::operator-=(Taylor const& rhs) -> Taylor&
{
    if (rhs.order_ < order_) *this = truncated(rhs.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

auto Taylor::operator*=(Taylor const& rhs) -> Taylor&
{
    *this = *this * rhs;
    return *this;
}

auto Taylor::operator/=(Taylor const& rhs) -> Taylor&
{
    *this = *this / rhs;
    return *this;
}

auto Taylor::operator+=(double rhs) -> Taylor&
{
    coeffs_[0] += rhs;
    return *this;
}

auto Taylor::operator-=(double rhs) -> Taylor&
{
    coeffs_[0] -= rhs;
    return *this;
}

auto Taylor::operator*=(double rhs) -> Taylor&
{
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

auto Taylor::operator/=(double rhs) -> Taylor&
{
    for (auto& c : coeffs_) c /= rhs;
    return *this;
}

auto operator-(Taylor const& u) -> Taylor
{
    auto r = u;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

auto operator*(Taylor const& lhs, Taylor const& rhs) -> Taylor
{
    auto const order = std::min(lhs.order_, rhs.order_);
    auto const& t    = tables();
    Taylor r(order, true);
    auto const n = t.products_upto[order];
    for (int k = 0; k < n; ++k) {
        auto const& p = t.products[k];
        r.coeffs_[p.result] += lhs.coeffs_[p.lhs] * rhs.coeffs_[p.rhs];
    }
    return r;
}

auto operator/(Taylor const& lhs, Taylor const& rhs) -> Taylor { return lhs * reciprocal(rhs); }

auto operator/(double lhs, Taylor const& rhs) -> Taylor { return reciprocal(rhs) *= lhs; }

auto Taylor::compose(std::span<double const> series) const -> Taylor
{
    // Horner in the nilpotent increment; terms beyond order_ vanish.
    auto delta      = *this;
    delta.coeffs_[0] = 0.0;
    auto r          = Taylor::constant(series[order_], order_);
    for (int k = order_ - 1; k >= 0; --k) {
        r = r * delta;
        r.coeffs_[0] += series[k];
    }
    return r;
}

auto exp(Taylor const& u) -> Taylor
{
    std::array<double, kMaxOrder + 1> a{};
    auto const e = std::exp(u.value());
    double fact  = 1.0;
    for (int k = 0; k <= kMaxOrder; ++k) {
        if (k > 0) fact *= k;
        a[k] = e / fact;
    }
    return u.compose(a);
}

auto log(Taylor const& u) -> Taylor
{
    auto const u0 = u.value();
    if (!(u0 > 0.0)) throw DomainError("log of non-positive value " + std::to_string(u0));
    std::array<double, kMaxOrder + 1> a{};
    a[0] = std::log(u0);
    for (int k = 1; k <= kMaxOrder; ++k) a[k] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * std::pow(u0, k));
    return u.compose(a);
}

auto sin(Taylor const& u) -> Taylor
{
    auto const s = std::sin(u.value());
    auto const c = std::cos(u.value());
    // derivatives cycle sin, cos, -sin, -cos
    std::array<double, 4> const cycle{s, c, -s, -c};
    std::array<double, kMaxOrder + 1> a{};
    double fact = 1.0;
    for (int k = 0; k <= kMaxOrder; ++k) {
        if (k > 0) fact *= k;
        a[k] = cycle[k % 4] / fact;
    }
    return u.compose(a);
}

auto cos(Taylor const& u) -> Taylor
{
    auto const s = std::sin(u.value());
    auto const c = std::cos(u.value());
    std::array<double, 4> const cycle{c, -s, -c, s};
    std::array<double, kMaxOrder + 1> a{};
    double fact = 1.0;
    for (int k = 0; k <= kMaxOrder; ++k) {
        if (k > 0) fact *= k;
        a[k] = cycle[k % 4] / fact;
    }
    return u.compose(a);
}

auto reciprocal(Taylor const& u) -> Taylor
{
    auto const u0 = u.value();
    if (u0 == 0.0) throw DomainError("division by a field vanishing at the expansion point");
    std::array<double, kMaxOrder + 1> a{};
    auto const inv = 1.0 / u0;
    double p       = inv;
    for (int k = 0; k <= kMaxOrder; ++k) {
        a[k] = (k % 2 == 0) ? p : -p;
        p *= inv;
    }
    return u.compose(a);
}

auto pow(Taylor const& u, double exponent) -> Taylor
{
    auto const u0 = u.value();
    if (!(u0 > 0.0))
        throw DomainError("real power of non-positive value " + std::to_string(u0));
    // a_k = binom(r, k) u0^(r-k), with u0^r = exp(r log u0)
    std::array<double, kMaxOrder + 1> a{};
    auto const base = std::exp(exponent * std::log(u0));
    double binom    = 1.0;
    double scale    = base;
    for (int k = 0; k <= kMaxOrder; ++k) {
        a[k] = binom * scale;
        binom *= (exponent - k) / (k + 1);
        scale /= u0;
    }
    return u.compose(a);
}

auto sqrt(Taylor const& u) -> Taylor { return pow(u, 0.5); }

auto ipow(Taylor const& u, int exponent) -> Taylor
{
    if (exponent < 0) return reciprocal(ipow(u, -exponent));
    auto result = Taylor::constant(1.0, u.order());
    auto base   = u;
    for (auto e = exponent; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

} // namespace jetfinsler::diff
