#include <jetfinsler/jetspace.hpp>

#include "support/field_corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace jetfinsler {
namespace {

using diff::Taylor;
using testing::make_point;

TEST(Kappa, Examples)
{
    EXPECT_EQ(kappa(TemporalMetric::parse("1"), 0.7), 0.0);
    for (double t : {-1.0, 0.0, 0.4}) EXPECT_NEAR(kappa(TemporalMetric::parse("exp(2*t)"), t), 1.0, 1e-15);
    EXPECT_NEAR(kappa(TemporalMetric::parse("t^2 + 1"), 1.0), 0.5, 1e-15);
}

TEST(Kappa, TimeDerivative)
{
    // kappa = t / (t^2 + 1), kappa' = (1 - t^2) / (t^2 + 1)^2
    auto const tm = TemporalMetric::parse("t^2 + 1");
    for (double t : {-0.8, 0.0, 1.0, 0.35}) EXPECT_NEAR(tm.kappa_dot(t), (1 - t * t) / std::pow(1 + t * t, 2), 1e-15);
    EXPECT_NEAR(TemporalMetric::parse("exp(2*t)").kappa_dot(0.3), 0.0, 1e-15);
}

TEST(TemporalMetric, NonPositiveValueIsRejected)
{
    auto const tm = TemporalMetric::parse("t");
    EXPECT_THROW(static_cast<void>(tm.h11(-0.5)), NonPositiveMetric);
    EXPECT_THROW(static_cast<void>(tm.kappa(0.0)), NonPositiveMetric);
}

TEST(TemporalMetric, OnlyTimeDependenceAllowed)
{
    EXPECT_THROW(TemporalMetric::parse("1 + x1"), ConfigError);
    EXPECT_THROW(TemporalMetric::parse("y2"), ConfigError);
}

TEST(TemporalMetric, InverseProduct)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> time(-1.0, 1.0);
    for (auto const* text : {"1", "exp(2*t)", "t^2 + 1", "2 + sin(t)"}) {
        auto const tm = TemporalMetric::parse(text);
        for (int k = 0; k < 50; ++k) {
            auto const t = time(rng);
            EXPECT_LE(std::abs(tm.h_upper(t) * tm.h11(t) - 1.0), 1e-14) << text;
        }
    }
}

TEST(Expression, MalformedInputReportsConfigError)
{
    EXPECT_THROW(Expression::parse("1 +"), ConfigError);
    EXPECT_THROW(Expression::parse("z1"), ConfigError);
    EXPECT_THROW(Expression::parse("x1^0.5"), ConfigError);
    EXPECT_THROW(Expression::parse("exp(t"), ConfigError);
}

TEST(Expression, EvaluatesGrammar)
{
    auto const e = Expression::parse("-2*t^2 + x1/x2 - exp(y3)*cos(0) + sin(t)^-1");
    auto const p = make_point(0.5, {{3, 2, 0}}, {{0, 0, 1}});
    EXPECT_NEAR(e.evaluate(p), -0.5 + 1.5 - std::exp(1.0) + 1.0 / std::sin(0.5), 1e-14);
    EXPECT_TRUE(e.uses(diff::Coord::y3));
    EXPECT_FALSE(e.uses(diff::Coord::y1));
}

TEST(CubicForm, BerwaldMoorEntries)
{
    auto const bm = CubicForm::berwald_moor();
    Vec3<double> const x{};
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) {
                bool const distinct = p != q && q != r && p != r;
                EXPECT_EQ(bm(p, q, r, x), distinct ? 1.0 / 6.0 : 0.0);
            }
}

TEST(CubicForm, AccessorIsSymmetric)
{
    std::map<std::array<int, 3>, Expression> entries;
    entries[{2, 1, 1}] = Expression::parse("x1 + 2");
    entries[{3, 2, 1}] = Expression::parse("0.25");
    auto const G = CubicForm::from_entries(entries);
    Vec3<double> const x{{0.5, 0, 0}};
    EXPECT_EQ(G(1, 1, 2, x), 2.5);
    EXPECT_EQ(G(1, 2, 1, x), 2.5);
    EXPECT_EQ(G(2, 1, 1, x), 2.5);
    EXPECT_EQ(G(1, 3, 2, x), 0.25);
    EXPECT_EQ(G(3, 3, 3, x), 0.0);
}

TEST(CubicForm, InvalidEntriesAreRejected)
{
    std::map<std::array<int, 3>, Expression> bad_index{{{1, 2, 4}, Expression::constant(1)}};
    EXPECT_THROW(CubicForm::from_entries(bad_index), ConfigError);
    std::map<std::array<int, 3>, Expression> bad_var{{{1, 2, 3}, Expression::parse("y1")}};
    EXPECT_THROW(CubicForm::from_entries(bad_var), ConfigError);
    std::map<std::array<int, 3>, Expression> conflict{{{1, 2, 3}, Expression::constant(1)},
                                                       {{3, 2, 1}, Expression::constant(2)}};
    EXPECT_THROW(CubicForm::from_entries(conflict), ConfigError);
}

TEST(CubicForm, SymmetrizationIsIdempotent)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CubicTable raw;
    for (auto& v : raw.data()) v = u(rng);
    auto const once  = symmetrize(raw);
    auto const twice = symmetrize(once);
    EXPECT_LE(max_abs_diff(once, twice), 1e-15);
    auto const G = CubicForm::from_table(raw);
    EXPECT_LE(max_abs_diff(G.table({}), once), 1e-15);
}

TEST(TransformJet, Identity)
{
    auto const p = make_point(0.3, {{1, 2, 3}}, {{0.4, 0.5, 0.6}});
    auto const q = transform_jet(p, TimeChange::identity(), SpatialChange::identity());
    EXPECT_EQ(q.t, p.t);
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(q.x(i), p.x(i));
        EXPECT_EQ(q.y(i), p.y(i));
    }
}

TEST(TransformJet, TimeDoubling)
{
    TimeChange const doubling{[](Taylor const& t) { return 2.0 * t; }};
    auto const q = transform_jet(make_point(0, {{0, 0, 0}}, {{1, 2, 3}}), doubling, SpatialChange::identity());
    EXPECT_DOUBLE_EQ(q.y(1), 0.5);
    EXPECT_DOUBLE_EQ(q.y(2), 1.0);
    EXPECT_DOUBLE_EQ(q.y(3), 1.5);
}

TEST(TransformJet, Permutation)
{
    SpatialChange const perm{[](Vec3<Taylor> const& x) { return Vec3<Taylor>{{x(2), x(3), x(1)}}; }};
    auto const q = transform_jet(make_point(0, {{0, 0, 0}}, {{1, 2, 3}}), TimeChange::identity(), perm);
    EXPECT_DOUBLE_EQ(q.y(1), 2.0);
    EXPECT_DOUBLE_EQ(q.y(2), 3.0);
    EXPECT_DOUBLE_EQ(q.y(3), 1.0);
}

TEST(TransformJet, SingularChanges)
{
    auto const p = make_point(0, {{0, 0, 0}}, {{1, 2, 3}});
    TimeChange const frozen{[](Taylor const& t) { return 0.0 * t + 1.0; }};
    EXPECT_THROW(transform_jet(p, frozen, SpatialChange::identity()), SingularChange);
    SpatialChange const collapse{[](Vec3<Taylor> const& x) { return Vec3<Taylor>{{x(1), x(1), x(3)}}; }};
    EXPECT_THROW(transform_jet(p, TimeChange::identity(), collapse), SingularChange);
}

} // namespace
} // namespace jetfinsler
