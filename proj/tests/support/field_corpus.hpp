#pragma once

// Closed-form fields with hand-derived partial derivatives up to order 4.
// The expected values below are written out from calculus by hand and do not
// go through the Taylor kernel.

#include <jetfinsler/difftools.hpp>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace jetfinsler::testing {

struct KnownPartial
{
    diff::PartialSpec spec;
    std::function<double(JetPoint const&)> exact;
};

struct CorpusField
{
    std::string name;
    diff::ScalarField field;
    JetPoint point;
    std::vector<KnownPartial> partials;
};

inline auto make_point(double t, Vec3<double> x, Vec3<double> y) -> JetPoint
{
    JetPoint p;
    p.t = t;
    p.x = x;
    p.y = y;
    return p;
}

inline auto field_corpus() -> std::vector<CorpusField>
{
    using diff::Coord;
    using diff::ScalarField;
    using diff::Taylor;
    auto const t  = Coord::t;
    auto const x1 = Coord::x1;
    auto const x2 = Coord::x2;
    auto const y1 = Coord::y1;
    auto const y2 = Coord::y2;
    auto const y3 = Coord::y3;

    std::vector<CorpusField> corpus;

    corpus.push_back({"t^4",
                      ScalarField([](JetVariables const& v) { return diff::ipow(v.t, 4); }),
                      make_point(1.3, {{0, 0, 0}}, {{1, 1, 1}}),
                      {
                          {{t}, [](JetPoint const& p) { return 4 * std::pow(p.t, 3); }},
                          {{t, t}, [](JetPoint const& p) { return 12 * p.t * p.t; }},
                          {{t, t, t}, [](JetPoint const& p) { return 24 * p.t; }},
                          {{t, t, t, t}, [](JetPoint const&) { return 24.0; }},
                      }});

    corpus.push_back({"y1*y2*y3",
                      ScalarField([](JetVariables const& v) { return v.y(1) * v.y(2) * v.y(3); }),
                      make_point(0.0, {{0, 0, 0}}, {{1.5, 2.5, 0.7}}),
                      {
                          {{y1}, [](JetPoint const& p) { return p.y(2) * p.y(3); }},
                          {{y1, y2}, [](JetPoint const& p) { return p.y(3); }},
                          {{y1, y2, y3}, [](JetPoint const&) { return 1.0; }},
                          {{y1, y1}, [](JetPoint const&) { return 0.0; }},
                          {{y1, y2, y3, y3}, [](JetPoint const&) { return 0.0; }},
                      }});

    // f = (y1 y2 y3)^(2/3), separable in the three factors y^(2/3)
    auto const d23 = [](double y, int k) {
        // k-th derivative of y^(2/3)
        double c = 1.0, e = 2.0 / 3.0;
        for (int m = 0; m < k; ++m) c *= (2.0 / 3.0 - m);
        return c * std::pow(y, e - k);
    };
    corpus.push_back({"(y1*y2*y3)^(2/3)",
                      ScalarField([](JetVariables const& v) { return diff::pow(v.y(1) * v.y(2) * v.y(3), 2.0 / 3.0); }),
                      make_point(0.0, {{0, 0, 0}}, {{0.8, 1.7, 3.1}}),
                      {
                          {{y1}, [d23](JetPoint const& p) { return d23(p.y(1), 1) * d23(p.y(2), 0) * d23(p.y(3), 0); }},
                          {{y1, y1}, [d23](JetPoint const& p) { return d23(p.y(1), 2) * d23(p.y(2), 0) * d23(p.y(3), 0); }},
                          {{y1, y2, y3}, [d23](JetPoint const& p) { return d23(p.y(1), 1) * d23(p.y(2), 1) * d23(p.y(3), 1); }},
                          {{y1, y1, y2, y3}, [d23](JetPoint const& p) { return d23(p.y(1), 2) * d23(p.y(2), 1) * d23(p.y(3), 1); }},
                          {{y2, y2, y2, y2}, [d23](JetPoint const& p) { return d23(p.y(1), 0) * d23(p.y(2), 4) * d23(p.y(3), 0); }},
                      }});

    corpus.push_back({"exp(2t)",
                      ScalarField([](JetVariables const& v) { return diff::exp(2.0 * v.t); }),
                      make_point(-0.4, {{0, 0, 0}}, {{1, 1, 1}}),
                      {
                          {{t}, [](JetPoint const& p) { return 2 * std::exp(2 * p.t); }},
                          {{t, t}, [](JetPoint const& p) { return 4 * std::exp(2 * p.t); }},
                          {{t, t, t, t}, [](JetPoint const& p) { return 16 * std::exp(2 * p.t); }},
                      }});

    corpus.push_back({"1/(1+t^2)",
                      ScalarField([](JetVariables const& v) { return 1.0 / (1.0 + v.t * v.t); }),
                      make_point(0.7, {{0, 0, 0}}, {{1, 1, 1}}),
                      {
                          {{t}, [](JetPoint const& p) { return -2 * p.t / std::pow(1 + p.t * p.t, 2); }},
                          {{t, t}, [](JetPoint const& p) { return (6 * p.t * p.t - 2) / std::pow(1 + p.t * p.t, 3); }},
                          {{t, t, t},
                           [](JetPoint const& p) { return 24 * p.t * (1 - p.t * p.t) / std::pow(1 + p.t * p.t, 4); }},
                          {{t, t, t, t},
                           [](JetPoint const& p) {
                               auto const s = p.t * p.t;
                               return 24 * (5 * s * s - 10 * s + 1) / std::pow(1 + s, 5);
                           }},
                      }});

    corpus.push_back({"log(y1)",
                      ScalarField([](JetVariables const& v) { return diff::log(v.y(1)); }),
                      make_point(0.0, {{0, 0, 0}}, {{2.3, 1, 1}}),
                      {
                          {{y1}, [](JetPoint const& p) { return 1 / p.y(1); }},
                          {{y1, y1}, [](JetPoint const& p) { return -1 / std::pow(p.y(1), 2); }},
                          {{y1, y1, y1}, [](JetPoint const& p) { return 2 / std::pow(p.y(1), 3); }},
                          {{y1, y1, y1, y1}, [](JetPoint const& p) { return -6 / std::pow(p.y(1), 4); }},
                      }});

    corpus.push_back({"sin(x1)",
                      ScalarField([](JetVariables const& v) { return diff::sin(v.x(1)); }),
                      make_point(0.0, {{0.9, 0, 0}}, {{1, 1, 1}}),
                      {
                          {{x1}, [](JetPoint const& p) { return std::cos(p.x(1)); }},
                          {{x1, x1}, [](JetPoint const& p) { return -std::sin(p.x(1)); }},
                          {{x1, x1, x1}, [](JetPoint const& p) { return -std::cos(p.x(1)); }},
                          {{x1, x1, x1, x1}, [](JetPoint const& p) { return std::sin(p.x(1)); }},
                      }});

    corpus.push_back({"cos(x2)*y1",
                      ScalarField([](JetVariables const& v) { return diff::cos(v.x(2)) * v.y(1); }),
                      make_point(0.0, {{0, -1.2, 0}}, {{0.6, 1, 1}}),
                      {
                          {{x2, y1}, [](JetPoint const& p) { return -std::sin(p.x(2)); }},
                          {{x2, x2, x2, y1}, [](JetPoint const& p) { return std::sin(p.x(2)); }},
                          {{x2, x2, x2, x2}, [](JetPoint const& p) { return std::cos(p.x(2)) * p.y(1); }},
                      }});

    corpus.push_back({"exp(x1*y2)",
                      ScalarField([](JetVariables const& v) { return diff::exp(v.x(1) * v.y(2)); }),
                      make_point(0.0, {{0.3, 0, 0}}, {{1, 1.4, 1}}),
                      {
                          {{x1, y2},
                           [](JetPoint const& p) {
                               auto const u = p.x(1) * p.y(2);
                               return (1 + u) * std::exp(u);
                           }},
                          {{x1, x1, y2, y2},
                           [](JetPoint const& p) {
                               auto const u = p.x(1) * p.y(2);
                               return (2 + 4 * u + u * u) * std::exp(u);
                           }},
                          {{y2, y2, y2}, [](JetPoint const& p) { return std::pow(p.x(1), 3) * std::exp(p.x(1) * p.y(2)); }},
                      }});

    corpus.push_back({"t^2*x1^3*y1*y2",
                      ScalarField([](JetVariables const& v) { return diff::ipow(v.t, 2) * diff::ipow(v.x(1), 3) * v.y(1) * v.y(2); }),
                      make_point(0.5, {{1.1, 0, 0}}, {{0.9, 1.3, 1}}),
                      {
                          {{t, t, x1, x1}, [](JetPoint const& p) { return 2 * 6 * p.x(1) * p.y(1) * p.y(2); }},
                          {{t, x1, y1, y2}, [](JetPoint const& p) { return 2 * p.t * 3 * p.x(1) * p.x(1); }},
                          {{x1, x1, x1, y1}, [](JetPoint const& p) { return p.t * p.t * 6 * p.y(2); }},
                      }});

    corpus.push_back({"sin(t)*exp(y3)",
                      ScalarField([](JetVariables const& v) { return diff::sin(v.t) * diff::exp(v.y(3)); }),
                      make_point(0.25, {{0, 0, 0}}, {{1, 1, -0.5}}),
                      {
                          {{t, y3}, [](JetPoint const& p) { return std::cos(p.t) * std::exp(p.y(3)); }},
                          {{t, t, y3, y3}, [](JetPoint const& p) { return -std::sin(p.t) * std::exp(p.y(3)); }},
                          {{t, t, t}, [](JetPoint const& p) { return -std::cos(p.t) * std::exp(p.y(3)); }},
                      }});

    // y1^(1/3) / y2: separable power laws
    corpus.push_back({"y1^(1/3)/y2",
                      ScalarField([](JetVariables const& v) { return diff::pow(v.y(1), 1.0 / 3.0) / v.y(2); }),
                      make_point(0.0, {{0, 0, 0}}, {{2.0, 0.5, 1}}),
                      {
                          {{y1}, [](JetPoint const& p) { return (1.0 / 3.0) * std::pow(p.y(1), -2.0 / 3.0) / p.y(2); }},
                          {{y1, y2}, [](JetPoint const& p) { return -(1.0 / 3.0) * std::pow(p.y(1), -2.0 / 3.0) / (p.y(2) * p.y(2)); }},
                          {{y1, y1, y2, y2},
                           [](JetPoint const& p) {
                               return (1.0 / 3.0) * (-2.0 / 3.0) * std::pow(p.y(1), -5.0 / 3.0) * 2.0 / std::pow(p.y(2), 3);
                           }},
                          {{y2, y2, y2, y2}, [](JetPoint const& p) { return std::cbrt(p.y(1)) * 24.0 / std::pow(p.y(2), 5); }},
                      }});

    corpus.push_back({"sqrt(x2^2 + y1^2)",
                      ScalarField([](JetVariables const& v) { return diff::sqrt(v.x(2) * v.x(2) + v.y(1) * v.y(1)); }),
                      make_point(0.0, {{0, 0.6, 0}}, {{0.8, 1, 1}}),
                      {
                          {{y1}, [](JetPoint const& p) { return p.y(1) / std::hypot(p.x(2), p.y(1)); }},
                          {{x2, y1}, [](JetPoint const& p) { return -p.x(2) * p.y(1) / std::pow(std::hypot(p.x(2), p.y(1)), 3); }},
                          {{y1, y1}, [](JetPoint const& p) { return p.x(2) * p.x(2) / std::pow(std::hypot(p.x(2), p.y(1)), 3); }},
                      }});

    return corpus;
}

} // namespace jetfinsler::testing
