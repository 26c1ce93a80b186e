#pragma once

// Scenario-driven validation runs: parse a scenario, sample or read jet
// points, evaluate both engines per point and assemble a versioned report.

#include <jetfinsler/geometry_types.hpp>
#include <jetfinsler/jetspace.hpp>

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetfinsler::cli {

inline constexpr int kSchemaVersion = 1;

struct Sampler
{
    int count{};
    std::uint64_t seed{};
    double y_min{};
    double y_max{};
    std::array<double, 2> t_range{0.0, 0.0};
    std::array<double, 2> x_range{0.0, 0.0};
};

struct Tolerances
{
    double ad_rel{1e-9};
    double fd_rel{1e-5};
    double identity{1e-12};
};

struct Scenario
{
    std::string temporal_metric;
    /// Empty for the Berwald-Moor cubic.
    std::map<std::array<int, 3>, std::string> cubic_entries;
    bool berwald_moor{true};
    ConnectionKind connection{ConnectionKind::apriori};
    std::vector<JetPoint> points;
    std::optional<Sampler> sampler;
    double einstein_constant{1.0};
    Tolerances tolerances;
    std::vector<std::string> outputs;
};

/// Every object name accepted in `outputs`; "all" expands to this list.
auto output_names() -> std::vector<std::string> const&;

/// Throws ConfigError on malformed documents or invalid values.
auto parse_scenario(std::string_view text) -> Scenario;
auto load_scenario(std::string const& path) -> Scenario;

/// mt19937_64; u = (bits >> 11) * 2^-53 in [0, 1); coordinates drawn in the
/// order t, x1, x2, x3, y1, y2, y3 for each point.
auto sample_points(Sampler const& sampler) -> std::vector<JetPoint>;
auto generator_description() -> nlohmann::ordered_json;

/// Explicit points followed by sampled points.
auto scenario_points(Scenario const& scenario) -> std::vector<JetPoint>;

struct ValidationReport
{
    nlohmann::ordered_json document;
    bool passed{true};
    int comparisons{};
    int failures{};
    int points_evaluated{};
    int points_skipped{};

    [[nodiscard]] auto summary_text() const -> std::string;
};

auto run(Scenario const& scenario) -> ValidationReport;

struct FormulaEntry
{
    std::string operation;
    std::string formula;
    std::string location;
};

/// One entry per implemented closed-form operation.
auto formula_table() -> std::vector<FormulaEntry> const&;
auto print_formula_table() -> std::string;

} // namespace jetfinsler::cli
