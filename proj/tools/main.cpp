#include <jetfinsler/cli.hpp>
#include <jetfinsler/errors.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kToleranceExceeded = 1;
constexpr int kConfigFailure     = 2;

auto run_command(std::string const& scenario_path, std::string const& out_path, std::optional<std::uint64_t> seed,
                 std::optional<double> tolerance_ad) -> int
{
    using namespace jetfinsler;
    auto scenario = cli::load_scenario(scenario_path);
    if (seed) {
        if (!scenario.sampler) throw ConfigError("--seed given but the scenario has no sampler");
        scenario.sampler->seed = *seed;
    }
    if (tolerance_ad) {
        if (!(*tolerance_ad > 0.0)) throw ConfigError("--tolerance-ad must be positive");
        scenario.tolerances.ad_rel = *tolerance_ad;
    }
    auto const report = cli::run(scenario);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write report '" + out_path + "'");
        out << report.document.dump(2) << "\n";
    }
    std::cout << report.summary_text();
    return report.passed ? 0 : kToleranceExceeded;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cross-validation of the generic and closed-form 1-jet Finsler engines"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance_ad;
    auto* run = app.add_subcommand("run", "Evaluate a scenario and write a validation report");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    run->add_option("--out", out_path, "Report file");
    run->add_option("--seed", seed, "Override the sampler seed");
    run->add_option("--tolerance-ad", tolerance_ad, "Override the cross-engine relative tolerance");

    auto* table = app.add_subcommand("table", "Print the closed-form concordance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            std::cout << jetfinsler::cli::print_formula_table();
            return 0;
        }
        return run_command(scenario_path, out_path, seed, tolerance_ad);
    } catch (jetfinsler::ConfigError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigFailure;
    } catch (jetfinsler::Error const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigFailure;
    }
}
