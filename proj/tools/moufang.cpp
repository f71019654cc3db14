#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "moufang/cli.hpp"
#include "moufang/formula_tables.hpp"
#include "moufang/version.hpp"

namespace {

// MOUFANG_SEED and MOUFANG_TRIALS override the built-in sweep defaults.
template <typename T>
T env_or(const char* name, T fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        return static_cast<T>(std::stoll(v));
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring non-numeric " << name << "=" << v << "\n";
        return fallback;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace moufang;
    using namespace moufang::cli;

    CLI::App app{"Exact verification of a Moufang loop of order 3^19 and its counterexample properties"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string tables_dir;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tables-dir", tables_dir, "Directory holding f_table.txt and h_table.txt (default: compiled-in tables)");

    VerifyOptions verify;
    verify.seed = env_or<std::uint64_t>("MOUFANG_SEED", 42);
    verify.trials = env_or<long long>("MOUFANG_TRIALS", 1'000'000);
    auto* verify_cmd = app.add_subcommand("verify", "Run every check and report pass/fail");
    verify_cmd->add_flag("--symbolic", verify.symbolic, "Also run the symbolic proofs");
    verify_cmd->add_option("--trials", verify.trials, "Random sweep trials (0 skips the sweeps)")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify.seed, "Sweep seed (nonzero)")->check(CLI::PositiveNumber);

    std::string claim;
    auto* prove_cmd = app.add_subcommand("prove", "Prove one identity symbolically");
    prove_cmd->add_option("claim", claim, "moufang | inverse | identity | normal-form")->required();

    std::string expression;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression such as 'assoc(comm(a,b), c, d)'");
    eval_cmd->add_option("expr", expression, "Expression")->required();

    std::vector<std::string> generators;
    std::size_t closure_cap = 10'000'000;
    bool list_elements = false;
    auto* closure_cmd = app.add_subcommand("closure", "Generate the subloop spanned by elements");
    closure_cmd->add_option("generators", generators, "Generators, e.g. e3 e4")->required();
    closure_cmd->add_option("--cap", closure_cap, "Maximum number of elements");
    closure_cmd->add_flag("--list", list_elements, "Print every element");

    std::string density_a, density_b, mode_name = "exact";
    long long density_trials = 100'000;
    std::uint64_t density_seed = env_or<std::uint64_t>("MOUFANG_SEED", 42);
    auto* density_cmd = app.add_subcommand("density", "Density of l_{a,b} = {x : (x,a,b) = 1}");
    density_cmd->add_option("a", density_a)->required();
    density_cmd->add_option("b", density_b)->required();
    density_cmd->add_option("--mode", mode_name, "exact | sample")->check(CLI::IsMember({"exact", "sample"}));
    density_cmd->add_option("--trials", density_trials, "Samples in sample mode");
    density_cmd->add_option("--seed", density_seed, "Seed in sample mode");

    std::string order_x;
    long long order_cap = 81;
    auto* order_cmd = app.add_subcommand("order", "Order of an element");
    order_cmd->add_option("x", order_x)->required();
    order_cmd->add_option("--cap", order_cap, "Largest order searched");

    auto* tables_cmd = app.add_subcommand("tables", "Validate and print the formula tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Text;
    std::optional<Tables> tables;
    try {
        tables = tables_dir.empty() ? Tables::shipped() : load_tables(tables_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto loop_or_fail = [&]() -> std::optional<Loop> {
        try {
            return Loop(*tables);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return std::nullopt;
        }
    };

    CommandResult result;
    if (*verify_cmd) {
        result = cmd_verify(verify, *tables, format);
    } else if (*prove_cmd) {
        result = cmd_prove(claim, *tables, format);
    } else if (*tables_cmd) {
        result = cmd_tables(*tables, format);
    } else if (*density_cmd) {
        result = cmd_density(density_a, density_b, mode_name == "exact" ? DensityMode::Exact : DensityMode::Sample, density_trials,
                             density_seed, *tables, format);
    } else {
        const auto loop = loop_or_fail();
        if (!loop) return kExitFailure;
        if (*eval_cmd) {
            result = cmd_eval(expression, *loop, format);
        } else if (*closure_cmd) {
            result = cmd_closure(generators, closure_cap, *loop, format, list_elements);
        } else if (*order_cmd) {
            result = cmd_order(order_x, order_cap, *loop, format);
        }
    }
    (result.exit_code == kExitUsage ? std::cerr : std::cout) << result.output;
    return result.exit_code;
}
