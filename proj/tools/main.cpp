#include <iostream>

#include <CLI11.hpp>

#include "shellfe/config.hpp"
#include "shellfe/output.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& preset_name,
                const std::string& output_dir, const std::string& solver_name, double tol,
                int max_steps) {
    using namespace shellfe;

    RunConfig config;
    if (!preset_name.empty()) {
        config = preset(preset_name);
        if (!config_path.empty())
            std::cerr << "note: preset '" << preset_name << "' selected, ignoring config file\n";
    } else if (!config_path.empty()) {
        config = parse_config_file(config_path);
    } else {
        throw ConfigError("either a config file or --preset is required");
    }

    // Explicit flags win over preset/config values; say so.
    if (!output_dir.empty()) {
        std::cout << "override: output.directory = " << output_dir << "\n";
        config.output.directory = output_dir;
    }
    if (!solver_name.empty()) {
        std::cout << "override: solver.method = " << solver_name << "\n";
        if (solver_name == "newton") config.solver.method = SolveMethod::Newton;
        else if (solver_name == "arclength") config.solver.method = SolveMethod::ArcLength;
        else throw ConfigError("--solver expects 'newton' or 'arclength'");
    }
    if (tol > 0.0) {
        std::cout << "override: solver.tolerance = " << tol << "\n";
        config.solver.tolerance = tol;
    }
    if (max_steps > 0) {
        std::cout << "override: solver.max_steps = " << max_steps << "\n";
        config.solver.max_steps = max_steps;
    }

    for (const std::string& warning : config.warnings)
        std::cerr << "warning: " << warning << "\n";

    const ShellModel model = build_model(config.model);
    std::cout << config.name << ": " << model.element_count() << " elements, "
              << model.node_count() << " nodes, " << model.total_dofs() << " dofs ("
              << model.constraints().reduced_size() << " free)\n";

    ResultWriter writer(config, model);
    EquilibriumSolver solver(model);
    const auto on_step = [&](const EquilibriumState& state) {
        writer.on_step(state);
        std::cout << "step " << state.step << ": lambda = " << state.lambda << ", "
                  << state.iterations << " iterations\n";
    };

    std::string status = "converged";
    try {
        if (config.solver.method == SolveMethod::Newton) {
            std::vector<double> schedule;
            for (int i = 1; i <= config.solver.newton_steps; ++i)
                schedule.push_back(config.solver.lambda_stop * i / config.solver.newton_steps);
            solver.newton_solve(schedule, config.solver, on_step);
        } else {
            solver.arc_length_solve(config.solver, on_step);
        }
    } catch (...) {
        writer.finalize("failed");
        throw;
    }
    writer.finalize(status);
    std::cout << "results in " << writer.directory() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlinear hyperelastic shell solver"};
    app.require_subcommand(1);

    std::string config_path, preset_name, output_dir, solver_name;
    double tol = -1.0;
    int max_steps = -1;

    CLI::App* run = app.add_subcommand("run", "solve a model and emit results");
    run->add_option("config", config_path, "JSON config file");
    run->add_option("--preset", preset_name, "built-in benchmark preset");
    run->add_option("--output", output_dir, "output directory");
    run->add_option("--solver", solver_name, "newton|arclength");
    run->add_option("--tol", tol, "relative residual tolerance");
    run->add_option("--max-steps", max_steps, "continuation step limit");

    CLI::App* list = app.add_subcommand("presets", "list built-in presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const std::string& name : shellfe::preset_names()) std::cout << name << "\n";
            return 0;
        }
        return run_command(config_path, preset_name, output_dir, solver_name, tol, max_steps);
    } catch (const shellfe::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const shellfe::ExpressionParseError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const shellfe::BadSurfaceSelector& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const shellfe::NonConvergence& err) {
        std::cerr << "non-convergence: " << err.what() << "\n";
        return 3;
    } catch (const shellfe::ShellError& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
