// Batch front-end for the deformed Jaynes-Cummings simulator: named figure
// presets, key=value config files with flag overrides, CSV emission, table
// reproduction and the self-validation suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "njc/model.hpp"
#include "njc/scenario.hpp"
#include "njc/tables.hpp"
#include "njc/validate.hpp"

namespace {

struct ScenarioFlags {
    std::string preset;
    std::string config_path;
    std::string model, state, delta, n_max, out;
    double amp = 0.0, k = 0.0, lambda = 0.0, t_max = 0.0, dt = 0.0;
};

// precedence: defaults < preset < config file < explicit flags
njc::ScenarioConfig assemble(const CLI::App& cmd, const ScenarioFlags& f) {
    njc::ScenarioConfig cfg;
    if (!f.preset.empty()) cfg = njc::preset(f.preset);
    if (!f.config_path.empty()) cfg = njc::load_config_file(f.config_path, cfg);
    if (cmd.count("--model")) cfg.model = f.model;
    if (cmd.count("--state")) cfg.state = f.state;
    if (cmd.count("--amp")) cfg.amp = f.amp;
    if (cmd.count("--k")) cfg.k = f.k;
    if (cmd.count("--delta")) cfg.delta = f.delta;
    if (cmd.count("--lambda")) cfg.lambda = f.lambda;
    if (cmd.count("--tmax")) cfg.t_max = f.t_max;
    if (cmd.count("--dt")) cfg.dt = f.dt;
    if (cmd.count("--nmax")) cfg.n_max = f.n_max;
    if (cmd.count("--out")) cfg.out = f.out;
    return cfg;
}

void add_scenario_flags(CLI::App& cmd, ScenarioFlags& f) {
    cmd.add_option("--preset", f.preset, "named figure preset (see 'describe')");
    cmd.add_option("--config", f.config_path, "key=value config file; flags win");
    cmd.add_option("--model", f.model, "single | two");
    cmd.add_option("--state", f.state, "cs | sv | pc | tsv");
    cmd.add_option("--amp", f.amp, "state amplitude (alpha, r or zeta)");
    cmd.add_option("--k", f.k, "deformation parameter");
    cmd.add_option("--delta", f.delta, "detuning value or 'critical'");
    cmd.add_option("--lambda", f.lambda, "coupling constant");
    cmd.add_option("--tmax", f.t_max, "time span in lambda*t units");
    cmd.add_option("--dt", f.dt, "grid step in lambda*t units");
    cmd.add_option("--nmax", f.n_max, "Fock truncation or 'auto'");
    cmd.add_option("--out", f.out, "output CSV path (stdout when omitted)");
}

int run_table_cmd(const std::string& which, const std::string& out) {
    std::ostringstream buf;
    if (which == "table1") {
        njc::write_table1_csv(buf, njc::run_table1());
    } else if (which == "table2") {
        njc::write_table2_csv(buf, njc::run_table2());
    } else {
        std::cerr << "table: expected 'table1' or 'table2', got '" << which << "'\n";
        return 1;
    }
    if (out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "table: cannot open '" << out << "'\n";
            return 1;
        }
        f << buf.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed Jaynes-Cummings simulator"};
    app.require_subcommand(1);

    // timeseries
    auto* ts = app.add_subcommand("timeseries", "emit a time-series CSV for one scenario");
    ScenarioFlags tsf;
    add_scenario_flags(*ts, tsf);

    // table
    auto* tb = app.add_subcommand("table", "reproduce a reference table with diffs");
    std::string which, table_out;
    tb->add_option("which", which, "table1 | table2")->required();
    tb->add_option("--out", table_out, "output CSV path (stdout when omitted)");

    // validate
    auto* va = app.add_subcommand("validate", "run oracle, algebra and identity suites");

    // critical-detuning
    auto* cd = app.add_subcommand("critical-detuning", "print the critical detuning");
    std::string cd_model = "single";
    double cd_nbar = 30.0, cd_k = 1e-4, cd_lambda = 1e-3;
    cd->add_option("--model", cd_model, "single | two");
    cd->add_option("--nbar", cd_nbar, "mean photon number (total for two-mode)")->required();
    cd->add_option("--k", cd_k, "deformation parameter")->required();
    cd->add_option("--lambda", cd_lambda, "coupling constant")->required();

    // describe
    auto* de = app.add_subcommand("describe", "print a preset as a config file");
    std::string de_preset;
    de->add_option("--preset", de_preset, "preset name; lists all when omitted");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ts->parsed()) {
            njc::run_timeseries(assemble(*ts, tsf));
            return 0;
        }
        if (tb->parsed()) return run_table_cmd(which, table_out);
        if (va->parsed()) {
            const njc::ValidationReport rep = njc::run_validation();
            njc::print_report(rep, std::cout);
            return rep.all_pass() ? 0 : 1;
        }
        if (cd->parsed()) {
            if (cd_model == "single") {
                njc::SingleModeParams p(1.0, cd_lambda, cd_k, 0.0);
                std::cout << njc::format_csv_value(njc::critical_detuning_single(cd_nbar, p)) << '\n';
            } else if (cd_model == "two") {
                njc::TwoModeParams p(0.5, 0.5, cd_lambda, cd_k, 0.0);
                std::cout << njc::format_csv_value(njc::critical_detuning_two(cd_nbar, p)) << '\n';
            } else {
                std::cerr << "critical-detuning: model must be 'single' or 'two'\n";
                return 1;
            }
            return 0;
        }
        if (de->parsed()) {
            if (de_preset.empty()) {
                for (const std::string& name : njc::preset_names()) std::cout << name << '\n';
            } else {
                std::cout << njc::describe(njc::preset(de_preset));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
