#include "njc/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "njc/single_mode.hpp"
#include "njc/two_mode.hpp"
#include "parallel.hpp"

namespace njc {

namespace {

const std::map<std::string, StateFamily> kFamilies = {
    {"cs", StateFamily::Coherent},
    {"sv", StateFamily::SqueezedVacuum},
    {"pc", StateFamily::PairCoherent},
    {"tsv", StateFamily::TwoModeSqueezedVacuum},
};

bool is_two_mode_family(StateFamily f) {
    return f == StateFamily::PairCoherent || f == StateFamily::TwoModeSqueezedVacuum;
}

double parse_number(const std::string& text, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("scenario: cannot parse ") + what + " '" + text + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument(std::string("scenario: trailing junk in ") + what + " '" + text + "'");
    return v;
}

}  // namespace

StateFamily family_of(const std::string& state_name) {
    const auto it = kFamilies.find(state_name);
    if (it == kFamilies.end())
        throw std::invalid_argument("scenario: unknown state '" + state_name +
                                    "' (expected cs, sv, pc or tsv)");
    return it->second;
}

double mean_for_amplitude(StateFamily family, double amp) {
    switch (family) {
        case StateFamily::Coherent:
            return amp * amp;
        case StateFamily::SqueezedVacuum:
            return std::sinh(amp) * std::sinh(amp);
        case StateFamily::TwoModeSqueezedVacuum: {
            const double mu = std::tanh(amp);
            return 2.0 * mu * mu / (1.0 - mu * mu);
        }
        case StateFamily::PairCoherent: {
            // mean of the truncation-consistent distribution; evaluated from
            // a generously converged series through a throwaway state
            const int cap = static_cast<int>(std::ceil(4.0 * amp)) + 64;
            return mean_photon_number(pair_coherent(amp, cap, 0.9999));
        }
    }
    throw std::logic_error("scenario: unknown family");
}

ResolvedScenario resolve(const ScenarioConfig& cfg) {
    ResolvedScenario r;
    r.config = cfg;
    r.family = family_of(cfg.state);

    const bool two = cfg.model == "two";
    if (cfg.model != "single" && cfg.model != "two")
        throw std::invalid_argument("scenario: model must be 'single' or 'two'");
    if (two != is_two_mode_family(r.family))
        throw std::invalid_argument("scenario: state '" + cfg.state + "' does not fit model '" +
                                    cfg.model + "'");
    if (!(cfg.t_max > 0.0) || !(cfg.dt > 0.0))
        throw std::invalid_argument("scenario: tmax and dt must be positive");
    if (cfg.amp < 0.0) throw std::invalid_argument("scenario: amp must be nonnegative");

    r.mean_photons = mean_for_amplitude(r.family, cfg.amp);

    if (cfg.n_max == "auto") {
        const StateFamily fams[] = {r.family};
        r.n_max_value = auto_truncation(r.mean_photons, kDefaultTailTol, fams);
    } else {
        r.n_max_value = static_cast<int>(parse_number(cfg.n_max, "n_max"));
        if (r.n_max_value < 2) throw std::invalid_argument("scenario: n_max must be at least 2");
    }

    if (cfg.delta == "critical") {
        if (two) {
            TwoModeParams p(0.5, 0.5, cfg.lambda, cfg.k, 0.0);
            r.delta_value = critical_detuning_two(r.mean_photons, p);
        } else {
            SingleModeParams p(1.0, cfg.lambda, cfg.k, 0.0);
            r.delta_value = critical_detuning_single(r.mean_photons, p);
        }
    } else {
        r.delta_value = parse_number(cfg.delta, "delta");
    }
    // validates lambda/k ranges as a side effect
    if (two)
        TwoModeParams(0.5, 0.5, cfg.lambda, cfg.k, r.delta_value);
    else
        SingleModeParams(1.0, cfg.lambda, cfg.k, r.delta_value);
    return r;
}

namespace {

ScenarioConfig make_single(double amp, const char* state, double k, double delta) {
    ScenarioConfig c;
    c.model = "single";
    c.state = state;
    c.amp = amp;
    c.k = k;
    c.lambda = 1e-3;
    c.t_max = 100.0;
    c.dt = 0.01;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", delta);
    c.delta = buf;
    return c;
}

ScenarioConfig make_two(double amp, const char* state, double k, double delta) {
    ScenarioConfig c;
    c.model = "two";
    c.state = state;
    c.amp = amp;
    c.k = k;
    c.lambda = 2e-3;
    c.t_max = 20.0;
    c.dt = 0.005;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", delta);
    c.delta = buf;
    return c;
}

std::map<std::string, ScenarioConfig> build_presets() {
    std::map<std::string, ScenarioConfig> m;
    const double alpha30 = std::sqrt(30.0);
    const double sv_r = 2.402;
    const double pc_zeta = 1.778;
    const double tsv_r = 1.032;

    // single-mode grids: columns k = 0, 1e-4 with detunings {0, 0.01, 0.016061},
    // column k = 1e-3 with detunings {0, 0.05, 0.061061}; panels lettered
    // column-major (a..i).
    const double ks[3] = {0.0, 1e-4, 1e-3};
    const double deltas_low[3] = {0.0, 0.01, 0.016061};
    const double deltas_high[3] = {0.0, 0.05, 0.061061};
    auto add_grid = [&](const std::string& fig, const char* state, double amp) {
        char letter = 'a';
        for (int col = 0; col < 3; ++col) {
            const double* ds = (col == 2) ? deltas_high : deltas_low;
            for (int row = 0; row < 3; ++row) {
                m[fig + letter] = make_single(amp, state, ks[col], ds[row]);
                ++letter;
            }
        }
    };
    add_grid("fig1", "cs", alpha30);  // population inversion, coherent state
    add_grid("fig2", "sv", sv_r);     // population inversion, squeezed vacuum
    add_grid("fig4", "cs", alpha30);  // entanglement, coherent state
    add_grid("fig5", "sv", sv_r);     // entanglement, squeezed vacuum

    // fig3: resonant, k = 1e-2, mean photon number 1 vs 30
    m["fig3a"] = make_single(1.0, "cs", 1e-2, 0.0);
    m["fig3b"] = make_single(alpha30, "cs", 1e-2, 0.0);

    // two-mode grids: columns k = 0, 2e-3; rows delta = 0, 0.01, 0.0161
    const double ks2[2] = {0.0, 2e-3};
    const double deltas2[3] = {0.0, 0.01, 0.0161};
    auto add_grid2 = [&](const std::string& fig, const char* state, double amp) {
        char letter = 'a';
        for (int col = 0; col < 2; ++col)
            for (int row = 0; row < 3; ++row) {
                m[fig + letter] = make_two(amp, state, ks2[col], deltas2[row]);
                ++letter;
            }
    };
    add_grid2("fig6", "pc", pc_zeta);
    add_grid2("fig7", "tsv", tsv_r);
    add_grid2("fig8", "pc", pc_zeta);
    add_grid2("fig9", "tsv", tsv_r);
    return m;
}

const std::map<std::string, ScenarioConfig>& presets() {
    static const std::map<std::string, ScenarioConfig> m = build_presets();
    return m;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(presets().size());
    for (const auto& [name, cfg] : presets()) names.push_back(name);
    return names;
}

ScenarioConfig preset(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) throw std::invalid_argument("scenario: unknown preset '" + name + "'");
    return it->second;
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string describe(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "model=" << cfg.model << '\n'
       << "state=" << cfg.state << '\n'
       << "amp=" << format_csv_value(cfg.amp) << '\n'
       << "k=" << format_csv_value(cfg.k) << '\n'
       << "delta=" << cfg.delta << '\n'
       << "lambda=" << format_csv_value(cfg.lambda) << '\n'
       << "tmax=" << format_csv_value(cfg.t_max) << '\n'
       << "dt=" << format_csv_value(cfg.dt) << '\n'
       << "nmax=" << cfg.n_max << '\n';
    if (!cfg.out.empty()) os << "out=" << cfg.out << '\n';
    const ResolvedScenario r = resolve(cfg);
    os << "# resolved: delta=" << format_csv_value(r.delta_value) << " nmax=" << r.n_max_value
       << " mean_photons=" << format_csv_value(r.mean_photons) << '\n';
    return os.str();
}

ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "model") base.model = val;
        else if (key == "state") base.state = val;
        else if (key == "amp") base.amp = parse_number(val, "amp");
        else if (key == "k") base.k = parse_number(val, "k");
        else if (key == "delta") base.delta = val;
        else if (key == "lambda") base.lambda = parse_number(val, "lambda");
        else if (key == "tmax") base.t_max = parse_number(val, "tmax");
        else if (key == "dt") base.dt = parse_number(val, "dt");
        else if (key == "nmax") base.n_max = val;
        else if (key == "out") base.out = val;
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return base;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("scenario: cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

namespace {

void run_single_series(const ResolvedScenario& r, std::ostream& os) {
    const SingleModeParams params(1.0, r.config.lambda, r.config.k, r.delta_value);
    const FockVector field0 = (r.family == StateFamily::Coherent)
                                  ? coherent(r.config.amp, r.n_max_value)
                                  : squeezed_vacuum(r.config.amp, 0.0, r.n_max_value);
    const SingleModeEvolver evolver(field0, params);
    const auto steps = static_cast<std::size_t>(std::llround(r.config.t_max / r.config.dt));
    const double step_lt = r.config.t_max / static_cast<double>(steps);
    std::vector<SingleRecord> recs(steps + 1);
    detail::parallel_for(steps + 1, [&](std::size_t i) {
        const double lt = step_lt * static_cast<double>(i);
        recs[i] = single_record(evolver.at(lt / params.lambda));
        recs[i].time = lt;
    });
    os << "lambda_t,W_S,L,coherence\n";
    for (const SingleRecord& rec : recs)
        os << format_csv_value(rec.time) << ',' << format_csv_value(rec.w_s) << ','
           << format_csv_value(rec.linear_entropy) << ',' << format_csv_value(rec.coherence) << '\n';
}

void run_two_series(const ResolvedScenario& r, std::ostream& os) {
    const TwoModeParams params(0.5, 0.5, r.config.lambda, r.config.k, r.delta_value);
    const PairedFockVector field0 = (r.family == StateFamily::PairCoherent)
                                        ? pair_coherent(r.config.amp, r.n_max_value)
                                        : two_mode_squeezed_vacuum(r.config.amp, r.n_max_value);
    const TwoModeEvolver evolver(field0, params);
    const auto steps = static_cast<std::size_t>(std::llround(r.config.t_max / r.config.dt));
    const double step_lt = r.config.t_max / static_cast<double>(steps);
    std::vector<EntanglementRecord> recs(steps + 1);
    detail::parallel_for(steps + 1, [&](std::size_t i) {
        const double lt = step_lt * static_cast<double>(i);
        recs[i] = measures_at(evolver.at(lt / params.lambda));
        recs[i].time = lt;
    });
    os << "lambda_t,W_T,T_A_FF,T_AF1_F2,T_AF2_F1,E,coherence\n";
    for (const EntanglementRecord& rec : recs)
        os << format_csv_value(rec.time) << ',' << format_csv_value(rec.w_t) << ','
           << format_csv_value(rec.tangle_a_ff) << ',' << format_csv_value(rec.tangle_af1_f2) << ','
           << format_csv_value(rec.tangle_af2_f1) << ',' << format_csv_value(rec.relative_entropy)
           << ',' << format_csv_value(rec.coherence) << '\n';
}

}  // namespace

void run_timeseries(const ScenarioConfig& cfg, std::ostream& os) {
    const ResolvedScenario r = resolve(cfg);
    if (r.config.model == "single")
        run_single_series(r, os);
    else
        run_two_series(r, os);
}

void run_timeseries(const ScenarioConfig& cfg) {
    if (cfg.out.empty()) {
        run_timeseries(cfg, std::cout);
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("scenario: cannot open output file '" + cfg.out + "'");
    run_timeseries(cfg, f);
    if (!f) throw std::runtime_error("scenario: error writing '" + cfg.out + "'");
}

}  // namespace njc
