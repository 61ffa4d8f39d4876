#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "njc/model.hpp"
#include "njc/states.hpp"

namespace njc {

/// One batch run: which model, which initial field state, and the grid.
/// t_max and dt are in scaled-time (lambda t) units.  delta and n_max stay
/// textual so "critical" and "auto" survive round-trips through config files.
struct ScenarioConfig {
    std::string model = "single";  // single | two
    std::string state = "cs";      // cs | sv | pc | tsv
    double amp = 5.477225575051661;  // alpha (cs), r (sv), zeta (pc), r (tsv)
    double k = 0.0;
    std::string delta = "0";  // number or "critical"
    double lambda = 1e-3;
    double t_max = 100.0;
    double dt = 0.01;
    std::string n_max = "auto";  // "auto" or integer
    std::string out;             // output path; empty means stdout
};

struct ResolvedScenario {
    ScenarioConfig config;
    StateFamily family;
    double delta_value = 0.0;
    int n_max_value = 0;
    double mean_photons = 0.0;  // of the initial field state (total for paired)
};

StateFamily family_of(const std::string& state_name);
double mean_for_amplitude(StateFamily family, double amp);

/// Validates the config and resolves "critical" / "auto".
ResolvedScenario resolve(const ScenarioConfig& cfg);

// preset catalogue, one per figure panel (fig1a ... fig9f)
std::vector<std::string> preset_names();
ScenarioConfig preset(const std::string& name);

std::string describe(const ScenarioConfig& cfg);
ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

/// Writes the time series CSV.  Single mode columns:
///   lambda_t,W_S,L,coherence
/// two mode columns:
///   lambda_t,W_T,T_A_FF,T_AF1_F2,T_AF2_F1,E,coherence
void run_timeseries(const ScenarioConfig& cfg, std::ostream& os);
/// As above, honoring cfg.out (stdout when empty).
void run_timeseries(const ScenarioConfig& cfg);

/// 12-significant-digit CSV number formatting used everywhere.
std::string format_csv_value(double v);

}  // namespace njc
