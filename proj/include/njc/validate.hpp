#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace njc {

struct ValidationCheck {
    std::string name;
    double value = 0.0;      // measured deviation or flag
    double threshold = 0.0;  // pass when value < threshold
    bool pass = false;
    std::string note;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    double max_oracle_deviation = 0.0;  // phase-insensitive, over all oracle scenarios
    bool all_pass() const;
};

/// Runs the algebra, oracle-equivalence, identity, and periodicity suites.
ValidationReport run_validation();

/// Human-readable lines followed by a machine-readable key=value block.
void print_report(const ValidationReport& report, std::ostream& os);

}  // namespace njc
