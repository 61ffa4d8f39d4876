#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace njc {

/// Reference mean-entanglement table for the single-mode model:
/// rows are (delta, k), columns the coherent-state and squeezed-vacuum means.
struct Table1Row {
    double delta;
    double k;
    double ref_cs;
    double ref_sv;
};

struct Table1Result {
    Table1Row row;
    double cs = 0.0;
    double sv = 0.0;
};

const std::array<Table1Row, 9>& table1_reference();
std::vector<Table1Result> run_table1();
void write_table1_csv(std::ostream& os, const std::vector<Table1Result>& results);

/// Reference mean tangles / relative entropy for the two-mode model.
struct Table2Row {
    double delta;
    double k;
    double ref_t_a_ff_pc, ref_t_a_ff_tsv;
    double ref_t_af1_f2_pc, ref_t_af1_f2_tsv;
    double ref_e_pc, ref_e_tsv;
};

struct Table2Result {
    Table2Row row;
    double t_a_ff_pc = 0.0, t_a_ff_tsv = 0.0;
    double t_af1_f2_pc = 0.0, t_af1_f2_tsv = 0.0;
    double e_pc = 0.0, e_tsv = 0.0;
};

const std::array<Table2Row, 6>& table2_reference();
std::vector<Table2Result> run_table2();
void write_table2_csv(std::ostream& os, const std::vector<Table2Result>& results);

// canonical scenario constants shared by the tables and the presets
inline constexpr double kSingleLambda = 1e-3;
inline constexpr double kSingleTmax = 100.0;  // lambda t
inline constexpr double kSingleDt = 0.01;
inline constexpr double kTwoLambda = 2e-3;
inline constexpr double kTwoTmax = 20.0;
inline constexpr double kTwoDt = 0.005;
inline constexpr double kSvSqueeze = 2.402;
inline constexpr double kPcAmplitude = 1.778;
inline constexpr double kTsvSqueeze = 1.032;

}  // namespace njc
