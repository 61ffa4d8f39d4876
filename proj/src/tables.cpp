#include "njc/tables.hpp"

#include <cmath>
#include <ostream>

#include "njc/scenario.hpp"
#include "njc/single_mode.hpp"
#include "njc/two_mode.hpp"

namespace njc {

const std::array<Table1Row, 9>& table1_reference() {
    static const std::array<Table1Row, 9> rows = {{
        {0.0, 0.0, 0.84, 0.97},
        {0.0, 1e-4, 0.89, 0.94},
        {0.0, 1e-3, 0.04, 0.34},
        {0.01, 0.0, 0.56, 0.64},
        {0.01, 1e-4, 0.91, 0.77},
        {0.01, 1e-3, 0.75, 0.26},
        {0.0161, 0.0, 0.30, 0.44},
        {0.0161, 1e-4, 0.74, 0.62},
        {0.0161, 1e-3, 0.81, 0.24},
    }};
    return rows;
}

std::vector<Table1Result> run_table1() {
    const double alpha = std::sqrt(30.0);
    const StateFamily cs_fam[] = {StateFamily::Coherent};
    const StateFamily sv_fam[] = {StateFamily::SqueezedVacuum};
    const int n_cs = auto_truncation(mean_for_amplitude(StateFamily::Coherent, alpha),
                                     kDefaultTailTol, cs_fam);
    const int n_sv = auto_truncation(mean_for_amplitude(StateFamily::SqueezedVacuum, kSvSqueeze),
                                     kDefaultTailTol, sv_fam);
    const FockVector cs = coherent(alpha, n_cs);
    const FockVector sv = squeezed_vacuum(kSvSqueeze, 0.0, n_sv);
    const double T = kSingleTmax / kSingleLambda;
    const double dt = kSingleDt / kSingleLambda;

    std::vector<Table1Result> out;
    out.reserve(table1_reference().size());
    for (const Table1Row& row : table1_reference()) {
        Table1Result res;
        res.row = row;
        const SingleModeParams p(1.0, kSingleLambda, row.k, row.delta);
        res.cs = mean_linear_entropy(cs, p, T, dt);
        res.sv = mean_linear_entropy(sv, p, T, dt);
        out.push_back(res);
    }
    return out;
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Result>& results) {
    os << "delta,k,mean_L_cs,ref_cs,diff_cs,mean_L_sv,ref_sv,diff_sv\n";
    for (const Table1Result& r : results) {
        os << format_csv_value(r.row.delta) << ',' << format_csv_value(r.row.k) << ','
           << format_csv_value(r.cs) << ',' << format_csv_value(r.row.ref_cs) << ','
           << format_csv_value(std::abs(r.cs - r.row.ref_cs)) << ',' << format_csv_value(r.sv)
           << ',' << format_csv_value(r.row.ref_sv) << ','
           << format_csv_value(std::abs(r.sv - r.row.ref_sv)) << '\n';
    }
}

const std::array<Table2Row, 6>& table2_reference() {
    static const std::array<Table2Row, 6> rows = {{
        {0.0, 0.0, 0.39, 0.50, 1.89, 2.41, 1.42, 1.86},
        {0.0, 2e-3, 0.41, 0.70, 1.88, 2.40, 1.38, 1.65},
        {0.01, 0.0, 0.58, 0.58, 2.10, 2.52, 1.45, 1.86},
        {0.01, 2e-3, 0.61, 0.70, 1.97, 2.51, 1.27, 1.74},
        {0.0161, 0.0, 0.40, 0.40, 2.08, 2.49, 1.60, 1.98},
        {0.0161, 2e-3, 0.66, 0.59, 2.09, 2.51, 1.33, 1.84},
    }};
    return rows;
}

std::vector<Table2Result> run_table2() {
    const StateFamily pc_fam[] = {StateFamily::PairCoherent};
    const StateFamily tsv_fam[] = {StateFamily::TwoModeSqueezedVacuum};
    const int n_pc = auto_truncation(mean_for_amplitude(StateFamily::PairCoherent, kPcAmplitude),
                                     kDefaultTailTol, pc_fam);
    const int n_tsv = auto_truncation(
        mean_for_amplitude(StateFamily::TwoModeSqueezedVacuum, kTsvSqueeze), kDefaultTailTol, tsv_fam);
    const PairedFockVector pc = pair_coherent(kPcAmplitude, n_pc);
    const PairedFockVector tsv = two_mode_squeezed_vacuum(kTsvSqueeze, n_tsv);
    const double T = kTwoTmax / kTwoLambda;
    const double dt = kTwoDt / kTwoLambda;

    std::vector<Table2Result> out;
    out.reserve(table2_reference().size());
    for (const Table2Row& row : table2_reference()) {
        Table2Result res;
        res.row = row;
        const TwoModeParams p(0.5, 0.5, kTwoLambda, row.k, row.delta);
        const EntanglementRecord mpc = mean_measures(pc, p, T, dt);
        const EntanglementRecord mtsv = mean_measures(tsv, p, T, dt);
        res.t_a_ff_pc = mpc.tangle_a_ff;
        res.t_af1_f2_pc = mpc.tangle_af1_f2;
        res.e_pc = mpc.relative_entropy;
        res.t_a_ff_tsv = mtsv.tangle_a_ff;
        res.t_af1_f2_tsv = mtsv.tangle_af1_f2;
        res.e_tsv = mtsv.relative_entropy;
        out.push_back(res);
    }
    return out;
}

void write_table2_csv(std::ostream& os, const std::vector<Table2Result>& results) {
    os << "delta,k"
          ",t_a_ff_pc,ref_t_a_ff_pc,diff_t_a_ff_pc"
          ",t_a_ff_tsv,ref_t_a_ff_tsv,diff_t_a_ff_tsv"
          ",t_af1_f2_pc,ref_t_af1_f2_pc,diff_t_af1_f2_pc"
          ",t_af1_f2_tsv,ref_t_af1_f2_tsv,diff_t_af1_f2_tsv"
          ",e_pc,ref_e_pc,diff_e_pc"
          ",e_tsv,ref_e_tsv,diff_e_tsv\n";
    for (const Table2Result& r : results) {
        auto triple = [&os](double value, double ref) {
            os << ',' << format_csv_value(value) << ',' << format_csv_value(ref) << ','
               << format_csv_value(std::abs(value - ref));
        };
        os << format_csv_value(r.row.delta) << ',' << format_csv_value(r.row.k);
        triple(r.t_a_ff_pc, r.row.ref_t_a_ff_pc);
        triple(r.t_a_ff_tsv, r.row.ref_t_a_ff_tsv);
        triple(r.t_af1_f2_pc, r.row.ref_t_af1_f2_pc);
        triple(r.t_af1_f2_tsv, r.row.ref_t_af1_f2_tsv);
        triple(r.e_pc, r.row.ref_e_pc);
        triple(r.e_tsv, r.row.ref_e_tsv);
        os << '\n';
    }
}

}  // namespace njc
