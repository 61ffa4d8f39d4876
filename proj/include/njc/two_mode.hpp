#pragma once

#include <vector>

#include "njc/model.hpp"
#include "njc/single_mode.hpp"
#include "njc/spectral.hpp"
#include "njc/states.hpp"
#include "njc/types.hpp"

namespace njc {

/// Paired-basis joint amplitudes: c_e[n] multiplies |e,n,n>, c_g[n]
/// multiplies |g,n,n>.  Unpaired states never appear: block n couples
/// (c_e[n], c_g[n+1]) and the blocks are disjoint.
struct PairedJointAmplitudes {
    std::vector<cplx> c_e;
    std::vector<cplx> c_g;
    double time = 0.0;

    int n_max() const { return static_cast<int>(c_e.size()) - 1; }
    double norm_sq() const;
};

class TwoModeEvolver {
  public:
    TwoModeEvolver(const PairedFockVector& field0, const TwoModeParams& p);  // atom in |e>
    TwoModeEvolver(PairedJointAmplitudes initial, const TwoModeParams& p);

    PairedJointAmplitudes at(double t) const;
    const TwoModeParams& params() const { return params_; }

  private:
    PairedJointAmplitudes init_;
    TwoModeParams params_;
    std::vector<double> half_delta_;
    std::vector<double> half_rabi_;
    std::vector<double> coupling_over_;
};

PairedJointAmplitudes evolve_two(const PairedFockVector& field0, const TwoModeParams& p, double t);
PairedJointAmplitudes evolve_two(const PairedJointAmplitudes& initial, const TwoModeParams& p,
                                 double t);

double inversion_two(const PairedJointAmplitudes& amps);
AtomDensity atomic_density_two(const PairedJointAmplitudes& amps);
double coherence_two(const PairedJointAmplitudes& amps);

/// T_{A,F1xF2}: linear entropy of the atomic reduced density matrix.
double tangle_a_ff(const PairedJointAmplitudes& amps);

/// rho_{A x F1}: block diagonal over n with 2x2 blocks on {|e,n>, |g,n>},
/// interleaved layout (row 2n = e,n; row 2n+1 = g,n).
HermitianMatrix rho_a_f1(const PairedJointAmplitudes& amps);

/// T_{AxF1,F2} and T_{AxF2,F1}: base-2 von Neumann entropy across the cut,
/// computed from the per-block eigenvalues of the reduced density matrix.
/// The paired state is exchange symmetric, so the two are identical.
double tangle_af1_f2(const PairedJointAmplitudes& amps);
double tangle_af2_f1(const PairedJointAmplitudes& amps);

/// Eigenvalues of rho_{F2}, which is diagonal in the paired representation:
/// p_n = |c_e[n]|^2 + |c_g[n]|^2.  Independent route to the same entropy.
std::vector<double> rho_f2_probabilities(const PairedJointAmplitudes& amps);

/// Dense field-field reduced density matrix a_{n,m} on |n,n><m,m|.
HermitianMatrix rho_f1f2(const PairedJointAmplitudes& amps);

/// E_{F1,F2} = H(diag a) - S(a) with S from the spectral module.
double relative_entropy(const PairedJointAmplitudes& amps);

struct EntanglementRecord {
    double time = 0.0;
    double w_t = 0.0;
    double tangle_a_ff = 0.0;
    double tangle_af1_f2 = 0.0;
    double tangle_af2_f1 = 0.0;
    double relative_entropy = 0.0;
    double coherence = 0.0;
};

/// Full record at one instant.  Verifies normalization (1e-10), the
/// W^2 = 1 - T - 4 coh^2 identity (1e-12), exact exchange symmetry of the
/// tangles, and the two entropy routes against each other (1e-10).
EntanglementRecord measures_at(const PairedJointAmplitudes& amps);

/// Trapezoidal time averages of every record field over [0, T]; the
/// returned record carries time = T.
EntanglementRecord mean_measures(const PairedFockVector& field0, const TwoModeParams& p, double T,
                                 double dt);

}  // namespace njc
