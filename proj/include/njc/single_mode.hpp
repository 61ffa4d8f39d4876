#pragma once

#include <array>
#include <vector>

#include "njc/model.hpp"
#include "njc/spectral.hpp"
#include "njc/states.hpp"
#include "njc/types.hpp"

namespace njc {

/// Joint atom-field amplitudes: c_e[n] multiplies |e,n>, c_g[n] multiplies
/// |g,n>.  The pair (c_e[n], c_g[n+1]) forms one invariant block; c_g[0] and
/// the truncation-edge c_e[n_max] are uncoupled and stay constant.
struct SingleJointAmplitudes {
    std::vector<cplx> c_e;
    std::vector<cplx> c_g;
    double time = 0.0;

    int n_max() const { return static_cast<int>(c_e.size()) - 1; }
    double norm_sq() const;
};

/// 2x2 reduced density matrix of the atom.
struct AtomDensity {
    double ee = 0.0;
    double gg = 0.0;
    cplx eg{0.0, 0.0};  // <e| rho |g>

    double trace() const { return ee + gg; }
    double purity() const;
    double linear_entropy() const { return 2.0 * (1.0 - purity()); }
    std::array<double, 2> eigenvalues() const;  // ascending
    HermitianMatrix as_matrix() const;
};

/// Precomputes the per-block spectral data once so repeated evaluation at
/// many times stays cheap.  Closed form in the per-block rotating frame;
/// magnitudes coincide with the Schrodinger picture.
class SingleModeEvolver {
  public:
    SingleModeEvolver(const FockVector& field0, const SingleModeParams& p);  // atom in |e>
    SingleModeEvolver(SingleJointAmplitudes initial, const SingleModeParams& p);

    SingleJointAmplitudes at(double t) const;
    const SingleModeParams& params() const { return params_; }

  private:
    SingleJointAmplitudes init_;
    SingleModeParams params_;
    std::vector<double> half_delta_;     // Delta_n / 2 per block
    std::vector<double> half_rabi_;      // Omega_n / 2
    std::vector<double> coupling_over_;  // 2 lambda eta_n / Omega_n
};

SingleJointAmplitudes evolve_single(const FockVector& field0, const SingleModeParams& p, double t);
SingleJointAmplitudes evolve_single(const SingleJointAmplitudes& initial, const SingleModeParams& p,
                                    double t);

double inversion_single(const SingleJointAmplitudes& amps);
AtomDensity atomic_density_single(const SingleJointAmplitudes& amps);
double coherence_single(const SingleJointAmplitudes& amps);
double linear_entropy_single(const SingleJointAmplitudes& amps);

/// One emitted sample; construction verifies normalization (1e-10) and the
/// L = 1 - W^2 - 4 coh^2 identity (1e-12).
struct SingleRecord {
    double time = 0.0;
    double w_s = 0.0;
    double linear_entropy = 0.0;
    double coherence = 0.0;
};

SingleRecord single_record(const SingleJointAmplitudes& amps);

/// Trapezoidal time average of the linear entropy over [0, T].
double mean_linear_entropy(const FockVector& field0, const SingleModeParams& p, double T, double dt);

}  // namespace njc
