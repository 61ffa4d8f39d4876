#pragma once

#include <stdexcept>

namespace njc {

/// Parameters of the single-mode deformed Jaynes-Cummings Hamiltonian in
/// scaled units (omega = 1 reproduces the canonical scenarios).  The atomic
/// frequency is stored implicitly through the detuning delta = nu - omega.
struct SingleModeParams {
    double omega = 1.0;    // field frequency
    double lambda = 1e-3;  // atom-field coupling
    double k = 0.0;        // deformation parameter, 0 <= k <= 1
    double delta = 0.0;    // detuning nu - omega

    SingleModeParams() = default;
    SingleModeParams(double omega_, double lambda_, double k_, double delta_);

    double nu() const { return delta + omega; }
    double kerr_strength() const { return k * omega; }  // chi = k*omega
};

/// Two-mode variant.  Both modes share the deformation parameter; the
/// detuning is delta = nu - (omega1 + omega2).  The defaults make
/// omega1 + omega2 = 1, matching the single-mode scaling.
struct TwoModeParams {
    double omega1 = 0.5;
    double omega2 = 0.5;
    double lambda = 2e-3;
    double k = 0.0;
    double delta = 0.0;

    TwoModeParams() = default;
    TwoModeParams(double omega1_, double omega2_, double lambda_, double k_, double delta_);

    double omega_total() const { return omega1 + omega2; }
    double nu() const { return delta + omega_total(); }
};

/// Per-quantum spectral data: interaction element eta_n, effective detuning
/// Delta_n and generalized Rabi frequency Omega_n = sqrt(Delta_n^2 + 4 l^2 eta_n^2).
struct SpectralPoint {
    int n = 0;
    double eta = 0.0;
    double delta_n = 0.0;
    double omega_n = 0.0;
};

// ---- single mode ----
double eta_single(int n, double k);
double detuning_single(int n, const SingleModeParams& p);
double rabi_single(int n, const SingleModeParams& p);
SpectralPoint spectral_point_single(int n, const SingleModeParams& p);

/// Detuning for which the Rabi minimum sits at photon number n_bar.
/// Requires k > 0; no minimum exists in the undeformed model.
double critical_detuning_single(double n_bar, const SingleModeParams& p);
/// Location of the Rabi-frequency minimum for a given detuning (may be
/// negative, meaning no physical minimum).  Exact inverse of the above.
double n_bar_single(double delta, const SingleModeParams& p);

// ---- two mode, paired basis |n,n> ----
double eta_two(int n, double k);
double detuning_two(int n, const TwoModeParams& p);
double rabi_two(int n, const TwoModeParams& p);
SpectralPoint spectral_point_two(int n, const TwoModeParams& p);

/// Critical detuning for total mean photon number N_bar = 2*n_bar.
double critical_detuning_two(double n_bar_total, const TwoModeParams& p);

}  // namespace njc
