#pragma once

#include <span>
#include <vector>

#include "njc/types.hpp"

namespace njc {

inline constexpr double kDefaultTailTol = 1e-12;

/// Truncated single-mode field state: amplitudes[n] multiplies |n>.
/// Constructors renormalize to exactly 1 and record the probability mass
/// that fell beyond the truncation.
struct FockVector {
    std::vector<cplx> amplitudes;
    double truncated_tail = 0.0;

    int n_max() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm_sq() const;
};

/// Truncated paired two-mode state: amplitudes[n] multiplies |n,n>.
/// Unpaired |n,m> components are unrepresentable by construction.
struct PairedFockVector {
    std::vector<cplx> amplitudes;
    double truncated_tail = 0.0;

    int n_max() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm_sq() const;
};

FockVector coherent(cplx alpha, int n_max, double tail_tol = kDefaultTailTol);
FockVector squeezed_vacuum(double r, double theta, int n_max, double tail_tol = kDefaultTailTol);
PairedFockVector pair_coherent(cplx zeta, int n_max, double tail_tol = kDefaultTailTol);
PairedFockVector two_mode_squeezed_vacuum(double r, int n_max, double tail_tol = kDefaultTailTol);

double mean_photon_number(const FockVector& state);
/// Total mean photon number of both modes, sum_n 2n |c_n|^2.
double mean_photon_number(const PairedFockVector& state);

enum class StateFamily { Coherent, SqueezedVacuum, PairCoherent, TwoModeSqueezedVacuum };

inline constexpr StateFamily kAllFamilies[] = {
    StateFamily::Coherent, StateFamily::SqueezedVacuum,
    StateFamily::PairCoherent, StateFamily::TwoModeSqueezedVacuum};

/// Smallest truncation of the form ceil(mean + c*sqrt(mean)) + 16 whose tail
/// mass is below tail_tol for every requested family at the given mean photon
/// number (total photon number for the paired families).  Note the squeezed
/// vacuum decays far slower than a Poissonian: at mean 30 it needs n_max in
/// the 1500s while the coherent state is done near 80.
int auto_truncation(double target_mean, double tail_tol,
                    std::span<const StateFamily> families);
int auto_truncation(double target_mean, double tail_tol = kDefaultTailTol);

/// Tail mass beyond n_max for one family at the given mean.
double family_tail(StateFamily family, double target_mean, int n_max);

/// Amplitude parameter reproducing the mean: |alpha|^2, sinh^2 r, the
/// pair-coherent zeta (solved from the Bessel ratio), or the TSV squeeze r.
double amplitude_for_mean(StateFamily family, double target_mean);

}  // namespace njc
