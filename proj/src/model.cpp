#include "njc/model.hpp"

#include <cmath>

namespace njc {

namespace {

void check_common(double omega, double lambda, double k) {
    if (!(omega > 0.0)) throw std::invalid_argument("model: omega must be positive");
    if (!(lambda > 0.0)) throw std::invalid_argument("model: lambda must be positive");
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("model: k must lie in [0, 1]");
}

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("model: photon number must be nonnegative");
}

}  // namespace

SingleModeParams::SingleModeParams(double omega_, double lambda_, double k_, double delta_)
    : omega(omega_), lambda(lambda_), k(k_), delta(delta_) {
    check_common(omega, lambda, k);
}

TwoModeParams::TwoModeParams(double omega1_, double omega2_, double lambda_, double k_, double delta_)
    : omega1(omega1_), omega2(omega2_), lambda(lambda_), k(k_), delta(delta_) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw std::invalid_argument("model: mode frequencies must be positive");
    check_common(omega1 + omega2, lambda, k);
}

double eta_single(int n, double k) {
    check_n(n);
    return std::sqrt((1.0 + n) * (1.0 + k * n));
}

double detuning_single(int n, const SingleModeParams& p) {
    check_n(n);
    return p.delta - 2.0 * p.k * p.omega * n;
}

double rabi_single(int n, const SingleModeParams& p) {
    const double dn = detuning_single(n, p);
    const double c = 2.0 * p.lambda * eta_single(n, p.k);
    return std::hypot(dn, c);
}

SpectralPoint spectral_point_single(int n, const SingleModeParams& p) {
    return {n, eta_single(n, p.k), detuning_single(n, p), rabi_single(n, p)};
}

double critical_detuning_single(double n_bar, const SingleModeParams& p) {
    if (p.k <= 0.0)
        throw std::invalid_argument("critical detuning: requires k > 0 (no Rabi minimum at k = 0)");
    const double l2 = p.lambda * p.lambda;
    const double w = p.omega;
    return (n_bar * 2.0 * p.k * w * (p.k + l2) + l2 * w * w * (1.0 + p.k)) / p.k;
}

double n_bar_single(double delta, const SingleModeParams& p) {
    if (p.k <= 0.0)
        throw std::invalid_argument("n_bar: requires k > 0 (no Rabi minimum at k = 0)");
    const double l2 = p.lambda * p.lambda;
    const double w = p.omega;
    return (p.k * delta - l2 * w * w * (1.0 + p.k)) / (2.0 * p.k * w * (p.k + l2));
}

double eta_two(int n, double k) {
    check_n(n);
    return (1.0 + n) * (1.0 + k * n);
}

double detuning_two(int n, const TwoModeParams& p) {
    check_n(n);
    return p.delta - 2.0 * p.k * p.omega1 * n - 2.0 * p.k * p.omega2 * n;
}

double rabi_two(int n, const TwoModeParams& p) {
    const double dn = detuning_two(n, p);
    const double c = 2.0 * p.lambda * eta_two(n, p.k);
    return std::hypot(dn, c);
}

SpectralPoint spectral_point_two(int n, const TwoModeParams& p) {
    return {n, eta_two(n, p.k), detuning_two(n, p), rabi_two(n, p)};
}

double critical_detuning_two(double n_bar_total, const TwoModeParams& p) {
    if (p.k <= 0.0)
        throw std::invalid_argument("critical detuning: requires k > 0 (no Rabi minimum at k = 0)");
    const double w = p.omega_total();
    const double g2 = p.lambda * p.lambda;
    const double nb = n_bar_total;
    const double bracket =
        (1.0 + p.k) * (2.0 + nb + p.k * nb + 1.5 * nb * nb * p.k) + 0.5 * nb * nb * nb * p.k * p.k;
    return p.k * w * nb + g2 / (p.k * w) * bracket;
}

}  // namespace njc
