#include "njc/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace njc {

namespace {

double sum_sq(const std::vector<cplx>& a) {
    double s = 0.0;
    for (const cplx& c : a) s += std::norm(c);
    return s;
}

void check_tail(double tail, double tail_tol, const char* what) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument("states: tail_tol must lie in (0, 1)");
    if (tail > tail_tol)
        throw std::invalid_argument(std::string(what) +
                                    ": truncation too small, tail mass " + std::to_string(tail) +
                                    " exceeds tolerance " + std::to_string(tail_tol));
}

void renormalize(std::vector<cplx>& a) {
    const double s = [&] {
        double t = 0.0;
        for (const cplx& c : a) t += std::norm(c);
        return t;
    }();
    const double inv = 1.0 / std::sqrt(s);
    for (cplx& c : a) c *= inv;
}

// Raw coherent probabilities p_n, analytic total 1.
double coherent_partial_mass(double abs_alpha, int n_max) {
    double p = std::exp(-abs_alpha * abs_alpha);  // p_0
    double mass = p;
    for (int n = 0; n < n_max; ++n) {
        p *= abs_alpha * abs_alpha / (n + 1.0);
        mass += p;
    }
    return mass;
}

double squeezed_partial_mass(double r, int n_max) {
    if (r == 0.0) return 1.0;
    const double t2 = std::tanh(r) * std::tanh(r);
    double p = 1.0 / std::cosh(r);  // p_0
    double mass = p;
    int l = 0;
    while (2 * (l + 1) <= n_max) {
        const double q = std::sqrt((2.0 * l + 1.0) * (2.0 * l + 2.0)) / (2.0 * (l + 1.0));
        p *= q * q * t2;
        mass += p;
        ++l;
    }
    return mass;
}

// Power series sums for the pair-coherent normalization: terms
// t_n = |zeta|^(2n) / (n!)^2, so that I0(2|zeta|) = sum t_n.
struct PcSeries {
    double total = 1.0;       // converged I0
    double mean_pairs = 0.0;  // sum n t_n / sum t_n
};

PcSeries pc_series(double abs_zeta) {
    PcSeries s;
    const double z2 = abs_zeta * abs_zeta;
    double t = 1.0, sum = 1.0, nsum = 0.0;
    for (int n = 1; n < 100000; ++n) {
        t *= z2 / (static_cast<double>(n) * n);
        sum += t;
        nsum += n * t;
        if (t < sum * 1e-18) break;
    }
    s.total = sum;
    s.mean_pairs = nsum / sum;
    return s;
}

double pc_partial_sum(double abs_zeta, int n_max) {
    const double z2 = abs_zeta * abs_zeta;
    double t = 1.0, sum = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        t *= z2 / (static_cast<double>(n) * n);
        sum += t;
    }
    return sum;
}

}  // namespace

double FockVector::norm_sq() const { return sum_sq(amplitudes); }
double PairedFockVector::norm_sq() const { return sum_sq(amplitudes); }

FockVector coherent(cplx alpha, int n_max, double tail_tol) {
    if (n_max < 0) throw std::invalid_argument("coherent: n_max must be nonnegative");
    FockVector out;
    out.amplitudes.resize(n_max + 1);
    out.amplitudes[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < n_max; ++n)
        out.amplitudes[n + 1] = out.amplitudes[n] * alpha / std::sqrt(n + 1.0);
    out.truncated_tail = 1.0 - sum_sq(out.amplitudes);
    check_tail(out.truncated_tail, tail_tol, "coherent");
    renormalize(out.amplitudes);
    return out;
}

FockVector squeezed_vacuum(double r, double theta, int n_max, double tail_tol) {
    if (r < 0.0) throw std::invalid_argument("squeezed_vacuum: r must be nonnegative");
    if (n_max < 2) throw std::invalid_argument("squeezed_vacuum: n_max must be at least 2");
    FockVector out;
    out.amplitudes.assign(n_max + 1, cplx(0.0, 0.0));
    out.amplitudes[0] = 1.0 / std::sqrt(std::cosh(r));
    const cplx factor = -std::polar(std::tanh(r), theta);
    int l = 0;
    while (2 * (l + 1) <= n_max) {
        out.amplitudes[2 * (l + 1)] = out.amplitudes[2 * l] * factor *
            std::sqrt((2.0 * l + 1.0) * (2.0 * l + 2.0)) / (2.0 * (l + 1.0));
        ++l;
    }
    out.truncated_tail = 1.0 - sum_sq(out.amplitudes);
    check_tail(out.truncated_tail, tail_tol, "squeezed_vacuum");
    renormalize(out.amplitudes);
    return out;
}

PairedFockVector pair_coherent(cplx zeta, int n_max, double tail_tol) {
    if (n_max < 0) throw std::invalid_argument("pair_coherent: n_max must be nonnegative");
    PairedFockVector out;
    out.amplitudes.resize(n_max + 1);
    out.amplitudes[0] = 1.0;
    for (int n = 0; n < n_max; ++n)
        out.amplitudes[n + 1] = out.amplitudes[n] * zeta / (n + 1.0);
    const double partial = sum_sq(out.amplitudes);
    const double full = pc_series(std::abs(zeta)).total;
    out.truncated_tail = (full - partial) / full;
    check_tail(out.truncated_tail, tail_tol, "pair_coherent");
    // N0 from the truncation-consistent series: exact unit norm.
    renormalize(out.amplitudes);
    return out;
}

PairedFockVector two_mode_squeezed_vacuum(double r, int n_max, double tail_tol) {
    if (r < 0.0) throw std::invalid_argument("two_mode_squeezed_vacuum: r must be nonnegative");
    if (n_max < 0) throw std::invalid_argument("two_mode_squeezed_vacuum: n_max must be nonnegative");
    PairedFockVector out;
    out.amplitudes.resize(n_max + 1);
    const double mu = std::tanh(r);
    out.amplitudes[0] = std::sqrt(1.0 - mu * mu);
    for (int n = 0; n < n_max; ++n)
        out.amplitudes[n + 1] = out.amplitudes[n] * mu;
    out.truncated_tail = std::pow(mu * mu, n_max + 1.0);  // geometric tail
    check_tail(out.truncated_tail, tail_tol, "two_mode_squeezed_vacuum");
    renormalize(out.amplitudes);
    return out;
}

double mean_photon_number(const FockVector& state) {
    double m = 0.0;
    for (int n = 0; n <= state.n_max(); ++n) m += n * std::norm(state.amplitudes[n]);
    return m;
}

double mean_photon_number(const PairedFockVector& state) {
    double m = 0.0;
    for (int n = 0; n <= state.n_max(); ++n) m += 2.0 * n * std::norm(state.amplitudes[n]);
    return m;
}

double amplitude_for_mean(StateFamily family, double target_mean) {
    if (target_mean < 0.0) throw std::invalid_argument("states: mean must be nonnegative");
    switch (family) {
        case StateFamily::Coherent:
            return std::sqrt(target_mean);
        case StateFamily::SqueezedVacuum:
            return std::asinh(std::sqrt(target_mean));
        case StateFamily::TwoModeSqueezedVacuum:
            return std::atanh(std::sqrt(target_mean / (target_mean + 2.0)));
        case StateFamily::PairCoherent: {
            if (target_mean == 0.0) return 0.0;
            double lo = 0.0, hi = 0.5 * target_mean + 2.0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (2.0 * pc_series(mid).mean_pairs < target_mean)
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    throw std::logic_error("states: unknown family");
}

double family_tail(StateFamily family, double target_mean, int n_max) {
    switch (family) {
        case StateFamily::Coherent:
            return 1.0 - coherent_partial_mass(std::sqrt(target_mean), n_max);
        case StateFamily::SqueezedVacuum:
            return 1.0 - squeezed_partial_mass(amplitude_for_mean(family, target_mean), n_max);
        case StateFamily::PairCoherent: {
            const double zeta = amplitude_for_mean(family, target_mean);
            const double full = pc_series(zeta).total;
            return (full - pc_partial_sum(zeta, n_max)) / full;
        }
        case StateFamily::TwoModeSqueezedVacuum: {
            const double mu2 = target_mean / (target_mean + 2.0);
            return std::pow(mu2, n_max + 1.0);
        }
    }
    throw std::logic_error("states: unknown family");
}

int auto_truncation(double target_mean, double tail_tol, std::span<const StateFamily> families) {
    if (target_mean < 0.0) throw std::invalid_argument("auto_truncation: mean must be nonnegative");
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument("auto_truncation: tail_tol must lie in (0, 1)");
    const double root = std::sqrt(target_mean);
    for (int c = 0;; ++c) {
        const int cand = static_cast<int>(std::ceil(target_mean + c * root)) + 16;
        bool ok = true;
        for (StateFamily f : families) {
            if (family_tail(f, target_mean, cand) >= tail_tol) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
        if (cand > 10'000'000)
            throw std::runtime_error("auto_truncation: no admissible truncation found");
    }
}

int auto_truncation(double target_mean, double tail_tol) {
    return auto_truncation(target_mean, tail_tol, kAllFamilies);
}

}  // namespace njc
