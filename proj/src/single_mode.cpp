#include "njc/single_mode.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace njc {

double SingleJointAmplitudes::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : c_e) s += std::norm(c);
    for (const cplx& c : c_g) s += std::norm(c);
    return s;
}

double AtomDensity::purity() const { return ee * ee + gg * gg + 2.0 * std::norm(eg); }

std::array<double, 2> AtomDensity::eigenvalues() const {
    const double mean = 0.5 * (ee + gg);
    const double disc = std::sqrt(0.25 * (ee - gg) * (ee - gg) + std::norm(eg));
    return {mean - disc, mean + disc};
}

HermitianMatrix AtomDensity::as_matrix() const {
    HermitianMatrix m(2);
    m.set(0, 0, ee);
    m.set(1, 1, gg);
    m.set(0, 1, eg);
    return m;
}

SingleModeEvolver::SingleModeEvolver(const FockVector& field0, const SingleModeParams& p)
    : SingleModeEvolver(
          SingleJointAmplitudes{field0.amplitudes,
                                std::vector<cplx>(field0.amplitudes.size(), cplx(0.0, 0.0)), 0.0},
          p) {}

SingleModeEvolver::SingleModeEvolver(SingleJointAmplitudes initial, const SingleModeParams& p)
    : init_(std::move(initial)), params_(p) {
    if (init_.c_e.size() != init_.c_g.size() || init_.c_e.empty())
        throw std::invalid_argument("evolve_single: amplitude arrays must be nonempty and equal-sized");
    const int blocks = init_.n_max();  // block n couples (e,n) with (g,n+1)
    half_delta_.resize(blocks);
    half_rabi_.resize(blocks);
    coupling_over_.resize(blocks);
    for (int n = 0; n < blocks; ++n) {
        const SpectralPoint sp = spectral_point_single(n, p);
        half_delta_[n] = 0.5 * sp.delta_n;
        half_rabi_[n] = 0.5 * sp.omega_n;
        coupling_over_[n] = 2.0 * p.lambda * sp.eta / sp.omega_n;
    }
}

SingleJointAmplitudes SingleModeEvolver::at(double t) const {
    const int blocks = init_.n_max();
    SingleJointAmplitudes out;
    out.time = t;
    out.c_e.resize(blocks + 1);
    out.c_g.resize(blocks + 1);
    out.c_g[0] = init_.c_g[0];
    out.c_e[blocks] = init_.c_e[blocks];
    for (int n = 0; n < blocks; ++n) {
        const double cosv = std::cos(half_rabi_[n] * t);
        const double sinv = std::sin(half_rabi_[n] * t);
        const double ratio = half_delta_[n] / half_rabi_[n];
        const cplx diag(cosv, -ratio * sinv);          // cos - i (Delta/Omega) sin
        const cplx cross(0.0, -coupling_over_[n] * sinv);  // -2i lambda eta / Omega sin
        const cplx phase(std::cos(half_delta_[n] * t), std::sin(half_delta_[n] * t));
        const cplx e0 = init_.c_e[n];
        const cplx g0 = init_.c_g[n + 1];
        out.c_e[n] = phase * (diag * e0 + cross * g0);
        out.c_g[n + 1] = std::conj(phase) * (std::conj(diag) * g0 + cross * e0);
    }
    return out;
}

SingleJointAmplitudes evolve_single(const FockVector& field0, const SingleModeParams& p, double t) {
    return SingleModeEvolver(field0, p).at(t);
}

SingleJointAmplitudes evolve_single(const SingleJointAmplitudes& initial, const SingleModeParams& p,
                                    double t) {
    return SingleModeEvolver(initial, p).at(t);
}

double inversion_single(const SingleJointAmplitudes& amps) {
    double w = 0.0;
    for (const cplx& c : amps.c_e) w += std::norm(c);
    for (const cplx& c : amps.c_g) w -= std::norm(c);
    return w;
}

AtomDensity atomic_density_single(const SingleJointAmplitudes& amps) {
    AtomDensity rho;
    cplx eg(0.0, 0.0);
    for (std::size_t n = 0; n < amps.c_e.size(); ++n) {
        rho.ee += std::norm(amps.c_e[n]);
        rho.gg += std::norm(amps.c_g[n]);
        eg += amps.c_e[n] * std::conj(amps.c_g[n]);
    }
    rho.eg = eg;
    return rho;
}

double coherence_single(const SingleJointAmplitudes& amps) {
    return std::abs(atomic_density_single(amps).eg);
}

double linear_entropy_single(const SingleJointAmplitudes& amps) {
    return atomic_density_single(amps).linear_entropy();
}

SingleRecord single_record(const SingleJointAmplitudes& amps) {
    const double norm = amps.norm_sq();
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::runtime_error("single_record: state norm drifted beyond 1e-10");
    const AtomDensity rho = atomic_density_single(amps);
    SingleRecord rec;
    rec.time = amps.time;
    rec.w_s = rho.ee - rho.gg;
    rec.coherence = std::abs(rho.eg);
    rec.linear_entropy = rho.linear_entropy();
    const double identity = 1.0 - rec.w_s * rec.w_s - 4.0 * rec.coherence * rec.coherence;
    if (std::abs(rec.linear_entropy - identity) > 1e-12)
        throw std::runtime_error("single_record: linear-entropy identity violated");
    return rec;
}

double mean_linear_entropy(const FockVector& field0, const SingleModeParams& p, double T, double dt) {
    if (!(T > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("mean_linear_entropy: T and dt must be positive");
    const auto steps = static_cast<std::size_t>(std::llround(T / dt));
    if (steps == 0) throw std::invalid_argument("mean_linear_entropy: dt larger than T");
    const double step = T / static_cast<double>(steps);
    const SingleModeEvolver evolver(field0, p);
    std::vector<double> values(steps + 1);
    detail::parallel_for(steps + 1, [&](std::size_t i) {
        values[i] = single_record(evolver.at(step * static_cast<double>(i))).linear_entropy;
    });
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i < steps; ++i) sum += values[i];
    return sum / static_cast<double>(steps);
}

}  // namespace njc
