#include "njc/two_mode.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace njc {

double PairedJointAmplitudes::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : c_e) s += std::norm(c);
    for (const cplx& c : c_g) s += std::norm(c);
    return s;
}

TwoModeEvolver::TwoModeEvolver(const PairedFockVector& field0, const TwoModeParams& p)
    : TwoModeEvolver(
          PairedJointAmplitudes{field0.amplitudes,
                                std::vector<cplx>(field0.amplitudes.size(), cplx(0.0, 0.0)), 0.0},
          p) {}

TwoModeEvolver::TwoModeEvolver(PairedJointAmplitudes initial, const TwoModeParams& p)
    : init_(std::move(initial)), params_(p) {
    if (init_.c_e.size() != init_.c_g.size() || init_.c_e.empty())
        throw std::invalid_argument("evolve_two: amplitude arrays must be nonempty and equal-sized");
    const int blocks = init_.n_max();
    half_delta_.resize(blocks);
    half_rabi_.resize(blocks);
    coupling_over_.resize(blocks);
    for (int n = 0; n < blocks; ++n) {
        const SpectralPoint sp = spectral_point_two(n, p);
        half_delta_[n] = 0.5 * sp.delta_n;
        half_rabi_[n] = 0.5 * sp.omega_n;
        coupling_over_[n] = 2.0 * p.lambda * sp.eta / sp.omega_n;
    }
}

PairedJointAmplitudes TwoModeEvolver::at(double t) const {
    const int blocks = init_.n_max();
    PairedJointAmplitudes out;
    out.time = t;
    out.c_e.resize(blocks + 1);
    out.c_g.resize(blocks + 1);
    out.c_g[0] = init_.c_g[0];
    out.c_e[blocks] = init_.c_e[blocks];
    for (int n = 0; n < blocks; ++n) {
        const double cosv = std::cos(half_rabi_[n] * t);
        const double sinv = std::sin(half_rabi_[n] * t);
        const double ratio = half_delta_[n] / half_rabi_[n];
        const cplx diag(cosv, -ratio * sinv);
        const cplx cross(0.0, -coupling_over_[n] * sinv);
        const cplx phase(std::cos(half_delta_[n] * t), std::sin(half_delta_[n] * t));
        const cplx e0 = init_.c_e[n];
        const cplx g0 = init_.c_g[n + 1];
        out.c_e[n] = phase * (diag * e0 + cross * g0);
        out.c_g[n + 1] = std::conj(phase) * (std::conj(diag) * g0 + cross * e0);
    }
    return out;
}

PairedJointAmplitudes evolve_two(const PairedFockVector& field0, const TwoModeParams& p, double t) {
    return TwoModeEvolver(field0, p).at(t);
}

PairedJointAmplitudes evolve_two(const PairedJointAmplitudes& initial, const TwoModeParams& p,
                                 double t) {
    return TwoModeEvolver(initial, p).at(t);
}

double inversion_two(const PairedJointAmplitudes& amps) {
    double w = 0.0;
    for (const cplx& c : amps.c_e) w += std::norm(c);
    for (const cplx& c : amps.c_g) w -= std::norm(c);
    return w;
}

AtomDensity atomic_density_two(const PairedJointAmplitudes& amps) {
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

double coherence_two(const PairedJointAmplitudes& amps) {
    return std::abs(atomic_density_two(amps).eg);
}

double tangle_a_ff(const PairedJointAmplitudes& amps) {
    return atomic_density_two(amps).linear_entropy();
}

HermitianMatrix rho_a_f1(const PairedJointAmplitudes& amps) {
    const std::size_t count = amps.c_e.size();
    HermitianMatrix m(2 * count);
    for (std::size_t n = 0; n < count; ++n) {
        m.set(2 * n, 2 * n, std::norm(amps.c_e[n]));
        m.set(2 * n + 1, 2 * n + 1, std::norm(amps.c_g[n]));
        m.set(2 * n, 2 * n + 1, amps.c_e[n] * std::conj(amps.c_g[n]));
    }
    return m;
}

namespace {

// Eigenvalues of every 2x2 block of rho_{A x F_mode}, via the spectral module.
std::vector<double> block_eigenvalues(const PairedJointAmplitudes& amps) {
    std::vector<double> out;
    out.reserve(2 * amps.c_e.size());
    for (std::size_t n = 0; n < amps.c_e.size(); ++n) {
        HermitianMatrix block(2);
        block.set(0, 0, std::norm(amps.c_e[n]));
        block.set(1, 1, std::norm(amps.c_g[n]));
        block.set(0, 1, amps.c_e[n] * std::conj(amps.c_g[n]));
        const Spectrum sp = eigen_hermitian(block);
        out.push_back(sp.eigenvalues[0]);
        out.push_back(sp.eigenvalues[1]);
    }
    return out;
}

}  // namespace

double tangle_af1_f2(const PairedJointAmplitudes& amps) {
    return von_neumann_entropy(block_eigenvalues(amps));
}

double tangle_af2_f1(const PairedJointAmplitudes& amps) {
    // rho_{A x F2} has the same matrix elements as rho_{A x F1}: the paired
    // state is symmetric under mode exchange.
    return von_neumann_entropy(block_eigenvalues(amps));
}

std::vector<double> rho_f2_probabilities(const PairedJointAmplitudes& amps) {
    std::vector<double> p(amps.c_e.size());
    for (std::size_t n = 0; n < p.size(); ++n)
        p[n] = std::norm(amps.c_e[n]) + std::norm(amps.c_g[n]);
    return p;
}

HermitianMatrix rho_f1f2(const PairedJointAmplitudes& amps) {
    const std::size_t count = amps.c_e.size();
    HermitianMatrix m(count);
    for (std::size_t n = 0; n < count; ++n) {
        m.set(n, n, std::norm(amps.c_e[n]) + std::norm(amps.c_g[n]));
        for (std::size_t w = n + 1; w < count; ++w)
            m.set(n, w, amps.c_e[n] * std::conj(amps.c_e[w]) + amps.c_g[n] * std::conj(amps.c_g[w]));
    }
    return m;
}

double relative_entropy(const PairedJointAmplitudes& amps) {
    const HermitianMatrix a = rho_f1f2(amps);
    const Spectrum sp = eigen_hermitian(a);
    const double s = von_neumann_entropy(sp.eigenvalues);
    const double h = von_neumann_entropy(rho_f2_probabilities(amps));
    double e = h - s;
    if (e < 0.0) {
        if (e < -1e-9)
            throw std::runtime_error("relative_entropy: negative beyond round-off budget");
        e = 0.0;
    }
    return e;
}

EntanglementRecord measures_at(const PairedJointAmplitudes& amps) {
    if (std::abs(amps.norm_sq() - 1.0) > 1e-10)
        throw std::runtime_error("measures_at: state norm drifted beyond 1e-10");
    EntanglementRecord rec;
    rec.time = amps.time;
    const AtomDensity rho = atomic_density_two(amps);
    rec.w_t = rho.ee - rho.gg;
    rec.coherence = std::abs(rho.eg);
    rec.tangle_a_ff = rho.linear_entropy();
    const double identity = 1.0 - rec.tangle_a_ff - 4.0 * rec.coherence * rec.coherence;
    if (std::abs(rec.w_t * rec.w_t - identity) > 1e-12)
        throw std::runtime_error("measures_at: inversion-tangle identity violated");
    rec.tangle_af1_f2 = tangle_af1_f2(amps);
    rec.tangle_af2_f1 = tangle_af2_f1(amps);
    if (rec.tangle_af1_f2 != rec.tangle_af2_f1)
        throw std::runtime_error("measures_at: tangle exchange symmetry violated");
    const double s_f2 = von_neumann_entropy(rho_f2_probabilities(amps));
    if (std::abs(s_f2 - rec.tangle_af1_f2) > 1e-10)
        throw std::runtime_error("measures_at: entropy cross-check (diagonal vs blocks) failed");
    rec.relative_entropy = relative_entropy(amps);
    return rec;
}

EntanglementRecord mean_measures(const PairedFockVector& field0, const TwoModeParams& p, double T,
                                 double dt) {
    if (!(T > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("mean_measures: T and dt must be positive");
    const auto steps = static_cast<std::size_t>(std::llround(T / dt));
    if (steps == 0) throw std::invalid_argument("mean_measures: dt larger than T");
    const double step = T / static_cast<double>(steps);
    const TwoModeEvolver evolver(field0, p);
    std::vector<EntanglementRecord> recs(steps + 1);
    detail::parallel_for(steps + 1, [&](std::size_t i) {
        recs[i] = measures_at(evolver.at(step * static_cast<double>(i)));
    });
    auto mean_of = [&](double EntanglementRecord::* field) {
        double sum = 0.5 * (recs.front().*field + recs.back().*field);
        for (std::size_t i = 1; i < steps; ++i) sum += recs[i].*field;
        return sum / static_cast<double>(steps);
    };
    EntanglementRecord out;
    out.time = T;
    out.w_t = mean_of(&EntanglementRecord::w_t);
    out.tangle_a_ff = mean_of(&EntanglementRecord::tangle_a_ff);
    out.tangle_af1_f2 = mean_of(&EntanglementRecord::tangle_af1_f2);
    out.tangle_af2_f1 = mean_of(&EntanglementRecord::tangle_af2_f1);
    out.relative_entropy = mean_of(&EntanglementRecord::relative_entropy);
    out.coherence = mean_of(&EntanglementRecord::coherence);
    return out;
}

}  // namespace njc
