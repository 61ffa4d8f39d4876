#include "njc/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace njc {

TruncatedOperator TruncatedOperator::adjoint() const {
    TruncatedOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

TruncatedOperator TruncatedOperator::multiply(const TruncatedOperator& rhs) const {
    if (rhs.dim != dim) throw std::invalid_argument("TruncatedOperator: dimension mismatch");
    TruncatedOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            long double re = 0.0L, im = 0.0L;
            for (std::size_t m = 0; m < dim; ++m) {
                const cplx& a = at(i, m);
                const cplx& b = rhs.at(m, j);
                re += static_cast<long double>(a.real()) * b.real() -
                      static_cast<long double>(a.imag()) * b.imag();
                im += static_cast<long double>(a.real()) * b.imag() +
                      static_cast<long double>(a.imag()) * b.real();
            }
            out.at(i, j) = cplx(static_cast<double>(re), static_cast<double>(im));
        }
    }
    return out;
}

TruncatedOperator TruncatedOperator::scaled(cplx factor) const {
    TruncatedOperator out(dim);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] * factor;
    return out;
}

TruncatedOperator TruncatedOperator::minus(const TruncatedOperator& rhs) const {
    if (rhs.dim != dim) throw std::invalid_argument("TruncatedOperator: dimension mismatch");
    TruncatedOperator out(dim);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] - rhs.data[i];
    return out;
}

double TruncatedOperator::max_abs_block(std::size_t rows, std::size_t cols) const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m = std::max(m, std::abs(at(i, j)));
    return m;
}

DeformedOperators build_deformed_ops(int n_max, double k) {
    if (n_max < 2) throw std::invalid_argument("build_deformed_ops: n_max must be at least 2");
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("build_deformed_ops: k must lie in [0, 1]");
    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    DeformedOperators ops{TruncatedOperator(dim), TruncatedOperator(dim), TruncatedOperator(dim),
                          n_max, k};
    for (std::size_t n = 1; n < dim; ++n)
        ops.lowering.at(n - 1, n) = std::sqrt(n * (1.0 + k * (n - 1.0)));
    ops.raising = ops.lowering.adjoint();
    for (std::size_t n = 0; n < dim; ++n) ops.diagonal.at(n, n) = k * n + 0.5;
    return ops;
}

double check_algebra(const DeformedOperators& ops, int interior_dim) {
    if (interior_dim < 1 || interior_dim > ops.n_max - 1)
        throw std::invalid_argument("check_algebra: interior_dim must leave the truncation edge out");
    const auto& K = ops.lowering;
    const auto& Kd = ops.raising;
    const auto& K0 = ops.diagonal;
    const std::size_t idim = static_cast<std::size_t>(interior_dim);

    // [K, K+] - 2 K0
    const TruncatedOperator c1 = K.multiply(Kd).minus(Kd.multiply(K)).minus(K0.scaled(2.0));
    // [K0, K+] - k K+
    const TruncatedOperator c2 = K0.multiply(Kd).minus(Kd.multiply(K0)).minus(Kd.scaled(ops.k));
    // [K0, K] + k K
    const TruncatedOperator c3 = K0.multiply(K).minus(K.multiply(K0)).minus(K.scaled(-ops.k));

    double dev = 0.0;
    dev = std::max(dev, c1.max_abs_block(idim, idim));
    dev = std::max(dev, c2.max_abs_block(idim, idim));
    dev = std::max(dev, c3.max_abs_block(idim, idim));
    return dev;
}

namespace {

HermitianMatrix assemble_joint(const TruncatedOperator& number_op,
                               const TruncatedOperator& interaction, double omega_total, double nu,
                               double lambda) {
    const std::size_t f = number_op.dim;
    HermitianMatrix h(2 * f);
    for (std::size_t n = 0; n < f; ++n) {
        const double field_energy = omega_total * number_op.at(n, n).real();
        h.set(n, n, field_energy + 0.5 * nu);
        h.set(f + n, f + n, field_energy - 0.5 * nu);
    }
    // <e,n| H |g,m> = lambda <n| K |m>  (sigma_+ interaction term)
    for (std::size_t n = 0; n < f; ++n)
        for (std::size_t m = 0; m < f; ++m) {
            const cplx v = lambda * interaction.at(n, m);
            if (v != cplx(0.0, 0.0)) h.set(n, f + m, v);
        }
    return h;
}

}  // namespace

HermitianMatrix build_hamiltonian_single(const SingleModeParams& p, int n_max) {
    const DeformedOperators ops = build_deformed_ops(n_max, p.k);
    const TruncatedOperator number_op = ops.raising.multiply(ops.lowering);  // K+ K
    return assemble_joint(number_op, ops.lowering, p.omega, p.nu(), p.lambda);
}

HermitianMatrix build_hamiltonian_two(const TwoModeParams& p, int n_max) {
    const DeformedOperators ops = build_deformed_ops(n_max, p.k);
    const TruncatedOperator number_op = ops.raising.multiply(ops.lowering);
    // Paired-subspace restriction of K1 K2: <n,n| K1 K2 |m,m> = (K_nm)^2.
    TruncatedOperator paired_lowering(ops.lowering.dim);
    for (std::size_t i = 0; i < paired_lowering.data.size(); ++i)
        paired_lowering.data[i] = ops.lowering.data[i] * ops.lowering.data[i];
    return assemble_joint(number_op, paired_lowering, p.omega_total(), p.nu(), p.lambda);
}

std::vector<cplx> pack_joint(std::span<const cplx> c_e, std::span<const cplx> c_g) {
    if (c_e.size() != c_g.size()) throw std::invalid_argument("pack_joint: size mismatch");
    std::vector<cplx> out;
    out.reserve(c_e.size() * 2);
    out.insert(out.end(), c_e.begin(), c_e.end());
    out.insert(out.end(), c_g.begin(), c_g.end());
    return out;
}

std::vector<cplx> integrate(const HermitianMatrix& h, std::span<const cplx> psi0, double t) {
    return integrate(eigen_hermitian(h, true), psi0, t);
}

std::vector<cplx> integrate(const Spectrum& eig, std::span<const cplx> psi0, double t) {
    const std::size_t n = eig.dim;
    if (psi0.size() != n) throw std::invalid_argument("integrate: state dimension mismatch");
    if (eig.eigenvectors.empty()) throw std::invalid_argument("integrate: spectrum lacks eigenvectors");
    std::vector<cplx> modal(n, cplx(0.0, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        cplx acc(0.0, 0.0);
        for (std::size_t row = 0; row < n; ++row)
            acc += std::conj(eig.eigenvectors[col * n + row]) * psi0[row];
        modal[col] = acc * std::polar(1.0, -eig.eigenvalues[col] * t);
    }
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row)
            out[row] += eig.eigenvectors[col * n + row] * modal[col];
    return out;
}

Deviation compare(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("compare: dimension mismatch");
    Deviation d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d.full = std::max(d.full, std::abs(a[i] - b[i]));
        d.phase_insensitive = std::max(d.phase_insensitive, std::abs(std::abs(a[i]) - std::abs(b[i])));
    }
    return d;
}

}  // namespace njc
