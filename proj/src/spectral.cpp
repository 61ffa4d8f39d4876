#include "njc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace njc {

HermitianMatrix::HermitianMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx(0.0, 0.0)) {
    if (dim == 0) throw std::invalid_argument("HermitianMatrix: dimension must be at least 1");
}

HermitianMatrix HermitianMatrix::from_rowmajor(std::size_t dim, std::vector<cplx> data) {
    if (data.size() != dim * dim)
        throw std::invalid_argument("HermitianMatrix: data size does not match dimension");
    HermitianMatrix m(dim);
    m.data_ = std::move(data);
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > 1e-14 * scale)
        throw std::invalid_argument("HermitianMatrix: input is not hermitian");
    return m;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, cplx value) {
    if (i == j) {
        if (std::abs(value.imag()) > 1e-14 * std::max(1.0, std::abs(value)))
            throw std::invalid_argument("HermitianMatrix: diagonal entry must be real");
        data_[i * dim_ + i] = cplx(value.real(), 0.0);
        return;
    }
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = std::conj(value);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i].real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double HermitianMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double HermitianMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            d = std::max(d, std::abs(data_[i * dim_ + j] - std::conj(data_[j * dim_ + i])));
    return d;
}

namespace {

double offdiag_norm(const std::vector<cplx>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a[i * n + j]);
    return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eigen_hermitian(const HermitianMatrix& m, bool with_vectors, double tol) {
    const std::size_t n = m.dim();
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > 1e-12 * scale)
        throw std::invalid_argument("eigen_hermitian: input is not hermitian");

    std::vector<cplx> a = m.data();
    const double norm_f = m.frobenius_norm();
    if (tol < 0.0) tol = 1e-12 * norm_f;

    std::vector<cplx> v;
    if (with_vectors) {
        v.assign(n * n, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    const double floor = std::max(tol, 1e-300) / (2.0 * n);
    bool converged = norm_f == 0.0 || n == 1 || offdiag_norm(a, n) <= tol;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double r = std::abs(apq);
                if (r <= floor) continue;

                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sigma = t * c;
                const cplx phase = apq / r;
                const double sre = sigma * phase.real();
                const double sim = sigma * phase.imag();

                // columns p and q for rows outside the pivot pair
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const cplx aip = a[i * n + p];
                    const cplx aiq = a[i * n + q];
                    // a_ip' = c a_ip - conj(s) a_iq ; a_iq' = s a_ip + c a_iq
                    const cplx nip(c * aip.real() - (sre * aiq.real() + sim * aiq.imag()),
                                   c * aip.imag() - (sre * aiq.imag() - sim * aiq.real()));
                    const cplx niq(sre * aip.real() - sim * aip.imag() + c * aiq.real(),
                                   sre * aip.imag() + sim * aip.real() + c * aiq.imag());
                    a[i * n + p] = nip;
                    a[i * n + q] = niq;
                    a[p * n + i] = std::conj(nip);
                    a[q * n + i] = std::conj(niq);
                }
                a[p * n + p] = cplx(app - t * r, 0.0);
                a[q * n + q] = cplx(aqq + t * r, 0.0);
                a[p * n + q] = cplx(0.0, 0.0);
                a[q * n + p] = cplx(0.0, 0.0);

                if (with_vectors) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = v[i * n + p];
                        const cplx viq = v[i * n + q];
                        const cplx nvp(c * vip.real() - (sre * viq.real() + sim * viq.imag()),
                                       c * vip.imag() - (sre * viq.imag() - sim * viq.real()));
                        const cplx nvq(sre * vip.real() - sim * vip.imag() + c * viq.real(),
                                       sre * vip.imag() + sim * vip.real() + c * viq.imag());
                        v[i * n + p] = nvp;
                        v[i * n + q] = nvq;
                    }
                }
            }
        }
        converged = offdiag_norm(a, n) <= tol;
    }
    if (!converged)
        throw std::runtime_error("eigen_hermitian: no convergence within 100 sweeps");

    Spectrum out;
    out.dim = n;
    out.eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i].real();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return diag[x] < diag[y];
    });
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = diag[order[i]];
    if (with_vectors) {
        out.eigenvectors.resize(n * n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                out.eigenvectors[col * n + row] = v[row * n + order[col]];
    }
    return out;
}

double von_neumann_entropy(std::span<const double> probabilities) {
    double sum = 0.0;
    for (double p : probabilities) sum += p;
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("von_neumann_entropy: probabilities do not sum to 1");
    double s = 0.0;
    for (double p : probabilities) {
        if (p < -1e-12)
            throw std::invalid_argument("von_neumann_entropy: significantly negative probability");
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double linear_entropy_of(const HermitianMatrix& m) {
    if (std::abs(m.trace() - 1.0) > 1e-8)
        throw std::invalid_argument("linear_entropy_of: trace must be 1");
    double purity = 0.0;
    for (const cplx& v : m.data()) purity += std::norm(v);
    return 2.0 * (1.0 - purity);
}

}  // namespace njc
