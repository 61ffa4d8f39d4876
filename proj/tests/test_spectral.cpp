#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "njc/spectral.hpp"

using namespace njc;

namespace {

HermitianMatrix random_hermitian(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, u(rng));
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, cplx(u(rng), u(rng)));
    }
    return m;
}

// determinant by complex LU with partial pivoting; independent of Jacobi
cplx lu_determinant(const HermitianMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<cplx> a = m.data();
    cplx det(1.0, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            det = -det;
        }
        const cplx d = a[col * n + col];
        if (d == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
        det *= d;
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a[r * n + col] / d;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("identity matrix") {
    HermitianMatrix m(5);
    for (std::size_t i = 0; i < 5; ++i) m.set(i, i, 1.0);
    const Spectrum s = eigen_hermitian(m);
    for (double v : s.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pauli-x spectrum") {
    HermitianMatrix m(2);
    m.set(0, 1, cplx(1.0, 0.0));
    const Spectrum s = eigen_hermitian(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("trace and determinant against the LU oracle") {
    const HermitianMatrix m = random_hermitian(6, 42);
    const Spectrum s = eigen_hermitian(m);
    double sum = 0.0, prod = 1.0;
    for (double v : s.eigenvalues) {
        sum += v;
        prod *= v;
    }
    CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-12));
    const cplx det = lu_determinant(m);
    CHECK(std::abs(det.imag()) < 1e-10);
    CHECK(prod == doctest::Approx(det.real()).epsilon(1e-9));
}

TEST_CASE("eigenvector residuals") {
    const HermitianMatrix m = random_hermitian(8, 7);
    const Spectrum s = eigen_hermitian(m, true);
    const double scale = m.frobenius_norm();
    for (std::size_t col = 0; col < 8; ++col) {
        for (std::size_t row = 0; row < 8; ++row) {
            cplx mv(0.0, 0.0);
            for (std::size_t j = 0; j < 8; ++j) mv += m(row, j) * s.vector_entry(j, col);
            CHECK(std::abs(mv - s.eigenvalues[col] * s.vector_entry(row, col)) < 1e-9 * scale);
        }
    }
}

TEST_CASE("eigenvalues are ascending and density-like inputs stay in [0,1]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        // random pure-state mixture, trace 1, PSD
        const std::size_t n = 6;
        std::vector<std::vector<cplx>> vecs(3, std::vector<cplx>(n));
        std::vector<double> w = {0.5, 0.3, 0.2};
        for (auto& v : vecs) {
            double nrm = 0.0;
            for (cplx& c : v) {
                c = cplx(u(rng), u(rng));
                nrm += std::norm(c);
            }
            for (cplx& c : v) c /= std::sqrt(nrm);
        }
        HermitianMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                cplx e(0.0, 0.0);
                for (int s = 0; s < 3; ++s) e += w[s] * vecs[s][i] * std::conj(vecs[s][j]);
                m.set(i, j, (i == j) ? cplx(e.real(), 0.0) : e);
            }
        const Spectrum sp = eigen_hermitian(m);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(sp.eigenvalues[i] >= -1e-12);
            CHECK(sp.eigenvalues[i] <= 1.0 + 1e-12);
            if (i) CHECK(sp.eigenvalues[i] >= sp.eigenvalues[i - 1]);
            sum += sp.eigenvalues[i];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("pure-state density matrix has zero entropy") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 24;
    std::vector<cplx> v(n);
    double nrm = 0.0;
    for (cplx& c : v) {
        c = cplx(u(rng), u(rng));
        nrm += std::norm(c);
    }
    for (cplx& c : v) c /= std::sqrt(nrm);
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const cplx e = v[i] * std::conj(v[j]);
            m.set(i, j, (i == j) ? cplx(e.real(), 0.0) : e);
        }
    const Spectrum sp = eigen_hermitian(m);
    std::vector<double> clamped = sp.eigenvalues;
    CHECK(von_neumann_entropy(clamped) < 1e-9);
    CHECK(linear_entropy_of(m) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(std::vector<double>{1.0, 0.0}) == 0.0);
    CHECK(von_neumann_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(von_neumann_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
          doctest::Approx(2.0).epsilon(1e-15));

    // permutation and zero-padding invariance
    const double a = von_neumann_entropy(std::vector<double>{0.7, 0.2, 0.1});
    const double b = von_neumann_entropy(std::vector<double>{0.1, 0.7, 0.2});
    const double c = von_neumann_entropy(std::vector<double>{0.0, 0.7, 0.0, 0.2, 0.1, 0.0});
    CHECK(a == b);
    CHECK(a == c);

    // round-off negatives are clamped, real negatives rejected
    CHECK(von_neumann_entropy(std::vector<double>{1.0 + 1e-13, -1e-13}) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK_THROWS(von_neumann_entropy(std::vector<double>{1.1, -0.1}));
    CHECK_THROWS(von_neumann_entropy(std::vector<double>{0.5, 0.4}));
}

TEST_CASE("linear entropy without eigendecomposition") {
    HermitianMatrix mixed(2);
    mixed.set(0, 0, 0.5);
    mixed.set(1, 1, 0.5);
    CHECK(linear_entropy_of(mixed) == doctest::Approx(1.0).epsilon(1e-15));

    const HermitianMatrix h = random_hermitian(5, 99);
    // build a density-like matrix: normalize a PSD square of h
    HermitianMatrix rho(5);
    double tr = 0.0;
    std::vector<cplx> sq(25, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            cplx acc(0.0, 0.0);
            for (std::size_t c = 0; c < 5; ++c) acc += h(i, c) * h(c, j);
            sq[i * 5 + j] = acc;
            if (i == j) tr += acc.real();
        }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) {
            const cplx e = sq[i * 5 + j] / tr;
            rho.set(i, j, (i == j) ? cplx(e.real(), 0.0) : e);
        }
    const Spectrum sp = eigen_hermitian(rho);
    double purity = 0.0;
    for (double v : sp.eigenvalues) purity += v * v;
    CHECK(linear_entropy_of(rho) == doctest::Approx(2.0 * (1.0 - purity)).epsilon(1e-12));

    HermitianMatrix off(2);
    off.set(0, 0, 0.9);
    off.set(1, 1, 0.3);
    CHECK_THROWS(linear_entropy_of(off));
}

TEST_CASE("hermiticity is enforced") {
    std::vector<cplx> bad = {cplx(1.0, 0.0), cplx(0.5, 0.1), cplx(0.5, 0.1), cplx(2.0, 0.0)};
    CHECK_THROWS(HermitianMatrix::from_rowmajor(2, bad));

    HermitianMatrix m(3);
    m.set(0, 1, cplx(0.2, 0.4));
    m.mutable_data()[1 * 3 + 0] = cplx(1.0, 0.0);  // break it behind the API
    CHECK_THROWS(eigen_hermitian(m));
    CHECK_THROWS(m.set(0, 0, cplx(0.0, 1.0)));
}

TEST_CASE("from_rowmajor round trip") {
    const HermitianMatrix m = random_hermitian(4, 5);
    const HermitianMatrix copy = HermitianMatrix::from_rowmajor(4, m.data());
    CHECK(copy.hermiticity_defect() == 0.0);
    CHECK(copy.trace() == m.trace());
}
