#pragma once

#include <span>
#include <vector>

#include "njc/model.hpp"
#include "njc/spectral.hpp"
#include "njc/types.hpp"

namespace njc {

/// Dense matrix realization of an operator on the truncated Fock space.
/// Entries match the defining action exactly except at the truncation edge.
struct TruncatedOperator {
    std::size_t dim = 0;
    std::vector<cplx> data;  // row-major

    explicit TruncatedOperator(std::size_t d) : dim(d), data(d * d, cplx(0.0, 0.0)) {}
    cplx& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }

    TruncatedOperator adjoint() const;
    /// Matrix product with long-double accumulation (the commutator checks
    /// sit near the double round-off floor at large truncations).
    TruncatedOperator multiply(const TruncatedOperator& rhs) const;
    TruncatedOperator scaled(cplx factor) const;
    TruncatedOperator minus(const TruncatedOperator& rhs) const;
    double max_abs_block(std::size_t rows, std::size_t cols) const;
};

struct DeformedOperators {
    TruncatedOperator lowering;   // K
    TruncatedOperator raising;    // K_dagger
    TruncatedOperator diagonal;   // K0 = k n + 1/2
    int n_max = 0;
    double k = 0.0;
};

/// K|n> = sqrt(n (1 + k(n-1))) |n-1>, K0 diagonal, on an (n_max+1)-dim space.
DeformedOperators build_deformed_ops(int n_max, double k);

/// Max deviation of the three closed-algebra commutators over the interior
/// block [0, interior_dim)^2; the truncation edge is excluded since the cut
/// necessarily breaks the algebra in the last rows and columns.
double check_algebra(const DeformedOperators& ops, int interior_dim);

/// Full Hamiltonians assembled from the operator matrices, stacked basis:
/// index n is |e,n> (or |e,n,n>), index (n_max+1)+n is |g,n> (or |g,n,n>).
HermitianMatrix build_hamiltonian_single(const SingleModeParams& p, int n_max);
HermitianMatrix build_hamiltonian_two(const TwoModeParams& p, int n_max);

std::vector<cplx> pack_joint(std::span<const cplx> c_e, std::span<const cplx> c_g);

/// psi(t) = exp(-i H t) psi0 via full eigendecomposition (exact up to the
/// eigensolver tolerance; no time stepping).
std::vector<cplx> integrate(const HermitianMatrix& h, std::span<const cplx> psi0, double t);
std::vector<cplx> integrate(const Spectrum& eig, std::span<const cplx> psi0, double t);

struct Deviation {
    double full = 0.0;               // max |a_i - b_i|
    double phase_insensitive = 0.0;  // max ||a_i| - |b_i||
};

Deviation compare(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace njc
