#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "njc/types.hpp"

namespace njc {

/// Dense complex hermitian matrix, row-major.  set() maintains hermiticity
/// structurally; from_rowmajor() validates it on raw data.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(std::size_t dim);
    static HermitianMatrix from_rowmajor(std::size_t dim, std::vector<cplx> data);

    std::size_t dim() const { return dim_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, cplx value);

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max |a_ij - conj(a_ji)|, zero for structurally built matrices
    double hermiticity_defect() const;

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& mutable_data() { return data_; }

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    std::vector<cplx> eigenvectors;   // column-major, empty unless requested
    std::size_t dim = 0;

    cplx vector_entry(std::size_t row, std::size_t col) const {
        return eigenvectors[col * dim + row];
    }
};

/// Cyclic Jacobi diagonalization.  Sweeps until the off-diagonal Frobenius
/// norm drops below tol (default 1e-12 * ||m||_F); throws after 100 sweeps.
Spectrum eigen_hermitian(const HermitianMatrix& m, bool with_vectors = false, double tol = -1.0);

/// -sum p log2 p with 0 log 0 = 0.  Inputs must sum to 1 within 1e-8;
/// round-off negatives above -1e-12 are clamped to zero.
double von_neumann_entropy(std::span<const double> probabilities);

/// 2 (1 - Tr m^2) evaluated as 2 (1 - sum |m_ij|^2); no eigendecomposition.
double linear_entropy_of(const HermitianMatrix& m);

}  // namespace njc
