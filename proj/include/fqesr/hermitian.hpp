#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fqesr {

using cplx = std::complex<double>;

// Dense complex Hermitian operator, row-major storage.
// Hermiticity is validated at construction against the largest entry magnitude.
class HermitianMatrix {
  public:
    HermitianMatrix(std::size_t dim, std::vector<cplx> entries);
    static HermitianMatrix zero(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const std::vector<cplx>& entries() const { return a_; }

    double frobenius_norm() const;

    // Re-check the Hermiticity invariant (tolerance relative to max |entry|).
    void validate() const;

  private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

// Spectral decomposition: values ascending, vectors[k-th column] the
// eigenvector of values[k], orthonormal.
struct EigenSystem {
    std::vector<double> values;
    std::vector<cplx> vectors; // row-major dim x dim, column k = eigenvector k
    std::size_t dim = 0;

    cplx vector(std::size_t row, std::size_t col) const { return vectors[row * dim + col]; }
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices.
// Contract: ||H v_k - lambda_k v_k|| <= 1e-12 ||H||_F per eigenpair and
// orthonormal vectors; throws on non-Hermitian input or non-convergence.
EigenSystem eigensolve(const HermitianMatrix& h);

} // namespace fqesr
