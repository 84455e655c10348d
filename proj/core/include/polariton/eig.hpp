#pragma once

#include <cstddef>
#include <vector>

namespace polariton {

// Dense row-major square matrix, just enough for the Fock-space verifier.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a; // n*n, row-major

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const double& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

enum class EigenVectors { No, Yes };

struct EigenDecomposition {
    std::vector<double> values; // ascending
    // Column k of `vectors` is the eigenvector for values[k]; empty when
    // vectors were not requested.
    DenseMatrix vectors;
    int sweeps = 0;
};

// Cyclic threshold Jacobi for real symmetric matrices. Rotations are applied
// until the off-diagonal sum is annihilated (small elements are flushed to
// zero once they stop affecting the diagonal); 100-sweep cap raises
// NumericalError. Input must be symmetric; only the upper triangle is read.
EigenDecomposition jacobi_eigh(const DenseMatrix& m, EigenVectors want_vectors);

} // namespace polariton
