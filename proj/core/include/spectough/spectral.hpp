#pragma once

#include <string>
#include <vector>

#include "spectough/distance.hpp"

namespace spectough {

struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> perron;  // entrywise positive, unit 2-norm
    long iterations = 0;
    double residual = 0.0;       // ||D x - lambda1 x||_inf at return
    std::string method;          // "power" or "jacobi"

    /// {"lambda1":..,"residual":..,"iterations":..,"method":".."}
    std::string to_json() const;
};

/// Dominant eigenpair of a distance matrix. Power iteration from the
/// all-ones vector with Rayleigh-quotient estimates; stops once the residual
/// drops to tol. If max_iter is exhausted, a full cyclic-Jacobi eigensolve
/// takes over and the result records which path ran. Throws NumericError if
/// even the fallback cannot meet the contract.
SpectralResult spectral_radius(const DistanceMatrix& d, double tol = 1e-10,
                               long max_iter = 100000);

/// Perron root of a small nonnegative irreducible matrix (row-major, m x m)
/// via power iteration with Collatz-Wielandt brackets. Used for quotient
/// matrices, which are not symmetric.
double perron_root(const std::vector<double>& matrix, int m);

/// Full eigensystem of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues land in `values` (unsorted), eigenvectors in the columns of
/// `vectors` (row-major n x n).
void jacobi_eigensystem(std::vector<double> matrix, int n, std::vector<double>& values,
                        std::vector<double>& vectors);

}  // namespace spectough
