#pragma once

#include <array>
#include <vector>

#include "spectough/distance.hpp"
#include "spectough/graph.hpp"
#include "spectough/rational.hpp"

namespace spectough {

/// Block-average row sums of a partitioned matrix. Entries are exact
/// rationals (integer block sums over block sizes), so the equitable flag is
/// decided exactly rather than within a tolerance.
struct QuotientMatrix {
    int m = 0;
    std::vector<Rational> entries;  // row-major m x m
    std::vector<int> block_sizes;
    bool equitable = false;

    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * m + j]; }
    /// Row-major double image of the entries.
    std::vector<double> to_double() const;
    /// Largest eigenvalue (Perron root of the nonnegative quotient).
    double spectral_radius() const;
};

/// Quotient of d with respect to `blocks`, which must partition {0..n-1}
/// into nonempty sets. Entry (i,j) is the average over rows in block i of
/// the row sums restricted to block j; the partition is equitable iff every
/// such restricted row sum is constant within its block.
QuotientMatrix quotient_matrix(const DistanceMatrix& d, const std::vector<VertexSet>& blocks);

/// Characteristic polynomial det(xI - q) of a 3x3 quotient, as exact monic
/// coefficients (c3=1, c2, c1, c0). c2 = -trace, c1 = sum of principal 2x2
/// minors, c0 = -det.
std::array<Rational, 4> charpoly3(const QuotientMatrix& q);

/// Horner evaluation of monic cubic coefficients at x.
double eval_cubic(const std::array<Rational, 4>& coeffs, double x);

}  // namespace spectough
