#pragma once

#include <stdexcept>
#include <string>

#include "homlind/common.hpp"

namespace homlind {

// Uniform periodic grid samples of a single real 1-D field on [0, 2*pi).
struct GridSolution1D {
    VectorXd x;              // node coordinates
    VectorXd u;              // field samples
    double time = 0.0;
    double imag_residual = 0.0;  // diagnostic from spectral evaluation

    int size() const { return static_cast<int>(u.size()); }
};

// Uniform periodic grid samples of the two real 2-D fields on [0, 2*pi)^2.
// Entry (i, j) corresponds to the node (x_i, y_j) = (2*pi*i/nx, 2*pi*j/ny).
struct GridSolution2D {
    int nx = 0;
    int ny = 0;
    MatrixXd omega;
    MatrixXd xi;
    double time = 0.0;
    double imag_residual = 0.0;  // diagnostic from spectral evaluation
};

// Reference grids are required to be power-of-two sized and at least 64
// nodes per direction so that refinement studies stay on nested grids.
inline void validate_grid_size(int n, const std::string& what) {
    if (n < 64 || (n & (n - 1)) != 0) {
        throw std::invalid_argument(what + " must be a power of two >= 64, got " +
                                    std::to_string(n));
    }
}

}  // namespace homlind
