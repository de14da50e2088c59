#pragma once

#include <complex>
#include <Eigen/Dense>

namespace homlind {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kMergeTol = 1e-14;      // relative amplitude/rate merge
inline constexpr double kResonanceTol = 1e-9;   // relative |sigma - lambda|
inline constexpr double kChannelDropTol = 1e-14;  // max|v| below this: drop

}  // namespace homlind
