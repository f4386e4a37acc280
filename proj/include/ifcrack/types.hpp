#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ifcrack {

using Complex = std::complex<double>;

using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Matrix3d = Eigen::Matrix3d;
using Matrix2d = Eigen::Matrix2d;
using Matrix3cd = Eigen::Matrix3cd;
using Matrix2cd = Eigen::Matrix2cd;
using Vector2d = Eigen::Vector2d;
using Vector3cd = Eigen::Vector3cd;

}  // namespace ifcrack
