#pragma once

#include <Eigen/Dense>
#include <complex>

namespace lapis {

using cd = std::complex<double>;

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

}  // namespace lapis
