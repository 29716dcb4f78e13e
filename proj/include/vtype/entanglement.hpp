#pragma once

// Partial transpose and negativity for two qutrits.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vtype/measurement.hpp"

namespace vtype {

enum class Subsystem { first, second };

/// Eigenvalues below this are counted as negative; anything in
/// [-kNegativeThreshold, 0) is solver noise.
inline constexpr double kNegativeThreshold = 1e-12;

/// <i j| m^T1 |k l> = <k j| m |i l> (or the analogue on atom 2).
inline Matrix9 partial_transpose(const Matrix9& m, Subsystem which = Subsystem::first) {
  Matrix9 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          out(3 * i + j, 3 * k + l) = which == Subsystem::first ? m(3 * k + j, 3 * i + l)
                                                                 : m(3 * i + l, 3 * k + j);
        }
      }
    }
  }
  return out;
}

inline Matrix9 partial_transpose(const DensityMatrix9& rho, Subsystem which = Subsystem::first) {
  return partial_transpose(rho.matrix(), which);
}

inline double hermiticity_error(const Matrix9& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

/// Ascending eigenvalues of a Hermitian 9x9 matrix.
inline std::array<double, 9> hermitian_eigenvalues(const Matrix9& m) {
  if (const double err = hermiticity_error(m); !(err <= 1e-10)) {
    throw std::invalid_argument("matrix is not Hermitian (max |m - m^dagger| = " + std::to_string(err) + ")");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix9> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  std::array<double, 9> out{};
  for (int i = 0; i < 9; ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end());
  return out;
}

inline double trace_norm(const Matrix9& m) {
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(m)) sum += std::abs(v);
  return sum;
}

/// N = -2 * sum of negative eigenvalues of rho^T1.
inline double negativity(const DensityMatrix9& rho, Subsystem which = Subsystem::first) {
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(partial_transpose(rho, which))) {
    if (v < -kNegativeThreshold) sum += v;
  }
  return -2.0 * sum;
}

struct StateDiagnostics {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  [[nodiscard]] bool valid(double herm_tol = 1e-12, double trace_tol = 1e-12, double psd_tol = 1e-10) const {
    return hermiticity_error <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= -psd_tol;
  }
};

inline StateDiagnostics diagnose(const DensityMatrix9& rho) {
  StateDiagnostics d;
  d.hermiticity_error = hermiticity_error(rho.matrix());
  d.trace_error = std::abs(rho.matrix().trace() - 1.0);
  const Matrix9 sym = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  d.min_eigenvalue = hermitian_eigenvalues(sym).front();
  return d;
}

}  // namespace vtype
