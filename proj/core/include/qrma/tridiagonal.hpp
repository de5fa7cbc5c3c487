#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qrma/model.hpp"

namespace qrma {

/// Eigenpairs of a symmetric tridiagonal matrix.
///
/// Values ascend. Columns of `vectors` are the matching unit eigenvectors, each
/// oriented so that its first component with magnitude above kSignThreshold is
/// positive. Values closer than kTieTolerance are ordered by the index of that
/// leading component.
struct TridiagonalEigen {
    std::vector<double> values;
    Eigen::MatrixXd vectors;
};

inline constexpr double kSignThreshold = 1e-10;
inline constexpr double kTieTolerance = 1e-12;

/// Implicit-shift QL sweeps allowed per eigenvalue before ConvergenceError.
inline constexpr int kQlIterationCap = 60;

/// All eigenvalues, ascending. O(n^2).
std::vector<double> tridiagonal_eigenvalues(const TridiagonalBlock& block);

/// All eigenpairs. O(n^3) because the rotations are accumulated into the vectors.
TridiagonalEigen tridiagonal_eigensystem(const TridiagonalBlock& block);

}  // namespace qrma
