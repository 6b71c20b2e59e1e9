#pragma once

#include <string_view>

#include "ddsim/matrix.hpp"

namespace ddsim {

inline constexpr double kDefaultHurwitzTol = 1e-9;

bool is_z_matrix(const RealMatrix& a);
bool is_metzler(const RealMatrix& a);

/// All eigenvalues have real part < -tol.
bool is_hurwitz(const RealMatrix& a, double tol = kDefaultHurwitzTol);

/// Z-matrix whose eigenvalues all have real part > tol (nonsingular convention).
bool is_m_matrix(const RealMatrix& a, double tol = kDefaultHurwitzTol);

/// comparison_matrix(A) is an M-matrix.
bool is_h_matrix(const RealMatrix& a, double tol = kDefaultHurwitzTol);

enum class DiagonalSign { AllNegative, Mixed };

std::string_view to_string(DiagonalSign s);

/// K positive diagonal with B = K A K^{-1} strictly row dominant.
struct ScalingCertificate {
  RealMatrix K;
  RealMatrix B;
  DominanceReport dominance;
  DiagonalSign diagonal_sign;
  Eigen::VectorXd d;  // d = M_A^{-1} 1, K = diag(d)^{-1} up to a uniform factor
};

/// Diagonal scaling for Metzler Hurwitz matrices.  Throws
/// PreconditionViolated unless A is Metzler and Hurwitz.
ScalingCertificate metzler_hurwitz_scaling(const RealMatrix& a, double tol = kDefaultHurwitzTol);

/// Diagonal scaling for Hurwitz H-matrices.  Throws PreconditionViolated
/// unless A is Hurwitz and an H-matrix.
ScalingCertificate h_matrix_scaling(const RealMatrix& a, double tol = kDefaultHurwitzTol);

}  // namespace ddsim
