#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ddsim {

enum class Axis { Row, Column };

/// Dense real square matrix with finite entries.
///
/// The invariants (square, n >= 1, no NaN/Inf) are checked on construction,
/// so every RealMatrix reaching the algorithms is well formed.
class RealMatrix {
 public:
  explicit RealMatrix(Eigen::MatrixXd entries);

  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static RealMatrix identity(int n);
  static RealMatrix zero(int n);
  static RealMatrix diagonal(std::span<const double> values);

  int n() const noexcept { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& eigen() const noexcept { return m_; }

  RealMatrix transposed() const { return RealMatrix(m_.transpose()); }
  double frobenius_norm() const { return m_.norm(); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const RealMatrix& a, const RealMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXd m_;
};

/// Complex matrix stored as separate real and imaginary parts.
struct SplitComplexMatrix {
  RealMatrix re;
  RealMatrix im;

  static SplitComplexMatrix from_eigen(const Eigen::MatrixXcd& m);
  static SplitComplexMatrix from_real(const RealMatrix& m);
  Eigen::MatrixXcd eigen() const;
  int n() const noexcept { return re.n(); }
};

struct GershgorinDisc {
  double center;
  double radius;
  int index;
  Axis axis;
};

struct DominanceReport {
  Axis axis;
  bool strict_requested;
  bool dominant;    // the requested kind of dominance holds
  bool strict;      // all margins > tol
  bool non_strict;  // all margins >= -tol
  double tol;
  std::vector<double> margins;  // |a_ii| - radius_i
};

/// Scale-aware slack 1e-12 * (1 + max |a_ij|).
double default_dominance_tol(const RealMatrix& a);

DominanceReport is_diag_dominant(const RealMatrix& a, Axis axis, bool strict, double tol = 0.0);

/// Magnitude-sense dominance for complex matrices.
DominanceReport is_diag_dominant(const SplitComplexMatrix& a, Axis axis, bool strict,
                                 double tol = 0.0);

RealMatrix comparison_matrix(const RealMatrix& a);

std::vector<GershgorinDisc> gershgorin_discs(const RealMatrix& a, Axis axis);

/// Relative conditioning floor for similarity transforms: P is rejected when
/// sigma_min(P) < kTransformConditionFloor * sigma_max(P).
inline constexpr double kTransformConditionFloor = 1e-12;

bool is_well_conditioned(const Eigen::MatrixXd& p, double floor = kTransformConditionFloor);
bool is_well_conditioned(const Eigen::MatrixXcd& p, double floor = kTransformConditionFloor);

/// ||PA - BP||_F / (||A||_F + 1).  Throws SingularTransform when P fails the
/// conditioning floor.
double similarity_residual(const RealMatrix& a, const RealMatrix& p, const RealMatrix& b);
double similarity_residual(const RealMatrix& a, const SplitComplexMatrix& p,
                           const SplitComplexMatrix& b);

}  // namespace ddsim
