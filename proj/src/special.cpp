#include "ddsim/special.hpp"

#include "ddsim/errors.hpp"

namespace ddsim {

namespace {

template <typename Pred>
bool off_diagonal_all(const RealMatrix& a, Pred pred) {
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (i != j && !pred(a(i, j))) return false;
  return true;
}

Eigen::VectorXcd eigenvalues(const RealMatrix& a) {
  return Eigen::EigenSolver<Eigen::MatrixXd>(a.eigen(), false).eigenvalues();
}

// Row dominance of K A K^{-1} with K = diag(d)^{-1} is (M_A d)_i > 0, so the
// d = M_A^{-1} 1 choice makes every row margin positive.
ScalingCertificate scale_by_comparison(const RealMatrix& a) {
  const RealMatrix m = comparison_matrix(a);
  if (!is_well_conditioned(m.eigen())) {
    throw NumericallySingular("comparison matrix fails the conditioning floor");
  }
  const Eigen::VectorXd d = m.eigen().fullPivLu().solve(Eigen::VectorXd::Ones(a.n()));
  if (!(d.array() > 0.0).all()) {
    throw NumericallySingular("scaling vector has a nonpositive entry");
  }
  if (!((m.eigen() * d).array() > 0.0).all()) {
    throw NumericallySingular("comparison system lost positivity");
  }
  Eigen::VectorXd k = d.cwiseInverse();
  k /= k.maxCoeff();

  Eigen::MatrixXd b = a.eigen();
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) b(i, j) = a(i, j) * (k(i) / k(j));
  RealMatrix bm(std::move(b));

  auto dominance = is_diag_dominant(bm, Axis::Row, true, 0.0);
  if (!dominance.strict) throw NumericallySingular("scaled matrix is not strictly dominant");
  const bool negative = (bm.eigen().diagonal().array() < 0.0).all();
  return {RealMatrix(k.asDiagonal().toDenseMatrix()), std::move(bm), std::move(dominance),
          negative ? DiagonalSign::AllNegative : DiagonalSign::Mixed, d};
}

}  // namespace

bool is_z_matrix(const RealMatrix& a) {
  return off_diagonal_all(a, [](double v) { return v <= 0.0; });
}

bool is_metzler(const RealMatrix& a) {
  return off_diagonal_all(a, [](double v) { return v >= 0.0; });
}

bool is_hurwitz(const RealMatrix& a, double tol) {
  return eigenvalues(a).real().maxCoeff() < -tol;
}

bool is_m_matrix(const RealMatrix& a, double tol) {
  return is_z_matrix(a) && eigenvalues(a).real().minCoeff() > tol;
}

bool is_h_matrix(const RealMatrix& a, double tol) { return is_m_matrix(comparison_matrix(a), tol); }

std::string_view to_string(DiagonalSign s) {
  return s == DiagonalSign::AllNegative ? "AllNegative" : "Mixed";
}

ScalingCertificate metzler_hurwitz_scaling(const RealMatrix& a, double tol) {
  if (!is_metzler(a)) throw PreconditionViolated("matrix is not Metzler");
  if (!is_hurwitz(a, tol)) throw PreconditionViolated("matrix is not Hurwitz");
  return scale_by_comparison(a);
}

ScalingCertificate h_matrix_scaling(const RealMatrix& a, double tol) {
  if (!is_hurwitz(a, tol)) throw PreconditionViolated("matrix is not Hurwitz");
  if (!is_h_matrix(a, tol)) throw PreconditionViolated("matrix is not an H-matrix");
  return scale_by_comparison(a);
}

}  // namespace ddsim
