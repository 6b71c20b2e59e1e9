#include "ddsim/matrix.hpp"

#include <cmath>
#include <string>

#include "ddsim/errors.hpp"

namespace ddsim {

RealMatrix::RealMatrix(Eigen::MatrixXd entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw InvalidMatrix("matrix must be square with n >= 1, got " + std::to_string(m_.rows()) +
                        "x" + std::to_string(m_.cols()));
  }
  if (!m_.allFinite()) throw InvalidMatrix("matrix entries must be finite");
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) {
      throw InvalidMatrix("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(n));
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return RealMatrix(std::move(m));
}

RealMatrix RealMatrix::identity(int n) { return RealMatrix(Eigen::MatrixXd::Identity(n, n)); }

RealMatrix RealMatrix::zero(int n) { return RealMatrix(Eigen::MatrixXd::Zero(n, n)); }

RealMatrix RealMatrix::diagonal(std::span<const double> values) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) d(static_cast<Eigen::Index>(i)) = values[i];
  return RealMatrix(d.asDiagonal().toDenseMatrix());
}

std::vector<std::vector<double>> RealMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n(), std::vector<double>(n()));
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) rows[i][j] = m_(i, j);
  return rows;
}

SplitComplexMatrix SplitComplexMatrix::from_eigen(const Eigen::MatrixXcd& m) {
  return {RealMatrix(m.real()), RealMatrix(m.imag())};
}

SplitComplexMatrix SplitComplexMatrix::from_real(const RealMatrix& m) {
  return {m, RealMatrix::zero(m.n())};
}

Eigen::MatrixXcd SplitComplexMatrix::eigen() const {
  if (re.n() != im.n()) throw DimensionMismatch("real and imaginary parts differ in size");
  Eigen::MatrixXcd m(re.n(), re.n());
  m.real() = re.eigen();
  m.imag() = im.eigen();
  return m;
}

double default_dominance_tol(const RealMatrix& a) { return 1e-12 * (1.0 + a.max_abs()); }

namespace {

template <typename Derived>
DominanceReport dominance_of(const Eigen::MatrixBase<Derived>& abs_entries, Axis axis,
                             bool strict, double tol) {
  const Eigen::Index n = abs_entries.rows();
  DominanceReport report{axis, strict, false, true, true, tol, std::vector<double>(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      radius += axis == Axis::Row ? abs_entries(i, j) : abs_entries(j, i);
    }
    const double margin = abs_entries(i, i) - radius;
    report.margins[i] = margin;
    if (!(margin > tol)) report.strict = false;
    if (!(margin >= -tol)) report.non_strict = false;
  }
  report.dominant = strict ? report.strict : report.non_strict;
  return report;
}

}  // namespace

DominanceReport is_diag_dominant(const RealMatrix& a, Axis axis, bool strict, double tol) {
  return dominance_of(a.eigen().cwiseAbs(), axis, strict, tol);
}

DominanceReport is_diag_dominant(const SplitComplexMatrix& a, Axis axis, bool strict,
                                 double tol) {
  return dominance_of(a.eigen().cwiseAbs(), axis, strict, tol);
}

RealMatrix comparison_matrix(const RealMatrix& a) {
  Eigen::MatrixXd m = -a.eigen().cwiseAbs();
  m.diagonal() = a.eigen().diagonal().cwiseAbs();
  return RealMatrix(std::move(m));
}

std::vector<GershgorinDisc> gershgorin_discs(const RealMatrix& a, Axis axis) {
  const int n = a.n();
  std::vector<GershgorinDisc> discs;
  discs.reserve(n);
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      radius += std::abs(axis == Axis::Row ? a(i, j) : a(j, i));
    }
    discs.push_back({a(i, i), radius, i, axis});
  }
  return discs;
}

bool is_well_conditioned(const Eigen::MatrixXd& p, double floor) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(p).singularValues();
  return s(0) > 0.0 && s(s.size() - 1) >= floor * s(0);
}

bool is_well_conditioned(const Eigen::MatrixXcd& p, double floor) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXcd>(p).singularValues();
  return s(0) > 0.0 && s(s.size() - 1) >= floor * s(0);
}

double similarity_residual(const RealMatrix& a, const RealMatrix& p, const RealMatrix& b) {
  if (p.n() != a.n() || b.n() != a.n()) throw DimensionMismatch("A, P and B must share n");
  if (!is_well_conditioned(p.eigen())) {
    throw SingularTransform("transform fails the conditioning floor");
  }
  const Eigen::MatrixXd r = p.eigen() * a.eigen() - b.eigen() * p.eigen();
  return r.norm() / (a.frobenius_norm() + 1.0);
}

double similarity_residual(const RealMatrix& a, const SplitComplexMatrix& p,
                           const SplitComplexMatrix& b) {
  if (p.n() != a.n() || b.n() != a.n()) throw DimensionMismatch("A, P and B must share n");
  const Eigen::MatrixXcd pc = p.eigen();
  if (!is_well_conditioned(pc)) {
    throw SingularTransform("transform fails the conditioning floor");
  }
  const Eigen::MatrixXcd r = pc * a.eigen().cast<std::complex<double>>() - b.eigen() * pc;
  return r.norm() / (a.frobenius_norm() + 1.0);
}

}  // namespace ddsim
