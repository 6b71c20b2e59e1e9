#include "ddsim/construct.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "ddsim/errors.hpp"

namespace ddsim {

namespace {

using cplx = std::complex<double>;

std::string describe(const JordanBlock& block) {
  if (const auto* rb = std::get_if<RealJordanBlock>(&block)) {
    return "real block (lambda=" + std::to_string(rb->lambda) + ", size=" +
           std::to_string(rb->size) + ")";
  }
  const auto& cb = std::get<ComplexJordanBlock>(block);
  return "complex block (alpha=" + std::to_string(cb.alpha) + ", beta=" + std::to_string(cb.beta) +
         ", chain=" + std::to_string(cb.chain_length) + ")";
}

// Geometric weights rho^k along one chain; cells of width 2 share a weight.
void fill_chain_weights(Eigen::VectorXd& w, int offset, int length, int cell, double slack,
                        double margin) {
  if (length == 1) return;
  constexpr double kCoupling = 1.0;
  const double rho = std::max(2.0, (1.0 + kCoupling) / (margin * slack));
  double weight = 1.0;
  for (int k = 0; k < length; ++k) {
    for (int c = 0; c < cell; ++c) w(offset + cell * k + c) = weight;
    weight *= rho;
  }
}

template <typename Derived>
Derived diagonal_similarity(const Derived& m, const Eigen::VectorXd& w) {
  Derived out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * (w(i) / w(j));
  return out;
}

void check_margin(double margin) {
  if (!(margin > 0.0 && margin < 1.0)) throw PreconditionViolated("margin must lie in (0, 1)");
}

bool permits(Verdict v, Target t) {
  if (v == Verdict::StrictAchievable) return true;
  return v == Verdict::NonStrictOnly && t == Target::NonStrict;
}

// Equalizes |alpha| and |beta| on borderline cells so the non-strict target
// holds exactly in floating point.
RealJordanForm snap_borderline(const RealMatrix& a, RealJordanForm jf, double tol) {
  bool changed = false;
  for (auto& block : jf.blocks) {
    auto* cb = std::get_if<ComplexJordanBlock>(&block);
    if (cb == nullptr) continue;
    const double x = std::abs(cb->alpha), y = std::abs(cb->beta);
    if (std::abs(x - y) <= tol * (x + y) && x != y) {
      const double mid = 0.5 * (x + y);
      cb->alpha = std::copysign(mid, cb->alpha);
      cb->beta = mid;
      changed = true;
    }
  }
  if (changed) {
    jf.J = assemble_jordan_matrix(jf.blocks);
    jf.residual = similarity_residual(a, jf.P, jf.J);
  }
  return jf;
}

}  // namespace

std::string_view to_string(Target t) { return t == Target::Strict ? "Strict" : "NonStrict"; }

double certificate_tol(const RealMatrix& a) { return 1e-6 * (1.0 + a.frobenius_norm()); }

DiagonalScaling scale_jordan_to_dd(const RealJordanForm& jf, Target target, double margin) {
  check_margin(margin);
  const int n = jf.J.n();
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  int at = 0;
  for (const auto& block : jf.blocks) {
    if (const auto* rb = std::get_if<RealJordanBlock>(&block)) {
      const double slack = std::abs(rb->lambda);
      if (!(slack > 0.0)) {
        throw PreconditionViolated("zero eigenvalue in " + describe(block));
      }
      fill_chain_weights(w, at, rb->size, 1, slack, margin);
    } else {
      const auto& cb = std::get<ComplexJordanBlock>(block);
      const double slack = std::abs(cb.alpha) - std::abs(cb.beta);
      const bool ok = target == Target::Strict ? slack > 0.0
                                               : slack > 0.0 || (slack == 0.0 && cb.chain_length == 1);
      if (!ok) throw PreconditionViolated("cannot reach " + std::string(to_string(target)) +
                                          " dominance for " + describe(block));
      if (slack > 0.0) fill_chain_weights(w, at, cb.chain_length, 2, slack, margin);
    }
    at += block_dimension(block);
  }
  const Eigen::MatrixXd b = diagonal_similarity(jf.J.eigen(), w);
  return {RealMatrix(w.asDiagonal().toDenseMatrix()), RealMatrix(b)};
}

SimilarityCertificate build_real_dd_transform(const RealMatrix& a, Target target, double tol,
                                              double margin) {
  check_margin(margin);
  const DDClassification cls = classify(a, tol);
  if (!permits(cls.verdict, target)) {
    throw NotAchievable("verdict " + std::string(to_string(cls.verdict)) + " forbids a " +
                        std::string(to_string(target)) + " target");
  }
  const bool strict = target == Target::Strict;

  auto already = is_diag_dominant(a, Axis::Row, strict, 0.0);
  if (already.dominant) {
    const RealMatrix p = RealMatrix::identity(a.n());
    return {p, a, std::move(already), similarity_residual(a, p, a), target};
  }

  RealJordanForm jf = real_jordan_form(a);
  if (!strict) jf = snap_borderline(a, std::move(jf), tol);
  DiagonalScaling scaled = scale_jordan_to_dd(jf, target, margin);

  RealMatrix p(scaled.D.eigen() * jf.P.eigen());
  const double residual = similarity_residual(a, p, scaled.B);
  if (!(residual <= certificate_tol(a))) {
    throw IllConditionedJordan("certificate residual " + std::to_string(residual) +
                               " exceeds tolerance");
  }
  auto dominance = is_diag_dominant(scaled.B, Axis::Row, strict, 0.0);
  if (!dominance.dominant) {
    throw IllConditionedJordan("scaled Jordan form misses the dominance target");
  }
  return {std::move(p), std::move(scaled.B), std::move(dominance), residual, target};
}

ComplexSimilarityCertificate build_complex_dd_transform(const RealMatrix& a, double tol,
                                                        double margin) {
  check_margin(margin);
  if (!(tol >= 0.0)) throw PreconditionViolated("tol must be nonnegative");
  const Eigen::VectorXcd eigs = Eigen::EigenSolver<Eigen::MatrixXd>(a.eigen(), false).eigenvalues();
  const double zero_thr = tol * (1.0 + a.frobenius_norm());
  for (const cplx& z : eigs) {
    if (std::abs(z) <= zero_thr) throw SingularInput("eigenvalue within tol of zero");
  }

  auto already = is_diag_dominant(a, Axis::Row, true, 0.0);
  if (already.dominant) {
    const auto p = SplitComplexMatrix::from_real(RealMatrix::identity(a.n()));
    const auto b = SplitComplexMatrix::from_real(a);
    return {p, b, std::move(already), similarity_residual(a, p, b)};
  }

  const RealJordanForm jf = real_jordan_form(a);
  const int n = a.n();
  Eigen::MatrixXcd cell_inv = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd bc = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  const cplx j1{0.0, 1.0};
  int at = 0;
  for (const auto& block : jf.blocks) {
    if (const auto* rb = std::get_if<RealJordanBlock>(&block)) {
      for (int k = 0; k < rb->size; ++k) {
        bc(at + k, at + k) = rb->lambda;
        if (k + 1 < rb->size) bc(at + k, at + k + 1) = 1.0;
      }
      fill_chain_weights(w, at, rb->size, 1, std::abs(rb->lambda), margin);
    } else {
      const auto& cb = std::get<ComplexJordanBlock>(block);
      const cplx lambda{cb.alpha, cb.beta};
      for (int k = 0; k < cb.chain_length; ++k) {
        const int r = at + 2 * k;
        // Inverse of [[-j, -j], [1, -1]].
        cell_inv(r, r) = 0.5 * j1;
        cell_inv(r, r + 1) = 0.5;
        cell_inv(r + 1, r) = 0.5 * j1;
        cell_inv(r + 1, r + 1) = -0.5;
        bc(r, r) = lambda;
        bc(r + 1, r + 1) = std::conj(lambda);
        if (k + 1 < cb.chain_length) {
          bc(r, r + 2) = 1.0;
          bc(r + 1, r + 3) = 1.0;
        }
      }
      fill_chain_weights(w, at, cb.chain_length, 2, std::abs(lambda), margin);
    }
    at += block_dimension(block);
  }

  const Eigen::MatrixXcd p = w.cast<cplx>().asDiagonal() * (cell_inv * jf.P.eigen().cast<cplx>());
  const Eigen::MatrixXcd b = diagonal_similarity(bc, w);
  auto pc = SplitComplexMatrix::from_eigen(p);
  auto bcs = SplitComplexMatrix::from_eigen(b);
  const double residual = similarity_residual(a, pc, bcs);
  if (!(residual <= certificate_tol(a))) {
    throw IllConditionedJordan("certificate residual " + std::to_string(residual) +
                               " exceeds tolerance");
  }
  auto dominance = is_diag_dominant(bcs, Axis::Row, true, 0.0);
  if (!dominance.dominant) {
    throw IllConditionedJordan("complex transform misses strict dominance");
  }
  return {std::move(pc), std::move(bcs), std::move(dominance), residual};
}

}  // namespace ddsim
