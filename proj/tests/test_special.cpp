#include <doctest.h>

#include "ddsim/errors.hpp"
#include "ddsim/special.hpp"
#include "test_support.hpp"

using namespace ddsim;
namespace t = ddsim::testing;

namespace {

RealMatrix m2(double a, double b, double c, double d) { return RealMatrix::from_rows({{a, b}, {c, d}}); }

void check_scaling(const RealMatrix& a, const ScalingCertificate& cert) {
  const Eigen::MatrixXd k = cert.K.eigen();
  CHECK(k.isDiagonal());
  CHECK((k.diagonal().array() > 0.0).all());
  CHECK(k.diagonal().maxCoeff() == 1.0);
  // independent recomputation of K A K^{-1}
  const Eigen::MatrixXd b = k * a.eigen() * k.inverse();
  CHECK(t::near(b, cert.B.eigen(), 1e-9 * (1.0 + a.max_abs())));
  CHECK(cert.B.eigen().diagonal() == a.eigen().diagonal());
  CHECK(t::min_row_margin(cert.B.eigen()) > 0.0);
  CHECK(cert.dominance.strict);
  CHECK((comparison_matrix(a).eigen() * cert.d).minCoeff() > 0.0);
}

}  // namespace

TEST_CASE("Z and Metzler sign patterns") {
  CHECK(is_z_matrix(m2(2, -1, -3, 4)));
  CHECK_FALSE(is_metzler(m2(2, -1, -3, 4)));
  CHECK_FALSE(is_z_matrix(m2(-2, 1, 1, -2)));
  CHECK(is_metzler(m2(-2, 1, 1, -2)));
  const std::vector<double> diag{3.0, -1.0, 0.0};
  CHECK(is_z_matrix(RealMatrix::diagonal(diag)));
  CHECK(is_metzler(RealMatrix::diagonal(diag)));
}

TEST_CASE("M-matrix and H-matrix tests") {
  CHECK(is_m_matrix(m2(2, -1, -1, 2)));
  CHECK_FALSE(is_m_matrix(m2(1, -2, -2, 1)));
  CHECK_FALSE(is_m_matrix(m2(1, 1, 0, 1)));

  CHECK(is_h_matrix(m2(-2, 1, 1, -2)));
  CHECK_FALSE(is_h_matrix(m2(-1, 2, -2, -1)));

  CHECK(is_hurwitz(m2(-2, 1, 1, -2)));
  CHECK_FALSE(is_hurwitz(m2(0, 1, -1, 0)));
}

TEST_CASE("strictly dominant matrices are H-matrices") {
  t::Rng rng(64);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = dim(rng);
    Eigen::MatrixXd a = t::random_normal(n, rng);
    for (int i = 0; i < n; ++i) {
      const double off = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
      a(i, i) = (a(i, i) >= 0 ? 1.0 : -1.0) * (off + 0.01 + std::abs(a(i, i)));
    }
    const RealMatrix m(a);
    REQUIRE(is_diag_dominant(m, Axis::Row, true).strict);
    // eigenvalue oracle for the comparison matrix
    const Eigen::VectorXcd e =
        Eigen::EigenSolver<Eigen::MatrixXd>(comparison_matrix(m).eigen(), false).eigenvalues();
    CHECK(e.real().minCoeff() > 0.0);
    CHECK(is_h_matrix(m));
  }
}

TEST_CASE("metzler_hurwitz_scaling reference examples") {
  const auto sym = m2(-2, 1, 1, -2);
  const auto c1 = metzler_hurwitz_scaling(sym);
  CHECK(t::near(c1.d, Eigen::Vector2d(1, 1)));
  CHECK(t::near(c1.K.eigen(), Eigen::Matrix2d::Identity()));
  CHECK(t::near(c1.B.eigen(), sym.eigen()));
  CHECK(c1.diagonal_sign == DiagonalSign::AllNegative);
  check_scaling(sym, c1);

  const auto tight = m2(-1, 0.9, 0.9, -1);
  const auto c2 = metzler_hurwitz_scaling(tight);
  CHECK(t::near(c2.d, Eigen::Vector2d(10, 10), 1e-12));
  CHECK(t::near(c2.B.eigen(), tight.eigen(), 1e-12));
  CHECK(c2.dominance.margins[0] == doctest::Approx(0.1));
  check_scaling(tight, c2);

  // d = (1, 0.6); K = diag(d)^{-1} rescaled to max 1 is diag(0.6, 1), which
  // sends the 5 below the diagonal to 5 / 0.6 = 25 / 3.
  const auto lower = m2(-1, 0, 5, -10);
  const auto c3 = metzler_hurwitz_scaling(lower);
  CHECK(t::near(c3.d, Eigen::Vector2d(1, 0.6), 1e-15));
  CHECK(t::near(c3.K.eigen(), Eigen::Vector2d(0.6, 1).asDiagonal().toDenseMatrix(), 1e-15));
  CHECK(t::near(c3.B.eigen(), m2(-1, 0, 25.0 / 3.0, -10).eigen(), 1e-12));
  check_scaling(lower, c3);

  CHECK_THROWS_AS(metzler_hurwitz_scaling(m2(-2, -1, -1, -2)), PreconditionViolated);
  CHECK_THROWS_AS(metzler_hurwitz_scaling(m2(1, 1, 1, 1)), PreconditionViolated);
}

TEST_CASE("h_matrix_scaling reference examples") {
  const auto c1 = h_matrix_scaling(m2(-2, 1, 1, -2));
  CHECK(t::near(c1.K.eigen(), Eigen::Matrix2d::Identity()));

  const auto notm = m2(-2, -1, -1, -2);
  CHECK_FALSE(is_metzler(notm));
  const auto c2 = h_matrix_scaling(notm);
  CHECK(t::near(c2.d, Eigen::Vector2d(1, 1)));
  CHECK(t::near(c2.B.eigen(), notm.eigen()));
  check_scaling(notm, c2);

  CHECK_THROWS_AS(h_matrix_scaling(m2(-1, 2, -2, -1)), PreconditionViolated);
  CHECK_THROWS_AS(h_matrix_scaling(m2(2, 0, 0, 3)), PreconditionViolated);
}

TEST_CASE("property: random M-matrices have a positive scaling vector") {
  t::Rng rng(9001);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXd m = -t::random_metzler_hurwitz(dim(rng), rng);
    REQUIRE(is_m_matrix(RealMatrix(m)));
    const Eigen::VectorXd d = m.fullPivLu().solve(Eigen::VectorXd::Ones(m.rows()));
    CHECK(d.minCoeff() > 0.0);
  }
}

TEST_CASE("property: scalings of random Metzler-Hurwitz and H-matrices") {
  t::Rng rng(31);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const RealMatrix a(t::random_metzler_hurwitz(dim(rng), rng));
    const auto cert = metzler_hurwitz_scaling(a);
    check_scaling(a, cert);
    CHECK(cert.diagonal_sign == DiagonalSign::AllNegative);

    const RealMatrix h(t::random_hurwitz_h(dim(rng), rng));
    const auto hc = h_matrix_scaling(h);
    check_scaling(h, hc);
    CHECK(hc.diagonal_sign == DiagonalSign::AllNegative);
  }
}
