#include <doctest.h>

#include <cmath>

#include "ddsim/errors.hpp"
#include "ddsim/spectral.hpp"
#include "test_support.hpp"

using namespace ddsim;
namespace t = ddsim::testing;

namespace {

RealMatrix m2(double a, double b, double c, double d) { return RealMatrix::from_rows({{a, b}, {c, d}}); }

void check_sum_rule(const EigenStructure& es) {
  int total = 0;
  for (const auto& e : es.real_eigs) {
    CHECK(e.geo_mult >= 1);
    CHECK(e.geo_mult <= e.alg_mult);
    total += e.alg_mult;
  }
  for (const auto& p : es.complex_pairs) {
    CHECK(p.beta > 0.0);
    CHECK(p.geo_mult >= 1);
    CHECK(p.geo_mult <= p.alg_mult);
    total += 2 * p.alg_mult;
  }
  CHECK(total == es.n);
}

void check_jordan(const RealMatrix& a, const RealJordanForm& jf) {
  CHECK(jf.residual <= jordan_residual_tol(a));
  CHECK(similarity_residual(a, jf.P, jf.J) == doctest::Approx(jf.residual));
  int dim = 0;
  for (const auto& b : jf.blocks) dim += block_dimension(b);
  CHECK(dim == a.n());
  CHECK(jf.J == assemble_jordan_matrix(jf.blocks));
  const double tr = a.eigen().trace();
  const double det = a.eigen().determinant();
  CHECK(std::abs(jf.J.eigen().trace() - tr) <= 1e-6 * (1 + std::abs(tr)));
  CHECK(std::abs(jf.J.eigen().determinant() - det) <= 1e-6 * (1 + std::abs(det)));
}

}  // namespace

TEST_CASE("eigen_structure reference examples") {
  const auto tri = eigen_structure(m2(-2, 1, 0, -3));
  REQUIRE(tri.real_eigs.size() == 2);
  CHECK(tri.complex_pairs.empty());
  CHECK(tri.real_eigs[0].value == doctest::Approx(-3.0));
  CHECK(tri.real_eigs[1].value == doctest::Approx(-2.0));
  for (const auto& e : tri.real_eigs) {
    CHECK(e.alg_mult == 1);
    CHECK(e.geo_mult == 1);
  }

  const auto rot = eigen_structure(m2(-1, 2, -2, -1));
  CHECK(rot.real_eigs.empty());
  REQUIRE(rot.complex_pairs.size() == 1);
  CHECK(rot.complex_pairs[0].alpha == doctest::Approx(-1.0));
  CHECK(rot.complex_pairs[0].beta == doctest::Approx(2.0));
  CHECK(rot.complex_pairs[0].alg_mult == 1);
  CHECK(rot.complex_pairs[0].geo_mult == 1);

  // rank(A + 2I) = 1, so one eigenvector for a double eigenvalue.
  const auto defective = eigen_structure(m2(-2, 1, 0, -2));
  REQUIRE(defective.real_eigs.size() == 1);
  CHECK(defective.real_eigs[0].value == doctest::Approx(-2.0));
  CHECK(defective.real_eigs[0].alg_mult == 2);
  CHECK(defective.real_eigs[0].geo_mult == 1);
}

TEST_CASE("real_jordan_form reference examples") {
  SUBCASE("diagonal input is reordered ascending") {
    const auto a = m2(-2, 0, 0, -3);
    const auto jf = real_jordan_form(a);
    CHECK(t::near(jf.J.eigen(), m2(-3, 0, 0, -2).eigen()));
    // P is the swap up to per-chain normalization.
    CHECK(t::near(jf.P.eigen().cwiseAbs(), m2(0, 1, 1, 0).eigen()));
    check_jordan(a, jf);
  }
  SUBCASE("rotation is already a complex cell") {
    const auto a = m2(0, 1, -1, 0);
    const auto jf = real_jordan_form(a);
    CHECK(t::near(jf.J.eigen(), a.eigen()));
    REQUIRE(jf.blocks.size() == 1);
    const auto& cb = std::get<ComplexJordanBlock>(jf.blocks[0]);
    CHECK(cb.alpha == doctest::Approx(0.0));
    CHECK(cb.beta == doctest::Approx(1.0));
    CHECK(cb.chain_length == 1);
    check_jordan(a, jf);
  }
  SUBCASE("defective 2x2 is its own Jordan form") {
    const auto a = m2(-2, 1, 0, -2);
    const auto jf = real_jordan_form(a);
    CHECK(t::near(jf.J.eigen(), a.eigen()));
    CHECK(jf.residual <= 1e-8);
    REQUIRE(jf.blocks.size() == 1);
    CHECK(std::get<RealJordanBlock>(jf.blocks[0]).size == 2);
  }
}

TEST_CASE("complex chains follow the identity-coupled layout") {
  // [[B, I], [0, B]] with B = [[-2, 1], [-1, -2]], hidden behind an integer
  // unimodular similarity so the defect is exact in the input.
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(4, 4);
  j.block(0, 0, 2, 2) << -2, 1, -1, -2;
  j.block(2, 2, 2, 2) << -2, 1, -1, -2;
  j.block(0, 2, 2, 2).setIdentity();
  t::Rng rng(3);
  const auto u = t::random_unimodular(4, rng, 6);
  const RealMatrix a(u.q * j * u.q_inv);

  const auto es = eigen_structure(a);
  REQUIRE(es.complex_pairs.size() == 1);
  CHECK(es.complex_pairs[0].alg_mult == 2);
  CHECK(es.complex_pairs[0].geo_mult == 1);

  const auto jf = real_jordan_form(a);
  REQUIRE(jf.blocks.size() == 1);
  CHECK(std::get<ComplexJordanBlock>(jf.blocks[0]).chain_length == 2);
  CHECK(t::near(jf.J.eigen(), j, 1e-7));
  check_jordan(a, jf);
}

TEST_CASE("mixed structure: real chain, simple eigenvalue and a complex pair") {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 6);
  j(0, 0) = -1;
  j(1, 1) = j(2, 2) = j(3, 3) = 2;
  j(1, 2) = j(2, 3) = 1;
  j.block(4, 4, 2, 2) << 1, 3, -3, 1;
  t::Rng rng(11);
  const auto u = t::random_unimodular(6, rng, 8);
  const RealMatrix a(u.q * j * u.q_inv);

  // A size-3 chain splits eigenvalues by ~eps^(1/3); widen the clustering.
  const auto es = eigen_structure(a, 1e-4);
  check_sum_rule(es);
  REQUIRE(es.real_eigs.size() == 2);
  CHECK(es.real_eigs[1].alg_mult == 3);
  CHECK(es.real_eigs[1].geo_mult == 1);

  const auto jf = real_jordan_form(a, 1e-4);
  REQUIRE(jf.blocks.size() == 3);
  CHECK(std::get<RealJordanBlock>(jf.blocks[0]).size == 1);
  CHECK(std::get<RealJordanBlock>(jf.blocks[1]).size == 3);
  CHECK(std::get<ComplexJordanBlock>(jf.blocks[2]).beta == doctest::Approx(3.0));
  check_jordan(a, jf);
}

TEST_CASE("semisimple repeated eigenvalue yields separate chains") {
  t::Rng rng(5);
  const auto u = t::random_unimodular(3, rng, 5);
  const Eigen::MatrixXd d = Eigen::Vector3d(-4, -4, 1).asDiagonal();
  const RealMatrix a(u.q * d * u.q_inv);
  const auto es = eigen_structure(a);
  REQUIRE(es.real_eigs.size() == 2);
  CHECK(es.real_eigs[0].alg_mult == 2);
  CHECK(es.real_eigs[0].geo_mult == 2);
  const auto jf = real_jordan_form(a);
  CHECK(jf.blocks.size() == 3);
  CHECK(t::near(jf.J.eigen(), d, 1e-8));
}

TEST_CASE("ClusterAmbiguity reports both groupings") {
  const std::vector<double> diag{0.0, 1.0, 2.0};
  const RealMatrix a = RealMatrix::diagonal(diag);
  const double cluster_tol = 1.5 / (1.0 + std::sqrt(5.0));
  try {
    eigen_structure(a, cluster_tol);
    FAIL("expected ClusterAmbiguity");
  } catch (const ClusterAmbiguity& e) {
    CHECK(e.linked_grouping().size() == 1);
    CHECK(e.split_grouping().size() == 2);
  }
}

TEST_CASE("property: diagonalizable matrices with separated spectra") {
  t::Rng rng(424242);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_real_distribution<double> val(-4.0, 4.0);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = dim(rng);
    std::vector<double> reals;
    std::vector<t::PairSpec> pairs;
    int filled = 0;
    while (filled < n) {
      if (n - filled >= 2 && val(rng) > 1.0) {
        pairs.push_back({val(rng), 0.2 + std::abs(val(rng))});
        filled += 2;
      } else {
        reals.push_back(val(rng));
        ++filled;
      }
    }
    const Eigen::MatrixXd d = t::spectrum_matrix(reals, pairs);
    if (t::eigen_separation(d) < 0.05) continue;
    const Eigen::MatrixXd q = t::random_well_conditioned(n, rng, 50.0);
    const RealMatrix a(q * d * q.inverse());

    const auto es = eigen_structure(a);
    check_sum_rule(es);
    for (const auto& e : es.real_eigs) CHECK(e.geo_mult == e.alg_mult);
    for (const auto& p : es.complex_pairs) CHECK(p.geo_mult == p.alg_mult);
    const auto expected = t::sorted_eigenvalues(d.cast<std::complex<double>>());
    std::vector<std::complex<double>> got;
    for (const auto& e : es.real_eigs) got.emplace_back(e.value, 0.0);
    for (const auto& p : es.complex_pairs) {
      got.emplace_back(p.alpha, p.beta);
      got.emplace_back(p.alpha, -p.beta);
    }
    std::sort(got.begin(), got.end(), [](auto x, auto y) {
      if (std::abs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
      return x.imag() < y.imag();
    });
    CHECK(t::max_pairing_error(expected, got) <= 1e-6);

    check_jordan(a, real_jordan_form(a));
  }
}
