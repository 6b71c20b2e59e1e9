#include <doctest.h>

#include "ddsim/errors.hpp"
#include "ddsim/oracle.hpp"
#include "test_support.hpp"

using namespace ddsim;
namespace t = ddsim::testing;

namespace {

RealMatrix m2(double a, double b, double c, double d) { return RealMatrix::from_rows({{a, b}, {c, d}}); }

}  // namespace

TEST_CASE("grid_search_2x2 reference examples") {
  const auto hit = grid_search_2x2(-2, 1, {-5, 5}, {0.1, 5}, 100, true);
  CHECK(hit.found);
  REQUIRE(hit.witness.has_value());
  CHECK(lemma3_strict_feasible(-2, 1, hit.witness->x, hit.witness->y));
  CHECK(lemma3_strict_feasible(-2, 1, 0, 1));

  const auto miss = grid_search_2x2(0, 1, {-10, 10}, {0.01, 10}, 400, false);
  CHECK_FALSE(miss.found);
  CHECK_FALSE(miss.witness.has_value());
  CHECK(miss.best_margin < 0.0);
  CHECK(miss.samples >= 400L * 2 * 400);

  const auto edge = grid_search_2x2(-1, 1, {-10, 10}, {0.01, 10}, 400, false);
  REQUIRE(edge.found);
  CHECK(edge.witness->x == 0.0);
  CHECK(std::abs(edge.witness->y) == 1.0);
  CHECK(edge.best_margin == 0.0);

  const auto edge_strict = grid_search_2x2(-1, 1, {-10, 10}, {0.01, 10}, 400, true);
  CHECK_FALSE(edge_strict.found);
}

TEST_CASE("witness matrices are dominant and similar") {
  const auto hit = grid_search_2x2(-3, 2, {-4, 4}, {0.05, 20}, 200, true);
  REQUIRE(hit.found);
  const auto k = params_to_matrix(*hit.witness);
  CHECK(t::min_row_margin(k.eigen()) > 0.0);
  CHECK(k.eigen().trace() == doctest::Approx(-6.0));
  CHECK(k.eigen().determinant() == doctest::Approx(13.0));
}

TEST_CASE("grid_search_2x2 preconditions") {
  CHECK_THROWS_AS(grid_search_2x2(-1, 0, {-1, 1}, {0.1, 1}, 10, true), PreconditionViolated);
  CHECK_THROWS_AS(grid_search_2x2(-1, 1, {-1, 1}, {0.1, 1}, 1, true), PreconditionViolated);
  CHECK_THROWS_AS(grid_search_2x2(-1, 1, {-1, 1}, {0.0, 1}, 10, true), PreconditionViolated);
}

TEST_CASE("random_similarity_search reference examples") {
  const auto easy = random_similarity_search(m2(-2, 0, 0, -3), 1, 0, true);
  CHECK(easy.found);
  CHECK(easy.samples == 1);
  CHECK(*easy.witness == RealMatrix::identity(2));

  const auto rot = random_similarity_search(m2(0, 1, -1, 0), 20000, 42, false);
  CHECK_FALSE(rot.found);
  CHECK(rot.samples == 20000);
  CHECK(rot.best_margin < 0.0);

  // found witness must check out
  const auto tri = random_similarity_search(m2(-1, 5, 0, -4), 5000, 3, true);
  REQUIRE(tri.found);
  const Eigen::MatrixXd p = tri.witness->eigen();
  const Eigen::MatrixXd b = p * m2(-1, 5, 0, -4).eigen() * p.inverse();
  CHECK(std::max(t::min_row_margin(b), t::min_row_margin(Eigen::MatrixXd(b.transpose()))) > 0.0);
}

TEST_CASE("random_similarity_search is deterministic") {
  t::Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const RealMatrix a(t::random_normal(3, rng));
    const auto r1 = random_similarity_search(a, 2000, 777, true);
    const auto r2 = random_similarity_search(a, 2000, 777, true);
    CHECK(r1.found == r2.found);
    CHECK(r1.samples == r2.samples);
    CHECK(r1.best_margin == r2.best_margin);
    if (r1.found) CHECK(*r1.witness == *r2.witness);
  }
  const auto g1 = grid_search_2x2(-0.7, 1, {-3, 3}, {0.1, 3}, 50, false);
  const auto g2 = grid_search_2x2(-0.7, 1, {-3, 3}, {0.1, 3}, 50, false);
  CHECK(g1.best_margin == g2.best_margin);
  CHECK(g1.samples == g2.samples);
}
