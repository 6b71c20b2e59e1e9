#include "ddsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ddsim/errors.hpp"

namespace ddsim {

namespace {

// Endpoint-inclusive grid plus the anchor, kept sorted.
std::vector<double> with_anchor(std::vector<double> nodes, Interval r, double anchor) {
  if (anchor >= r.lo && anchor <= r.hi) {
    auto at = std::lower_bound(nodes.begin(), nodes.end(), anchor);
    if (at == nodes.end() || *at != anchor) nodes.insert(at, anchor);
  }
  return nodes;
}

std::vector<double> linear_nodes(Interval r, int steps) {
  if (r.hi == r.lo) return {r.lo};
  std::vector<double> nodes(steps);
  for (int k = 0; k < steps; ++k) nodes[k] = r.lo + (r.hi - r.lo) * k / (steps - 1);
  nodes.back() = r.hi;
  return with_anchor(std::move(nodes), r, 0.0);
}

std::vector<double> log_nodes(Interval r, int steps) {
  if (r.hi == r.lo) return {r.lo};
  const double lo = std::log(r.lo), hi = std::log(r.hi);
  std::vector<double> nodes(steps);
  for (int k = 0; k < steps; ++k) nodes[k] = std::exp(lo + (hi - lo) * k / (steps - 1));
  nodes.front() = r.lo;
  nodes.back() = r.hi;
  return with_anchor(std::move(nodes), r, 1.0);
}

double min_margin(const std::vector<double>& margins) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : margins) m = std::min(m, v);
  return m;
}

}  // namespace

GridSearchResult grid_search_2x2(double alpha, double beta, Interval x_range,
                                 Interval abs_y_range, int steps, bool strict) {
  if (beta == 0.0) throw PreconditionViolated("beta must be nonzero");
  if (steps < 2) throw PreconditionViolated("steps must be at least 2");
  if (!(abs_y_range.lo > 0.0) || abs_y_range.hi < abs_y_range.lo || x_range.hi < x_range.lo) {
    throw PreconditionViolated("y range must exclude zero and ranges must be ordered");
  }
  const auto xs = linear_nodes(x_range, steps);
  std::vector<double> ys = log_nodes(abs_y_range, steps);
  const std::size_t positive = ys.size();
  for (std::size_t i = 0; i < positive; ++i) ys.push_back(-ys[i]);

  GridSearchResult result;
  result.best_margin = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    for (double y : ys) {
      ++result.samples;
      const double margin = lemma3_margin(alpha, beta, x, y);
      result.best_margin = std::max(result.best_margin, margin);
      if (strict ? margin > 0.0 : margin >= 0.0) {
        result.found = true;
        result.witness = TwoByTwoParams{alpha, beta, x, y};
        return result;
      }
    }
  }
  return result;
}

RandomSearchResult random_similarity_search(const RealMatrix& a, long trials, std::uint64_t seed,
                                            bool strict) {
  if (trials < 1) throw PreconditionViolated("trials must be positive");
  const int n = a.n();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  RandomSearchResult result;
  result.best_margin = -std::numeric_limits<double>::infinity();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  for (long t = 0; t < trials; ++t) {
    if (t > 0) {
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) p(i, j) = normal(rng);
      } while (!is_well_conditioned(p));
    }
    ++result.samples;
    const Eigen::MatrixXd b = p * a.eigen() * p.partialPivLu().inverse();
    if (!b.allFinite()) continue;
    const RealMatrix bm(b);
    const double margin =
        std::max(min_margin(is_diag_dominant(bm, Axis::Row, strict).margins),
                 min_margin(is_diag_dominant(bm, Axis::Column, strict).margins));
    result.best_margin = std::max(result.best_margin, margin);
    if (strict ? margin > 0.0 : margin >= 0.0) {
      result.found = true;
      result.witness = RealMatrix(p);
      return result;
    }
  }
  return result;
}

}  // namespace ddsim
