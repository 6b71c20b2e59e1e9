#pragma once

#include <cstdint>
#include <optional>

#include "ddsim/classify.hpp"
#include "ddsim/matrix.hpp"

namespace ddsim {

struct Interval {
  double lo;
  double hi;
};

struct GridSearchResult {
  bool found = false;
  std::optional<TwoByTwoParams> witness;
  double best_margin;  // largest row margin seen; negative when nothing is dominant
  long samples = 0;
};

/// Exhaustive (x, y) scan of the 2x2 similarity class of
/// [[alpha, beta], [-beta, alpha]].
///
/// x nodes are `steps` uniform points over the range and |y| nodes `steps`
/// log-uniform points, both endpoint inclusive; x = 0 and |y| = 1 are added
/// when in range.  Both signs of y are visited.  Scanning stops at the first
/// witness in grid order (x ascending, then y > 0 ascending, then y < 0).
GridSearchResult grid_search_2x2(double alpha, double beta, Interval x_range,
                                 Interval abs_y_range, int steps, bool strict);

struct RandomSearchResult {
  bool found = false;
  std::optional<RealMatrix> witness;  // P with P A P^{-1} dominant
  double best_margin;  // best of row/column minimum margins over all trials
  long samples = 0;    // accepted trials
};

/// Falsification attempt: checks row and column dominance of P A P^{-1} for
/// the identity followed by seeded standard-normal P, rejecting transforms
/// that fail the conditioning floor.  Deterministic for a given seed.
RandomSearchResult random_similarity_search(const RealMatrix& a, long trials,
                                            std::uint64_t seed, bool strict);

}  // namespace ddsim
