#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ddsim/matrix.hpp"
#include "ddsim/spectral.hpp"

namespace ddsim {

inline constexpr double kDefaultClassifyTol = 1e-9;

enum class Verdict { StrictAchievable, NonStrictOnly, Impossible, OutOfScopeSingular };

std::string_view to_string(Verdict v);

/// Which branch of the real-similarity trichotomy an eigenvalue falls in.
enum class EvidenceCase {
  RealNonzero,           // real eigenvalue away from zero
  ZeroEigenvalue,        // eigenvalue within tol of zero
  DominantPair,          // |alpha| > |beta|
  BorderlineSemisimple,  // |alpha| = |beta|, geo = alg
  BorderlineDefective,   // |alpha| = |beta|, geo < alg
  ViolatingPair,         // |alpha| < |beta|
};

std::string_view to_string(EvidenceCase c);

struct Evidence {
  bool is_pair;
  double re;    // eigenvalue, or alpha of the pair
  double im;    // 0, or beta > 0 of the pair
  int alg_mult;
  int geo_mult;
  EvidenceCase which;
  bool satisfied;         // compatible with strict or non-strict dominance
  std::string condition;  // human readable condition that was tested
  double margin;          // |lambda| for real eigenvalues, |alpha| - |beta| for pairs
};

struct DDClassification {
  Verdict verdict;
  std::vector<Evidence> evidence;
  std::vector<ComplexPair> borderline_pairs;
  EigenStructure eigenstructure;
};

/// Decides whether A is real-similar to a strictly or non-strictly
/// diagonally dominant matrix from its eigenstructure.
///
/// Borderline pairs satisfy ||alpha| - |beta|| <= tol * (|alpha| + |beta|);
/// an eigenvalue is treated as zero when |lambda| <= tol * (1 + ||A||_F).
DDClassification classify(const RealMatrix& a, double tol = kDefaultClassifyTol,
                          double cluster_tol = kDefaultClusterTol);

/// Closed-form 2x2 version driven by trace and determinant.  Throws
/// DimensionMismatch if n != 2.
DDClassification classify_2x2(const RealMatrix& a, double tol = kDefaultClassifyTol);

/// (alpha, beta, x, y) parametrization of every real 2x2 matrix similar to
/// [[alpha, beta], [-beta, alpha]].
struct TwoByTwoParams {
  double alpha;
  double beta;  // nonzero
  double x;
  double y;     // nonzero
};

RealMatrix params_to_matrix(const TwoByTwoParams& p);

/// Smallest row margin of params_to_matrix(p):
/// min(|alpha - x| - |1/y| r, |alpha + x| - |y| r) with r = sqrt(beta^2 + x^2).
double lemma3_margin(double alpha, double beta, double x, double y);

/// Both row-dominance inequalities hold (non-strict).
bool lemma3_feasible(double alpha, double beta, double x, double y);

/// Both row-dominance inequalities hold strictly.
bool lemma3_strict_feasible(double alpha, double beta, double x, double y);

}  // namespace ddsim
