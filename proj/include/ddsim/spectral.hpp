#pragma once

#include <variant>
#include <vector>

#include "ddsim/matrix.hpp"

namespace ddsim {

inline constexpr double kDefaultClusterTol = 1e-7;
// Singular values below kRankTol * scale count as zero in rank decisions.
inline constexpr double kRankTol = 1e-8;

struct RealEigenvalue {
  double value;
  int alg_mult;
  int geo_mult;
};

/// The conjugate pair alpha +- beta*j, with beta > 0.
struct ComplexPair {
  double alpha;
  double beta;
  int alg_mult;
  int geo_mult;
};

struct EigenStructure {
  int n = 0;
  std::vector<RealEigenvalue> real_eigs;      // ascending by value
  std::vector<ComplexPair> complex_pairs;     // ascending by (alpha, beta)
};

struct RealJordanBlock {
  double lambda;
  int size;
};

/// A chain of `chain_length` 2x2 cells [[alpha, beta], [-beta, alpha]] coupled
/// by identity blocks on the block superdiagonal.
struct ComplexJordanBlock {
  double alpha;
  double beta;
  int chain_length;
};

using JordanBlock = std::variant<RealJordanBlock, ComplexJordanBlock>;

int block_dimension(const JordanBlock& block);

/// J = P A P^{-1} with J block diagonal in real Jordan form.
struct RealJordanForm {
  RealMatrix J;
  RealMatrix P;
  std::vector<JordanBlock> blocks;
  double residual;
};

/// 1e-6 * (1 + ||A||_F).
double jordan_residual_tol(const RealMatrix& a);

EigenStructure eigen_structure(const RealMatrix& a, double cluster_tol = kDefaultClusterTol);

/// Real Jordan normal form with a verified transform.
///
/// Real blocks come first, ascending by eigenvalue, then complex blocks
/// ascending by (alpha, beta); inside one eigenvalue, longer chains first.
/// Intended for small n (up to about 12).  Throws IllConditionedJordan when
/// the rank structure is inconsistent or the resulting residual exceeds
/// jordan_residual_tol, and ClusterAmbiguity from the clustering step.
RealJordanForm real_jordan_form(const RealMatrix& a, double cluster_tol = kDefaultClusterTol);

/// Assembles the canonical block-diagonal matrix for a list of descriptors.
RealMatrix assemble_jordan_matrix(const std::vector<JordanBlock>& blocks);

}  // namespace ddsim
