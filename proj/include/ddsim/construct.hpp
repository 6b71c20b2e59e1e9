#pragma once

#include "ddsim/classify.hpp"
#include "ddsim/matrix.hpp"
#include "ddsim/spectral.hpp"

namespace ddsim {

enum class Target { Strict, NonStrict };

std::string_view to_string(Target t);

inline constexpr double kDefaultMargin = 0.5;

/// B = P A P^{-1} with B row diagonally dominant as requested.
struct SimilarityCertificate {
  RealMatrix P;
  RealMatrix B;
  DominanceReport dominance;  // row dominance of B at tol = 0
  double residual;
  Target target;
};

/// Complex transform; B is strictly row dominant in the magnitude sense.
struct ComplexSimilarityCertificate {
  SplitComplexMatrix P;
  SplitComplexMatrix B;
  DominanceReport dominance;
  double residual;
};

struct DiagonalScaling {
  RealMatrix D;  // positive diagonal
  RealMatrix B;  // D J D^{-1}
};

/// 1e-6 * (1 + ||A||_F).
double certificate_tol(const RealMatrix& a);

/// Geometric diagonal scaling of a real Jordan form.
///
/// Chain coordinate k (both coordinates of a 2x2 cell) gets weight rho^k,
/// which turns every superdiagonal coupling into 1/rho.  Per chain,
/// rho = max(2, (1 + coupling) / (margin * min row slack)), where the row
/// slack is |lambda| for real blocks and |alpha| - |beta| for complex cells.
/// Chains of length one are left unscaled.  Throws PreconditionViolated when a
/// block cannot meet the target.
DiagonalScaling scale_jordan_to_dd(const RealJordanForm& jf, Target target,
                                   double margin = kDefaultMargin);

/// Real transform to a row diagonally dominant matrix.  Throws NotAchievable
/// when classify() rules out the requested target.
SimilarityCertificate build_real_dd_transform(const RealMatrix& a, Target target,
                                              double tol = kDefaultClassifyTol,
                                              double margin = kDefaultMargin);

/// Complex transform to a strictly row dominant matrix: complex pairs are
/// diagonalized cell by cell with [[-j, -j], [1, -1]] and chain couplings are
/// scaled geometrically.  Throws SingularInput for a (numerically) zero
/// eigenvalue.
ComplexSimilarityCertificate build_complex_dd_transform(const RealMatrix& a,
                                                        double tol = kDefaultClassifyTol,
                                                        double margin = kDefaultMargin);

}  // namespace ddsim
