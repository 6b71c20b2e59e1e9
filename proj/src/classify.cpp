#include "ddsim/classify.hpp"

#include <cmath>

#include "ddsim/errors.hpp"

namespace ddsim {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictAchievable: return "StrictAchievable";
    case Verdict::NonStrictOnly: return "NonStrictOnly";
    case Verdict::Impossible: return "Impossible";
    case Verdict::OutOfScopeSingular: return "OutOfScopeSingular";
  }
  return "?";
}

std::string_view to_string(EvidenceCase c) {
  switch (c) {
    case EvidenceCase::RealNonzero: return "real_nonzero";
    case EvidenceCase::ZeroEigenvalue: return "zero_eigenvalue";
    case EvidenceCase::DominantPair: return "dominant_pair";
    case EvidenceCase::BorderlineSemisimple: return "borderline_semisimple";
    case EvidenceCase::BorderlineDefective: return "borderline_defective";
    case EvidenceCase::ViolatingPair: return "violating_pair";
  }
  return "?";
}

namespace {

Evidence real_evidence(const RealEigenvalue& e, double zero_thr) {
  const double margin = std::abs(e.value);
  if (margin <= zero_thr) {
    return {false, e.value, 0.0, e.alg_mult, e.geo_mult, EvidenceCase::ZeroEigenvalue, false,
            "|lambda| > 0", margin};
  }
  return {false, e.value, 0.0, e.alg_mult, e.geo_mult, EvidenceCase::RealNonzero, true,
          "|lambda| > 0", margin};
}

Evidence pair_evidence(const ComplexPair& p, double tol, double zero_thr) {
  const double a = std::abs(p.alpha);
  const double b = std::abs(p.beta);
  const double margin = a - b;
  Evidence ev{true, p.alpha, p.beta, p.alg_mult, p.geo_mult, EvidenceCase::DominantPair, true,
              "|alpha| > |beta|", margin};
  if (std::hypot(p.alpha, p.beta) <= zero_thr) {
    ev.which = EvidenceCase::ZeroEigenvalue;
    ev.satisfied = false;
    ev.condition = "|lambda| > 0";
  } else if (std::abs(margin) <= tol * (a + b)) {
    const bool semisimple = p.geo_mult == p.alg_mult;
    ev.which = semisimple ? EvidenceCase::BorderlineSemisimple : EvidenceCase::BorderlineDefective;
    ev.satisfied = semisimple;
    ev.condition = "|alpha| = |beta| requires geo_mult = alg_mult";
  } else if (margin < 0) {
    ev.which = EvidenceCase::ViolatingPair;
    ev.satisfied = false;
    ev.condition = "|alpha| >= |beta|";
  }
  return ev;
}

DDClassification decide(EigenStructure es, double tol, double zero_thr) {
  DDClassification out{Verdict::StrictAchievable, {}, {}, {}};
  bool zero = false, impossible = false, borderline = false;
  for (const auto& e : es.real_eigs) {
    out.evidence.push_back(real_evidence(e, zero_thr));
    zero = zero || out.evidence.back().which == EvidenceCase::ZeroEigenvalue;
  }
  for (const auto& p : es.complex_pairs) {
    const Evidence ev = pair_evidence(p, tol, zero_thr);
    switch (ev.which) {
      case EvidenceCase::ZeroEigenvalue: zero = true; break;
      case EvidenceCase::ViolatingPair: impossible = true; break;
      case EvidenceCase::BorderlineDefective:
        impossible = true;
        out.borderline_pairs.push_back(p);
        break;
      case EvidenceCase::BorderlineSemisimple:
        borderline = true;
        out.borderline_pairs.push_back(p);
        break;
      default: break;
    }
    out.evidence.push_back(ev);
  }
  if (zero) out.verdict = Verdict::OutOfScopeSingular;
  else if (impossible) out.verdict = Verdict::Impossible;
  else if (borderline) out.verdict = Verdict::NonStrictOnly;
  out.eigenstructure = std::move(es);
  return out;
}

void check_tol(double tol) {
  if (!(tol >= 0.0)) throw PreconditionViolated("tol must be nonnegative");
}

}  // namespace

DDClassification classify(const RealMatrix& a, double tol, double cluster_tol) {
  check_tol(tol);
  return decide(eigen_structure(a, cluster_tol), tol, tol * (1.0 + a.frobenius_norm()));
}

DDClassification classify_2x2(const RealMatrix& a, double tol) {
  check_tol(tol);
  if (a.n() != 2) throw DimensionMismatch("classify_2x2 needs n = 2, got " + std::to_string(a.n()));
  const double half_trace = 0.5 * (a(0, 0) + a(1, 1));
  const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double disc = half_trace * half_trace - det;

  EigenStructure es;
  es.n = 2;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Stable pair: the larger-magnitude root first, the other from det / root.
    const double big = half_trace >= 0 ? half_trace + root : half_trace - root;
    const double small = big != 0.0 ? det / big : 0.0;
    double lo = std::min(big, small), hi = std::max(big, small);
    if (root == 0.0 || hi - lo <= kDefaultClusterTol * (1.0 + a.frobenius_norm())) {
      const bool scalar = a(0, 1) == 0.0 && a(1, 0) == 0.0;
      es.real_eigs.push_back({half_trace, 2, scalar ? 2 : 1});
    } else {
      es.real_eigs.push_back({lo, 1, 1});
      es.real_eigs.push_back({hi, 1, 1});
    }
  } else {
    es.complex_pairs.push_back({half_trace, std::sqrt(-disc), 1, 1});
  }
  return decide(std::move(es), tol, tol * (1.0 + a.frobenius_norm()));
}

RealMatrix params_to_matrix(const TwoByTwoParams& p) {
  if (p.beta == 0.0 || p.y == 0.0) throw PreconditionViolated("beta and y must be nonzero");
  const double r = std::sqrt(p.beta * p.beta + p.x * p.x);
  Eigen::Matrix2d k;
  k << p.alpha - p.x, r / p.y, -p.y * r, p.alpha + p.x;
  return RealMatrix(k);
}

double lemma3_margin(double alpha, double beta, double x, double y) {
  const double r = std::sqrt(beta * beta + x * x);
  const double top = std::abs(alpha - x) - std::abs(1.0 / y) * r;
  const double bottom = std::abs(alpha + x) - std::abs(y) * r;
  return std::min(top, bottom);
}

bool lemma3_feasible(double alpha, double beta, double x, double y) {
  const double r = std::sqrt(beta * beta + x * x);
  return std::abs(alpha - x) >= std::abs(1.0 / y) * r && std::abs(alpha + x) >= std::abs(y) * r;
}

bool lemma3_strict_feasible(double alpha, double beta, double x, double y) {
  const double r = std::sqrt(beta * beta + x * x);
  return std::abs(alpha - x) > std::abs(1.0 / y) * r && std::abs(alpha + x) > std::abs(y) * r;
}

}  // namespace ddsim
