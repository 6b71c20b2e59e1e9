#include "ddsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "ddsim/errors.hpp"

namespace ddsim {

namespace {

using cplx = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Minimum singular value ratio accepted when selecting new chain heads.
constexpr double kHeadSeparationFloor = 1e-6;

struct Cluster {
  cplx value;  // imag() == 0 for real clusters, > 0 for the upper member of a pair
  int alg_mult;
};

std::vector<std::vector<cplx>> group_members(const Eigen::VectorXcd& eigs,
                                             const std::vector<int>& label, int groups) {
  std::vector<std::vector<cplx>> out(groups);
  for (Eigen::Index i = 0; i < eigs.size(); ++i) out[label[i]].push_back(eigs(i));
  return out;
}

// Single-linkage grouping.  If a linked group has a diameter above the
// threshold, the grouping is not unique and ClusterAmbiguity is raised with a
// greedy complete-linkage split as the alternative.
std::vector<std::vector<cplx>> cluster_eigenvalues(const Eigen::VectorXcd& eigs, double thr) {
  const auto n = static_cast<int>(eigs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(eigs(i) - eigs(j)) <= thr) parent[find(i)] = find(j);

  std::vector<int> label(n, -1), root_label(n, -1);
  int groups = 0;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_label[r] < 0) root_label[r] = groups++;
    label[i] = root_label[r];
  }
  auto linked = group_members(eigs, label, groups);

  bool ambiguous = false;
  for (const auto& g : linked)
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b)
        if (std::abs(g[a] - g[b]) > thr) ambiguous = true;
  if (!ambiguous) return linked;

  std::vector<std::vector<cplx>> split;
  for (const auto& g : linked) {
    std::vector<std::vector<cplx>> local;
    for (const cplx& z : g) {
      auto fits = std::find_if(local.begin(), local.end(), [&](const std::vector<cplx>& c) {
        return std::all_of(c.begin(), c.end(), [&](cplx w) { return std::abs(w - z) <= thr; });
      });
      if (fits == local.end()) local.push_back({z});
      else fits->push_back(z);
    }
    split.insert(split.end(), local.begin(), local.end());
  }
  throw ClusterAmbiguity("eigenvalue clusters overlap under cluster_tol; two groupings admissible",
                         linked, split);
}

std::vector<Cluster> spectral_clusters(const RealMatrix& a, double cluster_tol) {
  if (!(cluster_tol >= 0.0)) throw PreconditionViolated("cluster_tol must be nonnegative");
  const Eigen::VectorXcd eigs = Eigen::EigenSolver<Eigen::MatrixXd>(a.eigen(), false).eigenvalues();
  const double thr = cluster_tol * (1.0 + a.frobenius_norm());
  const auto groups = cluster_eigenvalues(eigs, thr);

  std::vector<Cluster> real, upper, lower;
  for (const auto& g : groups) {
    cplx mean = std::accumulate(g.begin(), g.end(), cplx{0.0, 0.0}) / static_cast<double>(g.size());
    const int mult = static_cast<int>(g.size());
    if (std::abs(mean.imag()) <= thr) real.push_back({{mean.real(), 0.0}, mult});
    else if (mean.imag() > 0) upper.push_back({mean, mult});
    else lower.push_back({std::conj(mean), mult});
  }

  auto by_value = [](const Cluster& x, const Cluster& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  };
  std::sort(real.begin(), real.end(), by_value);
  std::sort(upper.begin(), upper.end(), by_value);
  std::sort(lower.begin(), lower.end(), by_value);

  bool paired = upper.size() == lower.size();
  for (std::size_t i = 0; paired && i < upper.size(); ++i)
    paired = upper[i].alg_mult == lower[i].alg_mult &&
             std::abs(upper[i].value - lower[i].value) <= thr;
  if (!paired) {
    throw ClusterAmbiguity("complex eigenvalue clusters do not pair into conjugates", groups,
                           groups);
  }

  real.insert(real.end(), upper.begin(), upper.end());
  return real;
}

template <typename Scalar>
Mat<Scalar> shifted(const RealMatrix& a, cplx lambda) {
  Mat<Scalar> m = a.eigen().cast<Scalar>();
  if constexpr (std::is_same_v<Scalar, double>) {
    m.diagonal().array() -= lambda.real();
  } else {
    m.diagonal().array() -= lambda;
  }
  return m;
}

template <typename Scalar>
int geometric_multiplicity(const RealMatrix& a, const Cluster& c) {
  const Mat<Scalar> shift = shifted<Scalar>(a, c.value);
  const Eigen::VectorXd s = Eigen::JacobiSVD<Mat<Scalar>>(shift).singularValues();
  const double thr = kRankTol * std::max(s(0), 1e-300);
  const int geo = a.n() - static_cast<int>((s.array() > thr).count());
  return std::clamp(geo, 1, c.alg_mult);
}

// Orthonormal kernel basis of m: right singular vectors for singular values
// at or below thr.
template <typename Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& m, double thr) {
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const int rank = static_cast<int>((s.array() > thr).count());
  return svd.matrixV().rightCols(m.cols() - rank);
}

template <typename Scalar>
Mat<Scalar> orthonormal_range(const Mat<Scalar>& w) {
  if (w.cols() == 0) return Mat<Scalar>(w.rows(), 0);
  Eigen::JacobiSVD<Mat<Scalar>> svd(w, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(s.size() - 1) < kHeadSeparationFloor * std::max(s(0), 1.0)) {
    throw IllConditionedJordan("Jordan chain images are numerically dependent");
  }
  return svd.matrixU();
}

template <typename Scalar>
struct ClusterChains {
  Scalar lambda;                  // refined eigenvalue
  std::vector<Mat<Scalar>> chains;  // columns v_1 (eigenvector) .. v_k, longest first
};

// Jordan chains for one eigenvalue cluster.  The generalized eigenspace is
// isolated first, then chains are built top-down on the small nilpotent
// restriction T so rank decisions only see the cluster itself.
template <typename Scalar>
ClusterChains<Scalar> cluster_chains(const RealMatrix& a, const Cluster& c) {
  const int n = a.n();
  const int m = c.alg_mult;
  const Mat<Scalar> shift = shifted<Scalar>(a, c.value);
  const double scale = std::max(Eigen::JacobiSVD<Mat<Scalar>>(shift).singularValues()(0), 1.0);

  Mat<Scalar> power = shift;
  for (int k = 1; k < m; ++k) power = power * shift;
  Eigen::JacobiSVD<Mat<Scalar>> gen_svd(power, Eigen::ComputeFullV);
  const Mat<Scalar> basis = gen_svd.matrixV().rightCols(m);
  if (m < n) {
    const Eigen::VectorXd& s = gen_svd.singularValues();
    if (s(n - m - 1) <= kRankTol * std::pow(scale, m)) {
      throw IllConditionedJordan("generalized eigenspace dimension does not match multiplicity " +
                                 std::to_string(m));
    }
  }

  Mat<Scalar> t = basis.adjoint() * shift * basis;
  const Scalar correction = t.trace() / static_cast<double>(m);
  t.diagonal().array() -= correction;
  ClusterChains<Scalar> out;
  if constexpr (std::is_same_v<Scalar, double>) {
    out.lambda = c.value.real() + correction;
  } else {
    out.lambda = c.value + correction;
  }

  // kernels[k] spans ker(T^k); dims[k] its dimension.
  std::vector<Mat<Scalar>> kernels(m + 2);
  std::vector<int> dims(m + 2, m);
  kernels[0] = Mat<Scalar>(m, 0);
  dims[0] = 0;
  Mat<Scalar> tk = Mat<Scalar>::Identity(m, m);
  for (int k = 1; k <= m; ++k) {
    tk = tk * t;
    kernels[k] = kernel_basis<Scalar>(tk, kRankTol * std::pow(scale, k));
    if (k == m) kernels[k] = Mat<Scalar>::Identity(m, m);
    dims[k] = static_cast<int>(kernels[k].cols());
    if (dims[k] < dims[k - 1]) {
      throw IllConditionedJordan("kernel dimensions of nilpotent part are not monotone");
    }
  }
  int index = 1;
  while (dims[index] < m) ++index;
  dims[index + 1] = m;

  struct Head {
    Vec<Scalar> h;
    int length;
  };
  std::vector<Head> heads;
  for (int k = index; k >= 1; --k) {
    const int count = (dims[k] - dims[k - 1]) - (dims[k + 1] - dims[k]);
    if (count < 0) throw IllConditionedJordan("inconsistent Jordan block counts");
    if (count == 0) continue;

    Mat<Scalar> w(m, dims[k - 1] + static_cast<Eigen::Index>(heads.size()));
    w.leftCols(dims[k - 1]) = kernels[k - 1];
    for (std::size_t i = 0; i < heads.size(); ++i) {
      Vec<Scalar> v = heads[i].h;
      for (int p = 0; p < heads[i].length - k; ++p) v = t * v;
      w.col(dims[k - 1] + static_cast<Eigen::Index>(i)) = v;
    }
    const Mat<Scalar> q = orthonormal_range<Scalar>(w);
    const Mat<Scalar> x = kernels[k] - q * (q.adjoint() * kernels[k]);
    Eigen::JacobiSVD<Mat<Scalar>> svd(x, Eigen::ComputeThinU);
    if (svd.singularValues().size() < count ||
        svd.singularValues()(count - 1) < kHeadSeparationFloor) {
      throw IllConditionedJordan("cannot separate Jordan chain heads at level " +
                                 std::to_string(k));
    }
    for (int i = 0; i < count; ++i) heads.push_back({svd.matrixU().col(i), k});
  }

  for (const Head& head : heads) {
    Mat<Scalar> chain(n, head.length);
    Vec<Scalar> v = head.h;
    for (int j = head.length - 1; j >= 0; --j) {
      chain.col(j) = basis * v;
      v = t * v;
    }
    if constexpr (!std::is_same_v<Scalar, double>) {
      const Scalar z = chain.col(0).transpose() * chain.col(0);
      if (std::abs(z) > 0.0) chain *= std::polar(1.0, -std::arg(z) / 2.0);
    }
    chain /= chain.colwise().norm().maxCoeff();
    out.chains.push_back(std::move(chain));
  }
  return out;
}

}  // namespace

int block_dimension(const JordanBlock& block) {
  return std::visit(
      [](const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, RealJordanBlock>) return b.size;
        else return 2 * b.chain_length;
      },
      block);
}

double jordan_residual_tol(const RealMatrix& a) { return 1e-6 * (1.0 + a.frobenius_norm()); }

EigenStructure eigen_structure(const RealMatrix& a, double cluster_tol) {
  EigenStructure es;
  es.n = a.n();
  for (const Cluster& c : spectral_clusters(a, cluster_tol)) {
    if (c.value.imag() == 0.0) {
      es.real_eigs.push_back({c.value.real(), c.alg_mult, geometric_multiplicity<double>(a, c)});
    } else {
      es.complex_pairs.push_back(
          {c.value.real(), c.value.imag(), c.alg_mult, geometric_multiplicity<cplx>(a, c)});
    }
  }
  return es;
}

RealMatrix assemble_jordan_matrix(const std::vector<JordanBlock>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += block_dimension(b);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  int at = 0;
  for (const auto& block : blocks) {
    if (const auto* rb = std::get_if<RealJordanBlock>(&block)) {
      for (int k = 0; k < rb->size; ++k) {
        j(at + k, at + k) = rb->lambda;
        if (k + 1 < rb->size) j(at + k, at + k + 1) = 1.0;
      }
    } else {
      const auto& cb = std::get<ComplexJordanBlock>(block);
      for (int k = 0; k < cb.chain_length; ++k) {
        const int r = at + 2 * k;
        j(r, r) = cb.alpha;
        j(r, r + 1) = cb.beta;
        j(r + 1, r) = -cb.beta;
        j(r + 1, r + 1) = cb.alpha;
        if (k + 1 < cb.chain_length) {
          j(r, r + 2) = 1.0;
          j(r + 1, r + 3) = 1.0;
        }
      }
    }
    at += block_dimension(block);
  }
  return RealMatrix(std::move(j));
}

RealJordanForm real_jordan_form(const RealMatrix& a, double cluster_tol) {
  const int n = a.n();
  const auto clusters = spectral_clusters(a, cluster_tol);

  Eigen::MatrixXd v(n, n);
  std::vector<JordanBlock> blocks;
  int col = 0;
  for (const Cluster& c : clusters) {
    const bool is_real = c.value.imag() == 0.0;
    int chain_count = 0;
    if (is_real) {
      const auto cc = cluster_chains<double>(a, c);
      for (const auto& chain : cc.chains) {
        v.middleCols(col, chain.cols()) = chain;
        col += static_cast<int>(chain.cols());
        blocks.push_back(RealJordanBlock{cc.lambda, static_cast<int>(chain.cols())});
      }
      chain_count = static_cast<int>(cc.chains.size());
    } else {
      const auto cc = cluster_chains<cplx>(a, c);
      if (cc.lambda.imag() <= 0.0) {
        throw IllConditionedJordan("complex eigenvalue collapsed onto the real axis");
      }
      for (const auto& chain : cc.chains) {
        for (Eigen::Index k = 0; k < chain.cols(); ++k) {
          v.col(col++) = chain.col(k).real();
          v.col(col++) = chain.col(k).imag();
        }
        blocks.push_back(ComplexJordanBlock{cc.lambda.real(), cc.lambda.imag(),
                                            static_cast<int>(chain.cols())});
      }
      chain_count = static_cast<int>(cc.chains.size());
    }
    const int geo = is_real ? geometric_multiplicity<double>(a, c)
                            : geometric_multiplicity<cplx>(a, c);
    if (geo != chain_count) {
      throw IllConditionedJordan("chain count " + std::to_string(chain_count) +
                                 " disagrees with geometric multiplicity " + std::to_string(geo));
    }
  }

  if (!is_well_conditioned(v)) {
    throw IllConditionedJordan("Jordan basis fails the conditioning floor");
  }
  RealMatrix p(v.partialPivLu().inverse());
  RealMatrix j = assemble_jordan_matrix(blocks);
  const double residual = similarity_residual(a, p, j);
  if (!(residual <= jordan_residual_tol(a))) {
    throw IllConditionedJordan("Jordan residual " + std::to_string(residual) +
                               " exceeds tolerance");
  }
  return {std::move(j), std::move(p), std::move(blocks), residual};
}

}  // namespace ddsim
