#include "liesq/matrixrep.hpp"

#include "liesq/modkernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace liesq {

namespace {

// vec convention used throughout: X(r, c) lives at index r*k + c.
Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int k) {
  Eigen::MatrixXcd m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(r, c) = v(r * k + c);
  return m;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IsotypicProfile isotypic_profile(const MatrixRep& r, std::uint64_t seed,
                                 double tolerance) {
  IsotypicProfile out;
  out.seed = seed;
  out.tolerance = tolerance;
  auto fail = [&](std::string why) {
    out.indeterminate = true;
    out.diagnostic = std::move(why);
    out.blocks.clear();
    return out;
  };

  const int k = r.dim;
  std::vector<Eigen::MatrixXcd> comm;  // commutant basis as k x k matrices
  int comm_dim;
  if (r.is_exact()) {
    auto basis = commutant_basis_exact(r.exact, seed);
    comm_dim = static_cast<int>(basis.size());
    for (const auto& m : basis) comm.push_back(m.to_eigen());
  } else {
    CommutantResult cr = commutant(r, Backend::floating, tolerance * 1e-2, seed);
    if (cr.indeterminate) return fail("float commutant rank is not well separated");
    comm_dim = cr.dim;
    for (const auto& v : cr.float_basis) comm.push_back(unvec(v, k));
  }
  if (comm_dim == 0) return fail("empty commutant");

  // Random Hermitian commutant element with small integer coefficients.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-50, 50);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(k, k);
  for (const auto& K : comm)
    H += std::complex<double>(coef(rng), coef(rng)) * K;
  H = ((H + H.adjoint()) / 2.0).eval();
  double hscale = std::max(1.0, H.norm());

  for (const auto& g : r.to_float()) {
    double resid = (g * H - H * g).norm() / (hscale * std::max(1.0, g.norm()));
    if (resid > tolerance) return fail("random commutant element fails to commute");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending

  // Cluster eigenvalues: gaps below tolerance * scale merge.
  std::vector<std::pair<int, int>> clusters;  // [start, end)
  {
    int start = 0;
    for (int i = 1; i <= k; ++i) {
      if (i == k || ev(i) - ev(i - 1) > tolerance * hscale) {
        clusters.emplace_back(start, i);
        start = i;
      }
    }
  }
  // Distinct clusters must be clearly separated, not borderline.
  for (size_t a = 0; a + 1 < clusters.size(); ++a) {
    double gap = ev(clusters[a + 1].first) - ev(clusters[a].second - 1);
    if (gap < 10 * tolerance * hscale)
      return fail("eigenvalue clusters are not well separated");
  }

  // Two clusters lie in the same isotypic block iff some commutant element
  // maps one onto the other.
  const int nc = static_cast<int>(clusters.size());
  UnionFind uf(nc);
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b) {
      auto Va = es.eigenvectors().middleCols(clusters[a].first,
                                             clusters[a].second - clusters[a].first);
      auto Vb = es.eigenvectors().middleCols(clusters[b].first,
                                             clusters[b].second - clusters[b].first);
      for (const auto& K : comm) {
        double cross = (Va.adjoint() * K * Vb).norm() / std::max(1.0, K.norm());
        if (cross > 100 * tolerance) {
          uf.unite(a, b);
          break;
        }
      }
    }

  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < nc; ++a) groups[uf.find(a)].push_back(a);
  for (const auto& [root, members] : groups) {
    int d = clusters[members[0]].second - clusters[members[0]].first;
    for (int m : members)
      if (clusters[m].second - clusters[m].first != d)
        return fail("clusters within one block have unequal sizes");
    out.blocks.emplace_back(d, static_cast<int>(members.size()));
  }
  std::sort(out.blocks.begin(), out.blocks.end());

  long total = 0, sq = 0;
  for (auto [d, m] : out.blocks) {
    total += static_cast<long>(d) * m;
    sq += static_cast<long>(m) * m;
  }
  if (total != k) return fail("block dimensions do not add up to the space dimension");
  if (sq != comm_dim)
    return fail("multiplicity squares do not add up to the commutant dimension");
  return out;
}

}  // namespace liesq
