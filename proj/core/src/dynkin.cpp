#include "liesq/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liesq {

bool subordinate(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("subordination needs weights of equal length");
  for (size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] > mu[k]) return false;
  return true;
}

namespace {

// Match one connected subdiagram (given by its induced Cartan submatrix)
// against the standard diagrams.  Families are tried in a fixed order so
// that coincidences resolve deterministically (a simply-laced chain is
// always reported as A, a 2-node double bond as B2, ...).  Returns the
// recognised type and the map standard-position -> index into `nodes`.
std::pair<SimpleType, std::vector<int>> classify_component(
    const std::vector<std::vector<int>>& cartan, const std::vector<int>& nodes) {
  int n = static_cast<int>(nodes.size());
  std::vector<SimpleType> candidates;
  candidates.push_back({Family::A, n});
  if (n >= 2) candidates.push_back({Family::B, n});
  if (n >= 2) candidates.push_back({Family::C, n});
  if (n >= 4) candidates.push_back({Family::D, n});
  if (n == 6) candidates.push_back({Family::E6, 6});
  if (n == 7) candidates.push_back({Family::E7, 7});
  if (n == 8) candidates.push_back({Family::E8, 8});
  if (n == 4) candidates.push_back({Family::F4, 4});
  if (n == 2) candidates.push_back({Family::G2, 2});

  for (const auto& cand : candidates) {
    const auto& std_cartan = RootSystem::get(cand).cartan();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<int>> best;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (cartan[nodes[perm[i]]][nodes[perm[j]]] != std_cartan[i][j]) ok = false;
      if (ok) {
        std::vector<int> mapped(n);
        for (int i = 0; i < n; ++i) mapped[i] = perm[i];
        auto orig = [&](const std::vector<int>& p) {
          std::vector<int> o(n);
          for (int i = 0; i < n; ++i) o[i] = nodes[p[i]];
          return o;
        };
        if (!best || orig(mapped) < orig(*best)) best = mapped;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best) return {cand, *best};
  }
  throw std::logic_error("subdiagram is not a Dynkin diagram");
}

}  // namespace

std::pair<SemisimpleAlgebra, Weight> part_weight(const SimpleType& t, const Weight& lambda,
                                                 const std::set<int>& deleted) {
  check_dominant_weight(t, lambda);
  for (int d : deleted)
    if (d < 1 || d > t.rank)
      throw std::invalid_argument("deleted node index out of range");
  if (static_cast<int>(deleted.size()) >= t.rank)
    throw std::invalid_argument("cannot delete every node");

  const auto& cartan = RootSystem::get(t).cartan();
  std::vector<int> remaining;
  for (int a = 0; a < t.rank; ++a)
    if (!deleted.count(a + 1)) remaining.push_back(a);

  // Connected components of the induced diagram, in node order.
  std::vector<std::vector<int>> components;
  std::set<int> unseen(remaining.begin(), remaining.end());
  while (!unseen.empty()) {
    std::vector<int> comp{*unseen.begin()};
    unseen.erase(unseen.begin());
    for (size_t i = 0; i < comp.size(); ++i) {
      for (auto it = unseen.begin(); it != unseen.end();) {
        if (cartan[comp[i]][*it] != 0) {
          comp.push_back(*it);
          it = unseen.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(comp);
  }
  std::sort(components.begin(), components.end());

  SemisimpleAlgebra g;
  Weight w;
  for (const auto& comp : components) {
    auto [ct, perm] = classify_component(cartan, comp);
    g.factors.push_back(ct);
    for (int i = 0; i < ct.rank; ++i) w.push_back(lambda[comp[perm[i]]]);
  }
  return {g, w};
}

std::vector<Chain> minimal_chains(const SimpleType& t, const Weight& lambda,
                                  const Weight& mu) {
  check_dominant_weight(t, lambda);
  check_dominant_weight(t, mu);
  const auto& rs = RootSystem::get(t);

  // Literal inner-product versions of conditions (a)-(f).
  auto root = [&](int a) {  // simple-root coordinates of alpha_a
    std::vector<int> v(t.rank, 0);
    v[a] = 1;
    return v;
  };
  auto nz_wr = [&](const Weight& x, int a) { return rs.inner_with_root(x, root(a)) != 0; };
  auto nz_rr = [&](int a, int b) {
    return rs.inner_with_root(rs.positive_roots()[a].fund, root(b)) != 0;
  };

  std::vector<Chain> out;
  std::vector<int> seq;  // 0-based indices
  auto satisfies = [&]() {
    int n = static_cast<int>(seq.size());
    if (!nz_wr(lambda, seq[0])) return false;                       // (a)
    for (int k = 0; k + 1 < n; ++k)
      if (!nz_rr(seq[k], seq[k + 1])) return false;                 // (b)
    if (!nz_wr(mu, seq[n - 1])) return false;                       // (c)
    for (int k = 1; k < n; ++k)
      if (nz_wr(lambda, seq[k])) return false;                      // (d)
    for (int k = 0; k < n; ++k)
      for (int h = k + 2; h < n; ++h)
        if (nz_rr(seq[k], seq[h])) return false;                    // (e)
    for (int k = 0; k + 1 < n; ++k)
      if (nz_wr(mu, seq[k])) return false;                          // (f)
    return true;
  };
  auto dfs = [&](auto&& self, int last) -> void {
    if (satisfies()) {
      Chain c;
      for (int a : seq) c.root_indices.push_back(a + 1);
      out.push_back(c);
      return;  // extending a chain that already joins violates (f)
    }
    for (int b = 0; b < t.rank; ++b) {
      if (std::find(seq.begin(), seq.end(), b) != seq.end()) continue;
      if (!nz_rr(last, b)) continue;
      seq.push_back(b);
      self(self, b);
      seq.pop_back();
    }
  };
  for (int a = 0; a < t.rank; ++a) {
    if (!nz_wr(lambda, a)) continue;
    seq = {a};
    dfs(dfs, a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Weight> guaranteed_constituents(const SimpleType& t, const Weight& lambda,
                                         const Weight& mu) {
  const auto& cartan = RootSystem::get(t).cartan();
  Weight top(t.rank);
  for (int a = 0; a < t.rank; ++a) top[a] = lambda[a] + mu[a];
  std::set<Weight> out{top};
  for (const auto& chain : minimal_chains(t, lambda, mu)) {
    Weight w = top;
    for (int j : chain.root_indices)
      for (int b = 0; b < t.rank; ++b) w[b] -= cartan[j - 1][b];
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) out.insert(w);
  }
  return out;
}

}  // namespace liesq
