#include "liesq/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesq {

Int Decomposition::total_dim() const {
  Int d = 0;
  for (const auto& [w, m] : terms) d += m * irrep_dim(algebra, w);
  return d;
}

Int Decomposition::one_norm() const {
  Int s = 0;
  for (const auto& [w, m] : terms) s += m;
  return s;
}

Int Decomposition::two_norm() const {
  Int s = 0;
  for (const auto& [w, m] : terms) s += m * m;
  return s;
}

Int Decomposition::mult(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Int(0) : it->second;
}

Decomposition& Decomposition::add(const Weight& w, const Int& mult) {
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (mult != 0) terms.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Int irrep_dim(const SemisimpleAlgebra& g, const Weight& lambda) {
  check_dominant_weight(g, lambda);
  Int d = 1;
  auto parts = g.split(lambda);
  for (size_t i = 0; i < g.factors.size(); ++i)
    d *= RootSystem::get(g.factors[i]).weyl_dim(parts[i]);
  return d;
}

Weight dual_weight(const SimpleType& t, const Weight& lambda) {
  check_dominant_weight(t, lambda);
  Weight out = lambda;
  switch (t.family) {
    case Family::A:
      std::reverse(out.begin(), out.end());
      break;
    case Family::D:
      if (t.rank % 2 == 1) std::swap(out[t.rank - 2], out[t.rank - 1]);
      break;
    case Family::E6:
      std::swap(out[0], out[5]);
      std::swap(out[2], out[4]);
      break;
    default:
      break;  // B, C, E7, E8, F4, G2 are self-dual
  }
  return out;
}

Weight dual_weight(const SemisimpleAlgebra& g, const Weight& lambda) {
  auto parts = g.split(lambda);
  std::vector<Weight> out;
  for (size_t i = 0; i < g.factors.size(); ++i)
    out.push_back(dual_weight(g.factors[i], parts[i]));
  return g.join(out);
}

bool is_self_dual(const SemisimpleAlgebra& g, const Weight& lambda) {
  return dual_weight(g, lambda) == lambda;
}

Weight adjoint_weight(const SimpleType& t) {
  return RootSystem::get(t).highest_root();
}

namespace {

// Klimyk's formula for one simple factor: run over the weight system of
// the smaller rep and fold lambda + nu + rho back into the dominant
// chamber with the reflection sign.
std::map<Weight, Int> tensor_simple(const SimpleType& t, const Weight& lambda,
                                    const Weight& mu) {
  const auto& rs = RootSystem::get(t);
  Weight big = lambda, small = mu;
  if (rs.weyl_dim(mu) > rs.weyl_dim(lambda)) std::swap(big, small);

  std::map<Weight, Int> out;
  for (const auto& [w, m] : rs.weight_system(small)) {
    Weight v = big;
    for (int a = 0; a < t.rank; ++a) v[a] += w[a];
    auto [tau, sign] = rs.dominant_reduce(v);
    if (sign == 0) continue;
    auto it = out.find(tau);
    if (it == out.end())
      out.emplace(tau, sign * m);
    else {
      it->second += sign * m;
      if (it->second == 0) out.erase(it);
    }
  }
  for (const auto& [w, m] : out)
    if (m < 0) throw std::logic_error("negative multiplicity in tensor product");
  return out;
}

// Outer product of per-factor term maps: cartesian concatenation.
std::map<Weight, Int> outer_merge(const std::vector<std::map<Weight, Int>>& parts) {
  std::map<Weight, Int> acc;
  acc.emplace(Weight{}, Int(1));
  for (const auto& p : parts) {
    std::map<Weight, Int> next;
    for (const auto& [w0, m0] : acc) {
      for (const auto& [w1, m1] : p) {
        Weight w = w0;
        w.insert(w.end(), w1.begin(), w1.end());
        next[w] += m0 * m1;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Decompose a virtual W-invariant character, given by its dominant weight
// multiset, into irreducible highest weights by stripping: repeatedly
// remove a full copy of the irrep whose highest weight is maximal in the
// root order (lexicographic-greatest among maximal elements).
std::map<Weight, Int> strip_dominant_character(const SimpleType& t,
                                               std::map<Weight, Int> support) {
  const auto& rs = RootSystem::get(t);
  std::map<Weight, Int> out;
  while (!support.empty()) {
    const Weight* best = nullptr;
    for (const auto& [w, m] : support) {
      (void)m;
      bool maximal = true;
      for (const auto& [v, mv] : support) {
        (void)mv;
        if (v != w && rs.below(v, w)) { maximal = false; break; }
      }
      if (!maximal) continue;
      if (!best || std::lexicographical_compare(best->begin(), best->end(),
                                                w.begin(), w.end()))
        best = &w;
    }
    if (!best) throw std::logic_error("no maximal weight while stripping");
    Weight nu = *best;
    Int c = support.at(nu);
    out[nu] = c;
    for (const auto& [w, m] : rs.dominant_weights(nu)) {
      auto it = support.find(w);
      if (it == support.end()) {
        if (c * m != 0) support.emplace(w, -c * m);
      } else {
        it->second -= c * m;
        if (it->second == 0) support.erase(it);
      }
    }
  }
  return out;
}

// Signed decomposition of the Adams operation psi^2 applied to the irrep
// with highest weight lambda (character with weight multiset {2w}).
std::map<Weight, Int> adams_simple(const SimpleType& t, const Weight& lambda) {
  const auto& rs = RootSystem::get(t);
  std::map<Weight, Int> doubled;
  for (const auto& [w, m] : rs.dominant_weights(lambda)) {
    Weight v = w;
    for (auto& x : v) x *= 2;
    doubled[v] = m;
  }
  return strip_dominant_character(t, doubled);
}

struct FactorSquares {
  std::map<Weight, Int> alt, sym;
};

FactorSquares squares_simple(const SimpleType& t, const Weight& lambda) {
  auto tensor = tensor_simple(t, lambda, lambda);
  auto adams = adams_simple(t, lambda);
  FactorSquares fs;
  auto half = [](Int v) {
    if (v % 2 != 0) throw std::logic_error("odd coefficient splitting a square");
    return v / 2;
  };
  for (const auto& [w, m] : tensor) {
    Int p = 0;
    if (auto it = adams.find(w); it != adams.end()) p = it->second;
    Int a = half(m - p), s = half(m + p);
    if (a < 0 || s < 0) throw std::logic_error("negative multiplicity in a square");
    if (a != 0) fs.alt[w] = a;
    if (s != 0) fs.sym[w] = s;
  }
  return fs;
}

}  // namespace

Decomposition tensor_decompose(const SemisimpleAlgebra& g, const Weight& lambda,
                               const Weight& mu) {
  check_dominant_weight(g, lambda);
  check_dominant_weight(g, mu);
  auto lp = g.split(lambda), mp = g.split(mu);
  std::vector<std::map<Weight, Int>> parts;
  for (size_t i = 0; i < g.factors.size(); ++i)
    parts.push_back(tensor_simple(g.factors[i], lp[i], mp[i]));
  return Decomposition{g, outer_merge(parts)};
}

std::pair<Decomposition, Decomposition> alt_sym_squares(const SemisimpleAlgebra& g,
                                                        const Weight& lambda) {
  check_dominant_weight(g, lambda);
  auto parts = g.split(lambda);
  // Fold over factors: Alt(a x b) = Alt a . Sym b + Sym a . Alt b,
  // Sym(a x b) = Sym a . Sym b + Alt a . Alt b (outer products).
  std::map<Weight, Int> alt, sym;
  {
    auto fs = squares_simple(g.factors[0], parts[0]);
    alt = std::move(fs.alt);
    sym = std::move(fs.sym);
  }
  for (size_t i = 1; i < g.factors.size(); ++i) {
    auto fs = squares_simple(g.factors[i], parts[i]);
    auto combine = [](const std::map<Weight, Int>& x, const std::map<Weight, Int>& y,
                      std::map<Weight, Int>& into) {
      for (const auto& [w0, m0] : x)
        for (const auto& [w1, m1] : y) {
          Weight w = w0;
          w.insert(w.end(), w1.begin(), w1.end());
          into[w] += m0 * m1;
        }
    };
    std::map<Weight, Int> nalt, nsym;
    combine(alt, fs.sym, nalt);
    combine(sym, fs.alt, nalt);
    combine(sym, fs.sym, nsym);
    combine(alt, fs.alt, nsym);
    alt = std::move(nalt);
    sym = std::move(nsym);
  }
  return {Decomposition{g, std::move(alt)}, Decomposition{g, std::move(sym)}};
}

Decomposition alt_square(const SemisimpleAlgebra& g, const Weight& lambda) {
  return alt_sym_squares(g, lambda).first;
}

Decomposition sym_square(const SemisimpleAlgebra& g, const Weight& lambda) {
  return alt_sym_squares(g, lambda).second;
}

Decomposition tensor_with_dual(const SemisimpleAlgebra& g, const Weight& lambda) {
  return tensor_decompose(g, lambda, dual_weight(g, lambda));
}

Decomposition adams_square(const SemisimpleAlgebra& g, const Weight& lambda) {
  check_dominant_weight(g, lambda);
  auto parts = g.split(lambda);
  std::vector<std::map<Weight, Int>> per_factor;
  for (size_t i = 0; i < g.factors.size(); ++i)
    per_factor.push_back(adams_simple(g.factors[i], parts[i]));
  return Decomposition{g, outer_merge(per_factor)};
}

bool is_irreducible_square(const SemisimpleAlgebra& g, const Weight& lambda,
                           SquareKind kind) {
  auto [alt, sym] = alt_sym_squares(g, lambda);
  const auto& d = kind == SquareKind::alt ? alt : sym;
  return d.terms.size() == 1 && d.terms.begin()->second == 1;
}

std::vector<ScanRow> scan_tables(SquareKind kind, int max_rank, int max_label_sum) {
  if (max_rank < 1 || max_label_sum < 1)
    throw std::invalid_argument("scan bounds must be positive");

  std::vector<SimpleType> types;
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) types.push_back({Family::B, r});
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) types.push_back({Family::D, r});
  if (max_rank >= 6) types.push_back({Family::E6, 6});
  if (max_rank >= 7) types.push_back({Family::E7, 7});
  if (max_rank >= 8) types.push_back({Family::E8, 8});
  if (max_rank >= 4) types.push_back({Family::F4, 4});
  if (max_rank >= 2) types.push_back({Family::G2, 2});

  std::vector<ScanRow> rows;
  for (const auto& t : types) {
    const auto& rs = RootSystem::get(t);
    // Enumerate all non-zero dominant weights with bounded label sum.
    std::vector<Weight> all;
    Weight cur(t.rank, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == t.rank) {
        for (int x : cur)
          if (x > 0) { all.push_back(cur); break; }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
      cur[pos] = 0;
    };
    rec(rec, 0, max_label_sum);
    std::sort(all.begin(), all.end());

    for (const auto& lambda : all) {
      Int d = rs.weyl_dim(lambda);
      if (kind == SquareKind::sym) {
        Weight nu = lambda;
        for (auto& x : nu) x *= 2;
        if (rs.weyl_dim(nu) == d * (d + 1) / 2)
          rows.push_back({t, lambda, nu, d, d * (d + 1) / 2});
      } else {
        // Alt^2 has maximal weights 2*lambda - alpha_j for each j with
        // lambda_j > 0; two or more such j force reducibility, otherwise
        // compare dimensions.
        if (d < 2) continue;
        int j = -1;
        bool multiple = false;
        for (int a = 0; a < t.rank; ++a)
          if (lambda[a] > 0) {
            if (j >= 0) { multiple = true; break; }
            j = a;
          }
        if (multiple) continue;
        Weight nu = lambda;
        for (auto& x : nu) x *= 2;
        for (int b = 0; b < t.rank; ++b) nu[b] -= rs.cartan()[j][b];
        if (rs.weyl_dim(nu) == d * (d - 1) / 2)
          rows.push_back({t, lambda, nu, d, d * (d - 1) / 2});
      }
    }
  }
  return rows;
}

}  // namespace liesq
