#include "liesq/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liesq {

namespace {

int family_order(Family f) { return static_cast<int>(f); }

}  // namespace

std::string SimpleType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string SimpleType::compact_name() const {
  switch (family) {
    case Family::A: return "su(" + std::to_string(rank + 1) + ")";
    case Family::B: return "so(" + std::to_string(2 * rank + 1) + ")";
    case Family::C: return "sp(" + std::to_string(rank) + ")";
    case Family::D: return "so(" + std::to_string(2 * rank) + ")";
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    case Family::E8: return "e8";
    case Family::F4: return "f4";
    case Family::G2: return "g2";
  }
  return "?";
}

std::optional<SimpleType> SimpleType::parse(const std::string& in) {
  std::string s;
  for (char c : in) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.size() < 2) return std::nullopt;

  auto num_at = [&](size_t pos) -> std::optional<int> {
    if (pos >= s.size()) return std::nullopt;
    for (size_t i = pos; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    try {
      return std::stoi(s.substr(pos));
    } catch (...) {
      return std::nullopt;
    }
  };

  auto make = [](Family f, int rank) -> std::optional<SimpleType> {
    SimpleType t{f, rank};
    switch (f) {
      case Family::A: if (rank < 1) return std::nullopt; break;
      case Family::B: if (rank < 2) return std::nullopt; break;
      case Family::C: if (rank < 1) return std::nullopt; break;
      case Family::D: if (rank < 3) return std::nullopt; break;
      case Family::E6: if (rank != 6) return std::nullopt; break;
      case Family::E7: if (rank != 7) return std::nullopt; break;
      case Family::E8: if (rank != 8) return std::nullopt; break;
      case Family::F4: if (rank != 4) return std::nullopt; break;
      case Family::G2: if (rank != 2) return std::nullopt; break;
    }
    return t;
  };

  // Compact aliases.
  if (s.rfind("su", 0) == 0) {
    auto n = num_at(2);
    if (!n || *n < 2) return std::nullopt;
    return make(Family::A, *n - 1);
  }
  if (s.rfind("so", 0) == 0) {
    auto n = num_at(2);
    if (!n || *n < 5) return std::nullopt;
    if (*n % 2 == 1) return make(Family::B, (*n - 1) / 2);
    return make(Family::D, *n / 2);
  }
  if (s.rfind("sp", 0) == 0) {
    auto n = num_at(2);
    if (!n || *n < 1) return std::nullopt;
    return make(Family::C, *n);
  }

  // Cartan names.
  auto n = num_at(1);
  if (!n) return std::nullopt;
  switch (s[0]) {
    case 'a': return make(Family::A, *n);
    case 'b': return make(Family::B, *n);
    case 'c': return make(Family::C, *n);
    case 'd': return make(Family::D, *n);
    case 'e':
      if (*n == 6) return make(Family::E6, 6);
      if (*n == 7) return make(Family::E7, 7);
      if (*n == 8) return make(Family::E8, 8);
      return std::nullopt;
    case 'f': return *n == 4 ? make(Family::F4, 4) : std::nullopt;
    case 'g': return *n == 2 ? make(Family::G2, 2) : std::nullopt;
    default: return std::nullopt;
  }
}

int SemisimpleAlgebra::rank() const {
  int r = 0;
  for (const auto& t : factors) r += t.rank;
  return r;
}

std::string SemisimpleAlgebra::name() const {
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "+";
    out += factors[i].compact_name();
  }
  return out;
}

std::optional<SemisimpleAlgebra> SemisimpleAlgebra::parse(const std::string& s) {
  SemisimpleAlgebra g;
  std::string piece;
  std::stringstream ss(s);
  while (std::getline(ss, piece, '+')) {
    auto t = SimpleType::parse(piece);
    if (!t) return std::nullopt;
    g.factors.push_back(*t);
  }
  if (g.factors.empty()) return std::nullopt;
  return g;
}

std::vector<Weight> SemisimpleAlgebra::split(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank())
    throw std::invalid_argument("weight length does not match algebra rank");
  std::vector<Weight> parts;
  size_t pos = 0;
  for (const auto& t : factors) {
    parts.emplace_back(w.begin() + pos, w.begin() + pos + t.rank);
    pos += t.rank;
  }
  return parts;
}

Weight SemisimpleAlgebra::join(const std::vector<Weight>& parts) const {
  Weight w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

// ---------------------------------------------------------------------------

RootSystem::RootSystem(SimpleType t) : type_(t), rank_(t.rank) {
  build_cartan();
  build_half_norms();

  // Exact inverse of the Cartan matrix by Gauss-Jordan elimination.
  int n = rank_;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[piv]);
    Rat inv = Rat(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  cartan_inv_.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_inv_[i][j] = m[i][n + j];

  build_positive_roots();
  rho_.assign(rank_, 1);
}

const RootSystem& RootSystem::get(SimpleType t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

void RootSystem::build_cartan() {
  int n = rank_;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto bond = [&](int a, int b) {  // single edge, 1-indexed
    cartan_[a - 1][b - 1] = -1;
    cartan_[b - 1][a - 1] = -1;
  };
  switch (type_.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      cartan_[n - 2][n - 1] = -2;  // last simple root short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      if (n >= 2) cartan_[n - 1][n - 2] = -2;  // last simple root long
      break;
    case Family::D:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      bond(1, 3);
      bond(2, 4);
      bond(3, 4);
      for (int i = 4; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F4:
      bond(1, 2);
      bond(3, 4);
      cartan_[1][2] = -2;  // alpha_2 long, alpha_3 short
      cartan_[2][1] = -1;
      break;
    case Family::G2:
      cartan_[0][1] = -1;  // alpha_1 short
      cartan_[1][0] = -3;
      break;
  }
}

void RootSystem::build_half_norms() {
  // Relative lengths from the Cartan matrix: (a_a|a_a)/(a_b|a_b) =
  // A_ba/A_ab on any edge; normalise long roots to (a|a) = 2.
  int n = rank_;
  half_norms_.assign(n, Rat(0));
  half_norms_[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    for (int b = 0; b < n; ++b) {
      if (b == a || cartan_[a][b] == 0 || half_norms_[b] != 0) continue;
      half_norms_[b] = half_norms_[a] * Rat(cartan_[b][a]) / Rat(cartan_[a][b]);
      todo.push_back(b);
    }
  }
  Rat mx = half_norms_[0];
  for (const auto& d : half_norms_) mx = std::max(mx, d);
  for (auto& d : half_norms_) d /= mx;
}

void RootSystem::build_positive_roots() {
  // Height-by-height closure with root strings: beta + alpha_a is a root
  // iff q = p - <beta, alpha_a^vee> > 0, where p counts how far the string
  // extends below beta.
  int n = rank_;
  std::set<std::vector<int>> seen;
  std::vector<Root> current;
  for (int a = 0; a < n; ++a) {
    Root r;
    r.simple.assign(n, 0);
    r.simple[a] = 1;
    r.fund = Weight(cartan_[a].begin(), cartan_[a].end());
    r.height = 1;
    seen.insert(r.simple);
    positive_.push_back(r);
    current.push_back(r);
  }
  while (!current.empty()) {
    std::vector<Root> next;
    for (const auto& beta : current) {
      for (int a = 0; a < n; ++a) {
        int p = 0;
        std::vector<int> down = beta.simple;
        while (true) {
          down[a] -= 1;
          bool neg = false;
          for (int x : down)
            if (x < 0) { neg = true; break; }
          if (neg || !seen.count(down)) break;
          ++p;
        }
        if (p - beta.fund[a] <= 0) continue;
        Root r;
        r.simple = beta.simple;
        r.simple[a] += 1;
        if (seen.count(r.simple)) continue;
        r.fund = beta.fund;
        for (int b = 0; b < n; ++b) r.fund[b] += cartan_[a][b];
        r.height = beta.height + 1;
        seen.insert(r.simple);
        positive_.push_back(r);
        next.push_back(r);
      }
    }
    current = std::move(next);
  }
  int best = 0;
  for (const auto& r : positive_)
    if (r.height > positive_[best].height)
      best = static_cast<int>(&r - positive_.data());
  highest_root_ = positive_[best].fund;
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  // (w_a | w_b) = (A^{-1})_ab * d_b.
  Rat out = 0;
  for (int a = 0; a < rank_; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < rank_; ++b) {
      if (y[b] == 0) continue;
      out += Rat(x[a]) * Rat(y[b]) * cartan_inv_[a][b] * half_norms_[b];
    }
  }
  return out;
}

Rat RootSystem::inner_with_root(const Weight& x, const std::vector<int>& alpha) const {
  Rat out = 0;
  for (int c = 0; c < rank_; ++c)
    if (alpha[c] != 0 && x[c] != 0) out += Rat(alpha[c]) * Rat(x[c]) * half_norms_[c];
  return out;
}

Weight RootSystem::simple_reflection(const Weight& v, int a) const {
  Weight out = v;
  int va = v[a];
  for (int b = 0; b < rank_; ++b) out[b] -= va * cartan_[a][b];
  return out;
}

Weight RootSystem::dominant_conjugate(Weight v) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < rank_; ++a) {
      if (v[a] < 0) {
        v = simple_reflection(v, a);
        changed = true;
      }
    }
  }
  return v;
}

std::pair<Weight, int> RootSystem::dominant_reduce(Weight v) const {
  for (int a = 0; a < rank_; ++a) v[a] += 1;  // rho shift
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < rank_; ++a) {
      if (v[a] == 0) {  // on a chamber wall
        v = dominant_conjugate(v);
        for (int b = 0; b < rank_; ++b) v[b] -= 1;
        return {dominant_conjugate(v), 0};
      }
      if (v[a] < 0) {
        v = simple_reflection(v, a);
        sign = -sign;
        changed = true;
      }
    }
  }
  for (int a = 0; a < rank_; ++a) {
    if (v[a] == 0) {
      for (int b = 0; b < rank_; ++b) v[b] -= 1;
      return {dominant_conjugate(v), 0};
    }
    v[a] -= 1;
  }
  return {v, sign};
}

Int RootSystem::weyl_dim(const Weight& lambda) const {
  Weight lr = lambda;
  for (int a = 0; a < rank_; ++a) lr[a] += 1;
  Rat out = 1;
  for (const auto& alpha : positive_) {
    out *= inner_with_root(lr, alpha.simple) / inner_with_root(rho_, alpha.simple);
  }
  if (denominator(out) != 1) throw std::logic_error("Weyl dimension not integral");
  return numerator(out);
}

bool RootSystem::below(const Weight& lambda, const Weight& mu) const {
  return root_coords_of_difference(lambda, mu).has_value();
}

std::optional<std::vector<int>> RootSystem::root_coords_of_difference(
    const Weight& lambda, const Weight& mu) const {
  // lambda - mu = sum_c n_c alpha_c  <=>  n = (A^{-1})^T (lambda - mu).
  std::vector<int> n(rank_);
  for (int c = 0; c < rank_; ++c) {
    Rat v = 0;
    for (int b = 0; b < rank_; ++b)
      v += cartan_inv_[b][c] * Rat(lambda[b] - mu[b]);
    if (denominator(v) != 1 || v < 0) return std::nullopt;
    n[c] = static_cast<int>(numerator(v));
  }
  return n;
}

const std::map<Weight, Int>& RootSystem::dominant_weights(const Weight& lambda) const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = dom_cache_.find(lambda);
  if (it != dom_cache_.end()) return it->second;

  check_dominant_weight(type_, lambda);

  // Enumerate all weights of the irrep by breadth-first search from the
  // highest weight; nu is a weight iff its dominant conjugate lies below
  // lambda in the root order.
  std::set<Weight> weights{lambda};
  std::vector<Weight> frontier{lambda};
  std::vector<Weight> dominant{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int a = 0; a < rank_; ++a) {
        Weight nu = w;
        for (int b = 0; b < rank_; ++b) nu[b] -= cartan_[a][b];
        if (weights.count(nu)) continue;
        if (!below(lambda, dominant_conjugate(nu))) continue;
        weights.insert(nu);
        next.push_back(nu);
        bool dom = true;
        for (int b = 0; b < rank_; ++b)
          if (nu[b] < 0) { dom = false; break; }
        if (dom) dominant.push_back(nu);
      }
    }
    frontier = std::move(next);
  }

  // Freudenthal recursion over dominant weights, highest first.
  auto depth = [&](const Weight& w) {
    auto rc = root_coords_of_difference(lambda, w);
    int h = 0;
    for (int x : *rc) h += x;
    return h;
  };
  std::sort(dominant.begin(), dominant.end(),
            [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  std::map<Weight, Int> mult;
  Weight lr = lambda;
  for (int a = 0; a < rank_; ++a) lr[a] += 1;
  for (const auto& w : dominant) {
    if (w == lambda) {
      mult[lambda] = 1;
      continue;
    }
    Rat num = 0;
    for (const auto& alpha : positive_) {
      for (int k = 1;; ++k) {
        Weight up = w;
        for (int b = 0; b < rank_; ++b) up[b] += k * alpha.fund[b];
        auto it2 = mult.find(dominant_conjugate(up));
        if (it2 == mult.end()) break;  // root strings are unbroken
        num += (inner_with_root(w, alpha.simple) +
                Rat(k) * inner_with_root(alpha.fund, alpha.simple)) *
               Rat(it2->second);
      }
    }
    // denominator: (lambda+rho|lambda+rho) - (w+rho|w+rho)
    Weight wr = w;
    for (int a = 0; a < rank_; ++a) wr[a] += 1;
    Rat den = inner(lr, lr) - inner(wr, wr);
    Rat m = 2 * num / den;
    if (denominator(m) != 1 || m <= 0)
      throw std::logic_error("Freudenthal recursion produced a non-positive multiplicity");
    mult[w] = numerator(m);
  }

  return dom_cache_.emplace(lambda, std::move(mult)).first->second;
}

std::map<Weight, Int> RootSystem::weight_system(const Weight& lambda) const {
  const auto& dom = dominant_weights(lambda);
  std::map<Weight, Int> out;
  for (const auto& [w, m] : dom) {
    // Expand the Weyl orbit of w by repeated simple reflections.
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& v : frontier) {
        for (int a = 0; a < rank_; ++a) {
          if (v[a] == 0) continue;
          Weight u = simple_reflection(v, a);
          if (orbit.insert(u).second) next.push_back(u);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& v : orbit) out[v] = m;
  }
  return out;
}

void check_dominant_weight(const SimpleType& t, const Weight& w) {
  if (static_cast<int>(w.size()) != t.rank)
    throw std::invalid_argument("weight length " + std::to_string(w.size()) +
                                " does not match rank of " + t.name());
  for (int x : w)
    if (x < 0) throw std::invalid_argument("weight labels must be non-negative");
}

void check_dominant_weight(const SemisimpleAlgebra& g, const Weight& w) {
  if (static_cast<int>(w.size()) != g.rank())
    throw std::invalid_argument("weight length does not match algebra rank");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("weight labels must be non-negative");
}

std::string weight_to_string(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

std::optional<Weight> weight_from_string(const std::string& s) {
  Weight w;
  std::string piece;
  std::string body = s;
  if (!body.empty() && body.front() == '(') body.erase(0, 1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::stringstream ss(body);
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used]))) ++used;
      if (used != piece.size()) return std::nullopt;
      w.push_back(v);
    } catch (...) {
      return std::nullopt;
    }
  }
  if (w.empty()) return std::nullopt;
  return w;
}

}  // namespace liesq
