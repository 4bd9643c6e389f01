#include "liesq/modkernel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace liesq {

namespace {

// ---- word-sized prime field, Montgomery form -------------------------------

struct Mont {
  uint32_t p;
  uint32_t pinv;  // -p^{-1} mod 2^32
  uint32_t r2;    // 2^64 mod p
  uint32_t one;   // 2^32 mod p

  explicit Mont(uint32_t prime) : p(prime) {
    uint32_t inv = prime;  // Newton iteration for p^{-1} mod 2^32
    for (int i = 0; i < 4; ++i) inv *= 2 - prime * inv;
    pinv = ~inv + 1;
    one = static_cast<uint32_t>((uint64_t(1) << 32) % prime);
    // r2 = (2^32)^2 mod p
    r2 = static_cast<uint32_t>((static_cast<unsigned __int128>(one) * one) % prime);
  }
  uint32_t mul(uint32_t a, uint32_t b) const {  // both in Montgomery form
    uint64_t t = static_cast<uint64_t>(a) * b;
    uint32_t m = static_cast<uint32_t>(t) * pinv;
    uint64_t u = (t + static_cast<uint64_t>(m) * p) >> 32;
    return u >= p ? static_cast<uint32_t>(u - p) : static_cast<uint32_t>(u);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;  // p < 2^31 so no overflow
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t to(uint32_t x) const { return mul(x % p, r2); }
  uint32_t from(uint32_t x) const { return mul(x, 1); }
  uint32_t pow(uint32_t base_mont, uint64_t e) const {
    uint32_t acc = one, b = base_mont;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }
  uint32_t inv(uint32_t a_mont) const { return pow(a_mont, p - 2); }
};

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 32-bit
  uint32_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) { d /= 2; ++s; }
  for (uint64_t a : {2ull, 7ull, 61ull}) {
    uint64_t x = 1, b = a % n, e = d;
    while (e) {
      if (e & 1) x = x * b % n;
      b = b * b % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

// Primes = 1 (mod 4), descending from just below 2^31.
std::vector<uint32_t> prime_list(size_t count) {
  std::vector<uint32_t> out;
  for (uint32_t c = 2147483629u; out.size() < count && c > (1u << 30); c -= 4) {
    if (c % 4 == 1 && is_prime_u32(c)) out.push_back(c);
  }
  return out;
}

uint32_t sqrt_minus_one(const Mont& mf) {
  for (uint32_t a = 2;; ++a) {
    uint32_t x = mf.pow(mf.to(a), (mf.p - 1) / 4);
    if (mf.mul(x, x) == mf.sub(0, mf.one)) return mf.from(x);
  }
}

// residue of a rational mod p (Montgomery form); false if p divides a denominator
bool rat_residue(const Rat& q, const Mont& mf, uint32_t& out) {
  Int num = numerator(q), den = denominator(q);
  uint32_t dn = static_cast<uint32_t>(den % mf.p);
  if (dn == 0) return false;
  Int nm = num % mf.p;
  if (nm < 0) nm += mf.p;
  out = mf.mul(mf.to(static_cast<uint32_t>(nm)), mf.inv(mf.to(dn)));
  return true;
}

// residue of a Gaussian rational with i -> im_root
bool gq_residue(const GQ& x, const Mont& mf, uint32_t im_root_mont, uint32_t& out) {
  uint32_t re, im;
  if (!rat_residue(x.re, mf, re) || !rat_residue(x.im, mf, im)) return false;
  out = mf.add(re, mf.mul(im, im_root_mont));
  return true;
}

// dense matrix over F_p, Montgomery form, row-major
struct MMat {
  int rows = 0, cols = 0;
  std::vector<uint32_t> a;
  MMat() = default;
  MMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint32_t* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const uint32_t* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
};

// Kernel basis of A (constraints in rows) by forward elimination plus
// back substitution, one kernel vector per free column.  The basis is the
// canonical one determined by the pivot-column set.
struct KernelOut {
  std::vector<int> pivot_cols;
  std::vector<std::vector<uint32_t>> basis;  // Montgomery form, length = cols
};

KernelOut kernel_mod(MMat A, const Mont& mf) {
  const int n = A.rows, m = A.cols;
  std::vector<int> pivots;
  int pr = 0;  // current pivot row
  for (int col = 0; col < m && pr < n; ++col) {
    int sel = -1;
    for (int r = pr; r < n; ++r)
      if (A.row(r)[col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr)
      std::swap_ranges(A.row(sel), A.row(sel) + m, A.row(pr));
    uint32_t* prow = A.row(pr);
    uint32_t inv = mf.inv(prow[col]);
    for (int j = col; j < m; ++j) prow[j] = mf.mul(prow[j], inv);
    for (int r = pr + 1; r < n; ++r) {
      uint32_t* rr = A.row(r);
      uint32_t f = rr[col];
      if (f == 0) continue;
      rr[col] = 0;
      for (int j = col + 1; j < m; ++j)
        if (prow[j]) rr[j] = mf.sub(rr[j], mf.mul(f, prow[j]));
    }
    pivots.push_back(col);
    ++pr;
  }

  KernelOut out;
  out.pivot_cols = pivots;
  std::vector<char> is_pivot(m, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<uint32_t> x(m);
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = mf.one;
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      const uint32_t* rr = A.row(i);
      int pc = pivots[i];
      uint32_t s = 0;
      for (int j = pc + 1; j < m; ++j)
        if (rr[j] && x[j]) s = mf.add(s, mf.mul(rr[j], x[j]));
      x[pc] = mf.sub(0, s);
    }
    out.basis.push_back(x);
  }
  return out;
}

// ---- rational reconstruction ------------------------------------------------

// value v mod M -> num/den with |num|, den <= sqrt(M/2); false on failure
bool rational_reconstruct(Int v, const Int& M, Rat& out) {
  v %= M;
  if (v < 0) v += M;
  Int half = M / 2;
  Int bound = sqrt(half);
  Int r0 = M, r1 = v, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) { t1 = -t1; r1 = -r1; }
  if (t1 > bound) return false;
  if (gcd(abs(r1), t1) != 1) return false;
  out = Rat(r1, t1);
  return true;
}

struct PrimeShot {
  uint32_t p;
  std::vector<int> pivot_cols;
  // per basis vector, per entry: plain (a + b*r mod p, a - b*r mod p) residues
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> residues;
};

// One full modular commutant computation (both embeddings i -> +-r).
// Returns false if the prime is unusable (divides some denominator).
bool run_prime(const std::vector<GQMatrix>& gens, uint32_t p, std::uint64_t seed,
               PrimeShot& shot) {
  const int k = gens[0].rows;
  const int n = k * k;
  Mont mf(p);
  uint32_t r_plain = sqrt_minus_one(mf);

  // Reduce generators under both embeddings.
  std::vector<std::vector<uint32_t>> red[2];
  for (int emb = 0; emb < 2; ++emb) {
    uint32_t root = mf.to(emb == 0 ? r_plain : p - r_plain);
    for (const auto& g : gens) {
      std::vector<uint32_t> m(static_cast<size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (!gq_residue(g(i, j), mf, root, m[static_cast<size_t>(i) * k + j]))
            return false;
      red[emb].push_back(std::move(m));
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<uint32_t> coeff(gens.size());
  for (auto& c : coeff) c = mf.to(static_cast<uint32_t>(rng() % (p - 1)) + 1);

  std::vector<std::vector<std::vector<uint32_t>>> bases(2);
  for (int emb = 0; emb < 2; ++emb) {
    // Random combination C of the generators: its Sylvester kernel
    // contains the commutant and is usually already small.
    std::vector<uint32_t> C(static_cast<size_t>(k) * k, 0);
    for (size_t g = 0; g < gens.size(); ++g)
      for (size_t idx = 0; idx < C.size(); ++idx)
        C[idx] = mf.add(C[idx], mf.mul(coeff[g], red[emb][g][idx]));

    // S[(r,c),(u,v)] = C(r,u) d(c,v) - d(r,u) C(v,c)
    MMat S(n, n);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        uint32_t* row = S.row(r * k + c);
        for (int u = 0; u < k; ++u)
          row[u * k + c] = C[static_cast<size_t>(r) * k + u];
        for (int v = 0; v < k; ++v) {
          uint32_t& e = row[r * k + v];
          e = mf.sub(e, C[static_cast<size_t>(v) * k + c]);
        }
      }
    auto ker = kernel_mod(std::move(S), mf);
    auto basis = std::move(ker.basis);

    // Refine by each generator: keep combinations annihilated by its
    // Sylvester operator.
    for (const auto& M : red[emb]) {
      if (basis.empty()) break;
      int m = static_cast<int>(basis.size());
      MMat T(n, m);
      for (int j = 0; j < m; ++j) {
        const auto& x = basis[j];
        // Y = M X - X M
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) {
            uint32_t s = 0;
            for (int t = 0; t < k; ++t) {
              s = mf.add(s, mf.mul(M[static_cast<size_t>(r) * k + t],
                                   x[static_cast<size_t>(t) * k + c]));
              s = mf.sub(s, mf.mul(x[static_cast<size_t>(r) * k + t],
                                   M[static_cast<size_t>(t) * k + c]));
            }
            T.row(r * k + c)[j] = s;
          }
      }
      auto kt = kernel_mod(std::move(T), mf);
      std::vector<std::vector<uint32_t>> refined;
      for (const auto& cvec : kt.basis) {
        std::vector<uint32_t> v(n, 0);
        for (int j = 0; j < m; ++j) {
          if (cvec[j] == 0) continue;
          for (int idx = 0; idx < n; ++idx)
            if (basis[j][idx]) v[idx] = mf.add(v[idx], mf.mul(cvec[j], basis[j][idx]));
        }
        refined.push_back(std::move(v));
      }
      basis = std::move(refined);
    }

    // Canonicalize: reduced echelon form of the basis rows.
    if (!basis.empty()) {
      int m = static_cast<int>(basis.size());
      MMat B(m, n);
      for (int i = 0; i < m; ++i)
        std::copy(basis[i].begin(), basis[i].end(), B.row(i));
      // Gauss-Jordan on the small m x n matrix.
      std::vector<int> pivots;
      int pr = 0;
      for (int col = 0; col < n && pr < m; ++col) {
        int sel = -1;
        for (int r = pr; r < m; ++r)
          if (B.row(r)[col]) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr) std::swap_ranges(B.row(sel), B.row(sel) + n, B.row(pr));
        uint32_t inv = mf.inv(B.row(pr)[col]);
        for (int j = 0; j < n; ++j) B.row(pr)[j] = mf.mul(B.row(pr)[j], inv);
        for (int r = 0; r < m; ++r) {
          if (r == pr) continue;
          uint32_t f = B.row(r)[col];
          if (!f) continue;
          for (int j = 0; j < n; ++j)
            if (B.row(pr)[j]) B.row(r)[j] = mf.sub(B.row(r)[j], mf.mul(f, B.row(pr)[j]));
        }
        pivots.push_back(col);
        ++pr;
      }
      if (pr != m) return false;  // dependent modular basis: treat as bad prime
      basis.assign(m, std::vector<uint32_t>(n));
      for (int i = 0; i < m; ++i)
        std::copy(B.row(i), B.row(i) + n, basis[i].begin());
      if (emb == 0)
        shot.pivot_cols = pivots;
      else if (pivots != shot.pivot_cols)
        return false;  // embeddings must agree on structure
    } else if (emb == 0) {
      shot.pivot_cols.clear();
    }
    bases[emb] = std::move(basis);
  }
  if (bases[0].size() != bases[1].size()) return false;

  shot.p = p;
  shot.residues.assign(bases[0].size(), {});
  Mont mf2(p);
  for (size_t i = 0; i < bases[0].size(); ++i) {
    shot.residues[i].resize(bases[0][i].size());
    for (size_t j = 0; j < bases[0][i].size(); ++j)
      shot.residues[i][j] = {mf2.from(bases[0][i][j]), mf2.from(bases[1][i][j])};
  }
  return true;
}

}  // namespace

std::vector<GQMatrix> commutant_basis_exact(const std::vector<GQMatrix>& gens,
                                            std::uint64_t seed) {
  if (gens.empty()) throw std::invalid_argument("commutant of an empty generator list");
  const int k = gens[0].rows;
  for (const auto& g : gens)
    if (g.rows != k || g.cols != k)
      throw std::invalid_argument("generators must be square and of equal size");
  const int n = k * k;

  // Sparse forms for exact verification.
  struct Entry { int i, j; GQ v; };
  std::vector<std::vector<Entry>> sparse(gens.size());
  for (size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!gens[g](i, j).is_zero()) sparse[g].push_back({i, j, gens[g](i, j)});

  auto verify = [&](const GQMatrix& X) {
    for (size_t g = 0; g < gens.size(); ++g) {
      GQMatrix P(k, k), Q(k, k);
      for (const auto& e : sparse[g]) {
        for (int c = 0; c < k; ++c) {
          const GQ& x = X(e.j, c);
          if (!x.is_zero()) P(e.i, c) += e.v * x;  // (A X)(i,c)
        }
        for (int r = 0; r < k; ++r) {
          const GQ& x = X(r, e.i);
          if (!x.is_zero()) Q(r, e.j) += x * e.v;  // (X A)(r,j)
        }
      }
      if (!(P == Q)) return false;
    }
    return true;
  };

  auto primes = prime_list(16);
  std::vector<PrimeShot> shots;
  size_t next_prime = 0;

  while (next_prime < primes.size()) {
    PrimeShot shot;
    if (!run_prime(gens, primes[next_prime++], seed, shot)) continue;

    // Keep only shots consistent with the smallest kernel seen (larger
    // modular kernels come from unlucky primes).
    if (!shots.empty() && (shot.residues.size() != shots[0].residues.size() ||
                           shot.pivot_cols != shots[0].pivot_cols)) {
      if (shot.residues.size() < shots[0].residues.size()) {
        shots.clear();
        shots.push_back(std::move(shot));
      }
      continue;
    }
    shots.push_back(std::move(shot));

    const size_t m = shots[0].residues.size();
    if (m == 0) return {};

    // CRT across shots, then rational reconstruction of a+b*i from the
    // two conjugate-embedding residues: a = (v+v')/2, b = (v-v')/(2r).
    Int M = 1;
    for (const auto& s : shots) M *= s.p;
    std::vector<GQMatrix> basis;
    bool ok = true;
    for (size_t vi = 0; vi < m && ok; ++vi) {
      GQMatrix X(k, k);
      for (int idx = 0; idx < n && ok; ++idx) {
        // CRT both residue streams
        Int va = 0, vb = 0, Mi = 1;
        for (const auto& s : shots) {
          Mont mf(s.p);
          uint32_t r = sqrt_minus_one(mf);
          uint32_t v0 = s.residues[vi][idx].first, v1 = s.residues[vi][idx].second;
          // plain residues of a and b mod p
          uint64_t inv2 = (s.p + 1) / 2;  // inverse of 2 mod p
          uint64_t sum = (static_cast<uint64_t>(v0) + v1) % s.p;
          uint64_t diff = (static_cast<uint64_t>(v0) + s.p - v1) % s.p;
          uint64_t a_res = sum * inv2 % s.p;
          // inverse of 2r mod p
          uint32_t inv2r = mf.from(mf.inv(mf.to(static_cast<uint32_t>(
              (2ull * r) % s.p))));
          uint64_t b_res = diff * inv2r % s.p;
          // CRT fold
          if (Mi == 1) {
            va = static_cast<long long>(a_res);
            vb = static_cast<long long>(b_res);
            Mi = s.p;
          } else {
            // solve x = va (mod Mi), x = a_res (mod p)
            Int pI = s.p;
            Int u = ((Int(static_cast<long long>(a_res)) - va) % pI + pI) % pI;
            Int MiInv = 1;
            {  // Mi^{-1} mod p by Fermat
              Mont mfp(s.p);
              uint32_t mired = static_cast<uint32_t>(Mi % s.p);
              MiInv = mfp.from(mfp.inv(mfp.to(mired)));
            }
            va += Mi * ((u * MiInv) % pI);
            u = ((Int(static_cast<long long>(b_res)) - vb) % pI + pI) % pI;
            vb += Mi * ((u * MiInv) % pI);
            Mi *= s.p;
          }
        }
        Rat a, b;
        if (!rational_reconstruct(va, M, a) || !rational_reconstruct(vb, M, b)) {
          ok = false;
          break;
        }
        X(idx / k, idx % k) = GQ(a, b);
      }
      if (ok) {
        if (!verify(X)) ok = false;
        else basis.push_back(std::move(X));
      }
    }
    if (ok) return basis;  // verified: modular upper bound met by exact vectors
  }
  throw std::runtime_error("exact commutant: reconstruction failed over all primes");
}

std::vector<int> gq_rref(std::vector<std::vector<GQ>>& rows) {
  if (rows.empty()) return {};
  const size_t m = rows[0].size();
  std::vector<int> pivots;
  size_t pr = 0;
  for (size_t col = 0; col < m && pr < rows.size(); ++col) {
    size_t sel = pr;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    GQ inv = rows[pr][col].inv();
    for (auto& x : rows[pr]) x = x * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][col].is_zero()) continue;
      GQ f = rows[r][col];
      for (size_t j = 0; j < m; ++j) rows[r][j] -= f * rows[pr][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++pr;
  }
  rows.resize(pr);
  return pivots;
}

int gq_rank(std::vector<std::vector<GQ>> rows) {
  return static_cast<int>(gq_rref(rows).size());
}

}  // namespace liesq
