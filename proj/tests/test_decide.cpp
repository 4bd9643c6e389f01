#include <doctest.h>

#include "liesq/decide.hpp"

#include <numeric>

using namespace liesq;

namespace {

GQMatrix idiag(const std::vector<int>& entries) {
  GQMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t j = 0; j < entries.size(); ++j) m((int)j, (int)j) = GQ(0, entries[j]);
  return m;
}

MatrixRep exact_rep(std::vector<GQMatrix> gens) {
  MatrixRep r;
  r.dim = gens.front().rows;
  r.exact = std::move(gens);
  return r;
}

MatrixRep to_float_rep(const MatrixRep& r) {
  MatrixRep rf;
  rf.dim = r.dim;
  rf.flt = r.to_float();
  return rf;
}

// so(3) acting on the first three coordinates of R^5.
MatrixRep embedded_so3_in_so5() {
  std::vector<GQMatrix> gens;
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    GQMatrix m(5, 5);
    m(i, j) = GQ(1);
    m(j, i) = GQ(-1);
    gens.push_back(m);
  }
  return exact_rep(std::move(gens));
}

}  // namespace

TEST_SUITE_BEGIN("decide");

TEST_CASE("full verdicts on the standard bases") {
  auto r = is_full_su(standard_generators(ClassicalFamily::su, 3), 3);
  CHECK(r.verdict == Verdict::full);
  CHECK(r.computed_dim == 2);
  CHECK(r.expected_dim == 2);
  CHECK(r.exit_code() == 0);

  CHECK(is_full_so(standard_generators(ClassicalFamily::so, 5), 5).verdict ==
        Verdict::full);
  CHECK(is_full_sp(standard_generators(ClassicalFamily::sp, 2), 2).verdict ==
        Verdict::full);
}

TEST_CASE("proper verdicts") {
  // sp(2) generators inside su(4): a proper subalgebra.
  auto sp2 = standard_generators(ClassicalFamily::sp, 2);
  auto r = is_full_su(sp2, 4);
  CHECK(r.verdict == Verdict::proper);
  CHECK(r.computed_dim == 3);
  CHECK(r.exit_code() == 1);

  // so(3) block inside so(5).
  auto r2 = is_full_so(embedded_so3_in_so5(), 5);
  CHECK(r2.verdict == Verdict::proper);
  CHECK(r2.computed_dim > 3);

  // Two commuting diagonals inside su(3).
  auto r3 = is_full_su(exact_rep({idiag({1, 1, -2}), idiag({2, -1, -1})}), 3);
  CHECK(r3.verdict == Verdict::proper);
  CHECK(r3.computed_dim == 15);
}

TEST_CASE("precondition violations are reported as errors") {
  CHECK_THROWS(is_full_su(exact_rep({GQMatrix::identity(3)}), 3));  // not traceless
  CHECK_THROWS(is_full_so(standard_generators(ClassicalFamily::so, 5), 4));
  CHECK_THROWS(is_full_sp(standard_generators(ClassicalFamily::sp, 2), 1));
  CHECK_THROWS(is_full_su(standard_generators(ClassicalFamily::su, 3), 4));
}

TEST_CASE("closure cross-check agrees") {
  DecideOptions opt;
  opt.cross_check_closure = true;
  auto r = is_full_su(standard_generators(ClassicalFamily::su, 3), 3, opt);
  CHECK(r.verdict == Verdict::full);
  CHECK(r.closure_dim == 8);

  auto r2 = is_full_so(embedded_so3_in_so5(), 5, opt);
  CHECK(r2.verdict == Verdict::proper);
  CHECK(r2.closure_dim == 3);
}

TEST_CASE("float backend decisions") {
  DecideOptions opt;
  opt.backend = Backend::floating;
  auto r = is_full_su(to_float_rep(standard_generators(ClassicalFamily::su, 3)), 3, opt);
  CHECK(r.verdict == Verdict::full);
  CHECK(r.spectral_gap > 1e3);

  auto r2 = is_full_so(to_float_rep(embedded_so3_in_so5()), 5, opt);
  CHECK(r2.verdict == Verdict::proper);
}

TEST_CASE("equality with a parent algebra") {
  auto su3 = standard_generators(ClassicalFamily::su, 3);
  // A generating pair of su(3) equals the full basis.
  MatrixRep pair = exact_rep({su3.exact[0], su3.exact[0 + 4] + su3.exact[7]});
  REQUIRE(lie_closure(pair).dim == 8);
  auto r = equals_parent(pair, su3);
  CHECK(r.verdict == Verdict::full);
  CHECK(r.center_dim == 0);
  CHECK(r.semisimple_certified);

  // One diagonal versus two: both abelian, different sizes.
  MatrixRep h = exact_rep({idiag({1, 1, -2})});
  MatrixRep g = exact_rep({idiag({1, 1, -2}), idiag({2, -1, -1})});
  auto r2 = equals_parent(h, g);
  CHECK(r2.verdict == Verdict::proper);
  CHECK(r2.computed_dim == 33);
  CHECK(r2.expected_dim == 15);
  CHECK(r2.center_dim == 2);

  // Equal commutant dimensions with a nonzero parent center do not
  // certify equality: the center comparison stays open.
  auto r3 = equals_parent(g, g);
  CHECK(r3.verdict == Verdict::indeterminate);
  CHECK(r3.center_dim == 2);
  CHECK(r3.exit_code() == 2);

  // With a semisimple parent the same-dimension case is conclusive.
  auto r4 = equals_parent(su3, su3);
  CHECK(r4.verdict == Verdict::full);

  // Generators outside the parent closure are rejected.
  GQMatrix offdiag(3, 3);
  offdiag(0, 1) = GQ(1);
  offdiag(1, 0) = GQ(-1);
  CHECK_THROWS(equals_parent(exact_rep({offdiag}), g));
}

TEST_CASE("report serialisation") {
  auto r = is_full_su(standard_generators(ClassicalFamily::su, 2), 2);
  auto j = r.to_json();
  CHECK(j.find("\"verdict\":\"full\"") != std::string::npos);
  CHECK(j.find("\"computed_dim\":2") != std::string::npos);
  auto t = r.to_text();
  CHECK(t.find("full") != std::string::npos);
}

TEST_CASE("adjoint multiplicity bound for self-dual weights") {
  CHECK(gap_bound_check(*SimpleType::parse("su2"), {2}));
  CHECK(gap_bound_check(*SimpleType::parse("so7"), {1, 0, 0}));
  CHECK(gap_bound_check(*SimpleType::parse("sp2"), {1, 1}));
  CHECK(gap_bound_check(*SimpleType::parse("g2"), {1, 1}));

  // Exhaustive over small self-dual weights.
  for (const char* name : {"su2", "su3", "so5", "so7", "sp3", "g2"}) {
    auto t = *SimpleType::parse(name);
    std::vector<Weight> box;
    Weight w(t.rank, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == t.rank) {
        if (std::accumulate(w.begin(), w.end(), 0) > 0) box.push_back(w);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        w[pos] = v;
        self(self, pos + 1, left - v);
      }
      w[pos] = 0;
    };
    rec(rec, 0, 2);
    SemisimpleAlgebra g{{t}};
    for (const auto& lam : box) {
      if (!is_self_dual(g, lam)) continue;
      CAPTURE(name);
      CAPTURE(weight_to_string(lam));
      CHECK(gap_bound_check(t, lam));
    }
  }
}

TEST_SUITE_END();
