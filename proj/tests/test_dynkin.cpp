#include <doctest.h>

#include "liesq/decomp.hpp"
#include "liesq/dynkin.hpp"

#include <numeric>

using namespace liesq;

namespace {

std::vector<Weight> weight_box(int rank, int max_sum, bool include_zero = false) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank) {
      if (include_zero || std::accumulate(w.begin(), w.end(), 0) > 0)
        out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[pos] = v;
      self(self, pos + 1, left - v);
    }
    w[pos] = 0;
  };
  rec(rec, 0, max_sum);
  return out;
}

// lambda + mu - sum n_k alpha_k in fundamental coordinates.
Weight shift_by_roots(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                      const std::vector<int>& n) {
  Weight out(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) {
    int v = lambda[i] + mu[i];
    for (size_t k = 0; k < n.size(); ++k) v -= n[k] * rs.cartan()[k][i];
    out[i] = v;
  }
  return out;
}

bool dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

}  // namespace

TEST_SUITE_BEGIN("dynkin");

TEST_CASE("subordination is the componentwise order") {
  CHECK(subordinate({1, 0}, {1, 1}));
  CHECK_FALSE(subordinate({2, 0}, {1, 1}));
  CHECK(subordinate({1, 1}, {1, 1}));
  CHECK_THROWS(subordinate({1}, {1, 1}));
}

TEST_CASE("diagram parts") {
  auto su4 = *SimpleType::parse("su4");
  auto [g1, w1] = part_weight(su4, {0, 1, 0}, {1});
  CHECK(g1.name() == "su(3)");
  CHECK(w1 == Weight{1, 0});

  auto [g2, w2] = part_weight(su4, {1, 0, 1}, {2});
  CHECK(g2.name() == "su(2)+su(2)");
  CHECK(w2 == Weight{1, 1});

  // so(7) minus the short-root end node leaves su(3).
  auto [g3, w3] = part_weight(*SimpleType::parse("so7"), {1, 1, 0}, {3});
  CHECK(g3.name() == "su(3)");
  CHECK(w3 == Weight{1, 1});

  // f4 minus an end node leaves a rank-3 double-edge diagram; the
  // orientation decides between so(7) and sp(3).
  auto [g4, w4] = part_weight(*SimpleType::parse("f4"), {1, 0, 0, 1}, {1});
  CHECK(g4.name() == "sp(3)");
  CHECK(w4 == Weight{1, 0, 0});
  auto [g5, w5] = part_weight(*SimpleType::parse("f4"), {1, 0, 0, 1}, {4});
  CHECK(g5.name() == "so(7)");
  CHECK(w5 == Weight{1, 0, 0});

  // e6 minus the branch node is su(6); minus an end node is so(10).
  auto [g6, w6] = part_weight(*SimpleType::parse("e6"), {1, 0, 0, 0, 0, 1}, {2});
  CHECK(g6.name() == "su(6)");
  CHECK(w6 == Weight{1, 0, 0, 0, 1});
  auto [g7, w7] = part_weight(*SimpleType::parse("e6"), {1, 0, 0, 0, 0, 1}, {1});
  CHECK(g7.name() == "so(10)");
  CHECK(w7 == Weight{1, 0, 0, 0, 0});

  auto [g8, w8] = part_weight(*SimpleType::parse("so10"), {1, 1, 0, 0, 0}, {1});
  CHECK(g8.name() == "so(8)");
  CHECK(w8 == Weight{1, 0, 0, 0});

  CHECK_THROWS(part_weight(su4, {0, 1, 0}, {1, 2, 3}));  // nothing left
}

TEST_CASE("minimal chains") {
  auto su2 = *SimpleType::parse("su2");
  CHECK(minimal_chains(su2, {1}, {1}) == std::vector<Chain>{{{1}}});

  auto su3 = *SimpleType::parse("su3");
  CHECK(minimal_chains(su3, {1, 0}, {0, 1}) == std::vector<Chain>{{{1, 2}}});
  CHECK(minimal_chains(su3, {1, 0}, {1, 0}) == std::vector<Chain>{{{1}}});
  // Both weights touch both nodes: two single-node chains.
  CHECK(minimal_chains(su3, {1, 1}, {1, 1}) ==
        std::vector<Chain>{{{1}}, {{2}}});

  auto so7 = *SimpleType::parse("so7");
  CHECK(minimal_chains(so7, {1, 0, 0}, {1, 0, 0}) == std::vector<Chain>{{{1}}});
  CHECK(minimal_chains(so7, {1, 0, 0}, {0, 0, 1}) ==
        std::vector<Chain>{{{1, 2, 3}}});
}

TEST_CASE("guaranteed constituents spot values") {
  auto su3 = *SimpleType::parse("su3");
  auto g = guaranteed_constituents(su3, {1, 0}, {0, 1});
  CHECK(g.count({1, 1}) == 1);
  CHECK(g.count({0, 0}) == 1);

  auto su2 = *SimpleType::parse("su2");
  auto h = guaranteed_constituents(su2, {1}, {1});
  CHECK(h == std::set<Weight>{{0}, {2}});

  // Zero weight on one side: just the sum.
  CHECK(guaranteed_constituents(su3, {1, 0}, {0, 0}) ==
        std::set<Weight>{{1, 0}});

  // so(7) vector (x) vector: the chain [1] guarantees (2,0,0) and (0,1,0).
  auto so7 = *SimpleType::parse("so7");
  auto k = guaranteed_constituents(so7, {1, 0, 0}, {1, 0, 0});
  CHECK(k == std::set<Weight>{{2, 0, 0}, {0, 1, 0}});
}

TEST_CASE("guaranteed constituents occur in the tensor decomposition") {
  std::vector<SimpleType> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
      {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 3},
      {Family::D, 4}, {Family::G2, 2}};
  for (auto ty : types) {
    SemisimpleAlgebra g{{ty}};
    auto box = weight_box(ty.rank, 2, /*include_zero=*/true);
    for (const auto& l : box)
      for (const auto& m : box) {
        auto t = tensor_decompose(g, l, m);
        for (const auto& w : guaranteed_constituents(ty, l, m)) {
          CAPTURE(ty.name());
          CAPTURE(weight_to_string(l));
          CAPTURE(weight_to_string(m));
          CAPTURE(weight_to_string(w));
          CHECK(t.mult(w) >= 1);
        }
      }
  }
}

TEST_CASE("subordination multiplicity monotonicity") {
  // If lambda' <= lambda and mu' <= mu componentwise, each constituent
  // lambda'+mu'-sum n_k alpha_k of the smaller product occurs at least
  // as often, with the same root shift, in the larger one.
  std::vector<SimpleType> types = {
      {Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::G2, 2},
      {Family::A, 3}};
  for (auto ty : types) {
    SemisimpleAlgebra g{{ty}};
    const auto& rs = RootSystem::get(ty);
    auto box = weight_box(ty.rank, 2, /*include_zero=*/true);
    for (const auto& lp : box)
      for (const auto& mp : box)
        for (const auto& l : box)
          for (const auto& m : box) {
            if (!subordinate(lp, l) || !subordinate(mp, m)) continue;
            auto small = tensor_decompose(g, lp, mp);
            auto big = tensor_decompose(g, l, m);
            Weight top(lp.size());
            for (size_t i = 0; i < lp.size(); ++i) top[i] = lp[i] + mp[i];
            for (const auto& [nu, mult] : small.terms) {
              auto n = rs.root_coords_of_difference(top, nu);
              REQUIRE(n.has_value());
              Weight lifted = shift_by_roots(rs, l, m, *n);
              if (!dominant(lifted)) continue;
              CAPTURE(ty.name());
              CAPTURE(weight_to_string(nu));
              CHECK(big.mult(lifted) >= mult);
            }
          }
  }
}

TEST_CASE("parts multiplicity monotonicity for end-node deletions") {
  // Deleting the last node of an A-series diagram: constituents of the
  // part product embed with the same root shift into the full product.
  for (int rank : {2, 3}) {
    SimpleType big_t{Family::A, rank};
    SemisimpleAlgebra big_g{{big_t}};
    const auto& big_rs = RootSystem::get(big_t);
    SimpleType small_t{Family::A, rank - 1};
    SemisimpleAlgebra small_g{{small_t}};
    const auto& small_rs = RootSystem::get(small_t);
    auto box = weight_box(rank, 2, /*include_zero=*/true);
    for (const auto& l : box)
      for (const auto& m : box) {
        auto [ga, lp] = part_weight(big_t, l, {rank});
        auto [gb, mp] = part_weight(big_t, m, {rank});
        REQUIRE(ga == small_g);
        REQUIRE(gb == small_g);
        auto small = tensor_decompose(small_g, lp, mp);
        auto big = tensor_decompose(big_g, l, m);
        Weight top(lp.size());
        for (size_t i = 0; i < lp.size(); ++i) top[i] = lp[i] + mp[i];
        for (const auto& [nu, mult] : small.terms) {
          auto n = small_rs.root_coords_of_difference(top, nu);
          REQUIRE(n.has_value());
          std::vector<int> n_big(*n);
          n_big.push_back(0);  // no shift along the deleted node
          Weight lifted = shift_by_roots(big_rs, l, m, n_big);
          if (!dominant(lifted)) continue;
          CHECK(big.mult(lifted) >= mult);
        }
      }
  }
}

TEST_SUITE_END();
