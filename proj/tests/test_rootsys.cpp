#include <doctest.h>

#include "liesq/rootsys.hpp"

#include <numeric>

using namespace liesq;

namespace {

std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r});
  if (max_rank >= 2) out.push_back({Family::G2, 2});
  if (max_rank >= 4) out.push_back({Family::F4, 4});
  if (max_rank >= 6) out.push_back({Family::E6, 6});
  if (max_rank >= 7) out.push_back({Family::E7, 7});
  if (max_rank >= 8) out.push_back({Family::E8, 8});
  return out;
}

// Every nonzero dominant weight of the given rank with label sum <= max_sum.
std::vector<Weight> weight_box(int rank, int max_sum) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank) {
      if (std::accumulate(w.begin(), w.end(), 0) > 0) out.push_back(w);
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

}  // namespace

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("type parsing and names") {
  auto t = SimpleType::parse("A3");
  REQUIRE(t.has_value());
  CHECK(t->family == Family::A);
  CHECK(t->rank == 3);
  CHECK(t->compact_name() == "su(4)");

  CHECK(SimpleType::parse("su2")->name() == "A1");
  CHECK(SimpleType::parse("so5")->name() == "B2");
  CHECK(SimpleType::parse("so6")->name() == "D3");
  CHECK(SimpleType::parse("so11")->name() == "B5");
  CHECK(SimpleType::parse("sp3")->name() == "C3");
  CHECK(SimpleType::parse("g2")->name() == "G2");
  CHECK(SimpleType::parse("e6")->compact_name() == "e6");

  CHECK_FALSE(SimpleType::parse("so3").has_value());  // use su2
  CHECK_FALSE(SimpleType::parse("so4").has_value());  // not simple
  CHECK_FALSE(SimpleType::parse("B1").has_value());
  CHECK_FALSE(SimpleType::parse("D2").has_value());
  CHECK_FALSE(SimpleType::parse("E9").has_value());
  CHECK_FALSE(SimpleType::parse("H2").has_value());

  auto g = SemisimpleAlgebra::parse("su2+su3");
  REQUIRE(g.has_value());
  CHECK(g->rank() == 3);
  CHECK(g->name() == "su(2)+su(3)");
  CHECK(g->split({1, 2, 0}) == std::vector<Weight>{{1}, {2, 0}});
  CHECK(g->join({{1}, {2, 0}}) == Weight{1, 2, 0});
}

TEST_CASE("Cartan matrices of small types") {
  using M = std::vector<std::vector<int>>;
  CHECK(RootSystem::get({Family::A, 3}).cartan() ==
        M{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  // B3: alpha3 is the short root.
  CHECK(RootSystem::get({Family::B, 3}).cartan() ==
        M{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  // C3: alpha3 is the long root.
  CHECK(RootSystem::get({Family::C, 3}).cartan() ==
        M{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(RootSystem::get({Family::D, 4}).cartan() ==
        M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  // G2: alpha1 short, alpha2 long.
  CHECK(RootSystem::get({Family::G2, 2}).cartan() == M{{2, -1}, {-3, 2}});
  CHECK(RootSystem::get({Family::F4, 4}).cartan() ==
        M{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}

TEST_CASE("half norms distinguish short and long roots") {
  const auto& g2 = RootSystem::get({Family::G2, 2});
  CHECK(g2.half_norms() == std::vector<Rat>{Rat(1, 3), Rat(1)});
  const auto& b3 = RootSystem::get({Family::B, 3});
  CHECK(b3.half_norms() == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2)});
  const auto& c3 = RootSystem::get({Family::C, 3});
  CHECK(c3.half_norms() == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1)});
  const auto& f4 = RootSystem::get({Family::F4, 4});
  CHECK(f4.half_norms() == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2), Rat(1, 2)});
  const auto& a3 = RootSystem::get({Family::A, 3});
  CHECK(a3.half_norms() == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("positive root counts") {
  auto count = [](SimpleType t) {
    return static_cast<int>(RootSystem::get(t).positive_roots().size());
  };
  CHECK(count({Family::A, 4}) == 10);
  CHECK(count({Family::B, 4}) == 16);
  CHECK(count({Family::C, 4}) == 16);
  CHECK(count({Family::D, 4}) == 12);
  CHECK(count({Family::G2, 2}) == 6);
  CHECK(count({Family::F4, 4}) == 24);
  CHECK(count({Family::E6, 6}) == 36);
  CHECK(count({Family::E7, 7}) == 63);
  CHECK(count({Family::E8, 8}) == 120);
}

TEST_CASE("adjoint dimension equals rank plus number of roots") {
  for (auto t : all_types(8)) {
    const auto& rs = RootSystem::get(t);
    Int adj = rs.weyl_dim(rs.highest_root());
    CHECK(adj == Int(t.rank + 2 * static_cast<int>(rs.positive_roots().size())));
  }
}

TEST_CASE("Weyl dimension spot values") {
  auto dim = [](const char* t, Weight w) {
    return RootSystem::get(*SimpleType::parse(t)).weyl_dim(w);
  };
  CHECK(dim("A1", {7}) == 8);
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("A2", {3, 0}) == 10);
  CHECK(dim("A2", {2, 2}) == 27);
  CHECK(dim("B3", {0, 0, 1}) == 8);    // spinor
  CHECK(dim("B3", {1, 0, 0}) == 7);    // vector
  CHECK(dim("D5", {0, 0, 0, 0, 1}) == 16);  // half-spinor
  CHECK(dim("C3", {1, 0, 0}) == 6);
  CHECK(dim("C3", {0, 0, 1}) == 14);
  CHECK(dim("G2", {1, 0}) == 7);
  CHECK(dim("G2", {0, 1}) == 14);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
  CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
}

TEST_CASE("Freudenthal multiplicities sum to the Weyl dimension") {
  for (auto t : all_types(4)) {
    const auto& rs = RootSystem::get(t);
    for (const auto& w : weight_box(t.rank, 2)) {
      Int total = 0;
      for (const auto& [mu, m] : rs.weight_system(w)) {
        CHECK(m > 0);
        total += m;
        (void)mu;
      }
      CHECK(total == rs.weyl_dim(w));
    }
  }
}

TEST_CASE("dominant weight multiplicities of the su(3) adjoint") {
  const auto& rs = RootSystem::get({Family::A, 2});
  const auto& dom = rs.dominant_weights({1, 1});
  REQUIRE(dom.size() == 2);
  CHECK(dom.at({1, 1}) == 1);
  CHECK(dom.at({0, 0}) == 2);
}

TEST_CASE("dominant_conjugate and dominant_reduce") {
  const auto& a2 = RootSystem::get({Family::A, 2});
  // Already dominant: fixed.
  CHECK(a2.dominant_conjugate({2, 1}) == Weight{2, 1});
  // Lowest weight of the (2,1) irrep is -(1,2) reversed under w0.
  CHECK(a2.dominant_conjugate({-1, -2}) == Weight{2, 1});
  // Weyl invariance of the inner product.
  Weight v{-3, 2};
  Weight d = a2.dominant_conjugate(v);
  CHECK(a2.inner(v, v) == a2.inner(d, d));

  auto [mu, sign] = a2.dominant_reduce({2, 1});
  CHECK(mu == Weight{2, 1});
  CHECK(sign == 1);
  // v + rho on a chamber wall: sign 0.
  const auto& a1 = RootSystem::get({Family::A, 1});
  CHECK(a1.dominant_reduce({-1}).second == 0);
  // s_1(v + rho) = v' + rho: reflection flips the sign.
  auto [mu2, sign2] = a1.dominant_reduce({-3});
  CHECK(mu2 == Weight{1});
  CHECK(sign2 == -1);
}

TEST_CASE("simple reflections are involutive isometries") {
  for (auto t : all_types(4)) {
    const auto& rs = RootSystem::get(t);
    Weight v(t.rank);
    for (int i = 0; i < t.rank; ++i) v[i] = (i * 7 + 3) % 5 - 2;
    for (int a = 0; a < t.rank; ++a) {
      Weight r = rs.simple_reflection(v, a);
      CHECK(rs.simple_reflection(r, a) == v);
      CHECK(rs.inner(r, r) == rs.inner(v, v));
    }
  }
}

TEST_CASE("root order predicates") {
  const auto& a2 = RootSystem::get({Family::A, 2});
  // (1,1) - (0,0) = alpha1 + alpha2.
  CHECK(a2.below({1, 1}, {0, 0}));
  auto coords = a2.root_coords_of_difference({1, 1}, {0, 0});
  REQUIRE(coords.has_value());
  CHECK(*coords == std::vector<int>{1, 1});
  CHECK_FALSE(a2.below({1, 0}, {0, 1}));
  CHECK_FALSE(a2.root_coords_of_difference({1, 0}, {0, 1}).has_value());
}

TEST_CASE("weight string round trip") {
  CHECK(weight_to_string({1, 0, 2}) == "(1,0,2)");
  CHECK(weight_from_string("1,0,2") == Weight{1, 0, 2});
  CHECK(weight_from_string("(1,0,2)") == Weight{1, 0, 2});
  CHECK_FALSE(weight_from_string("1,,2").has_value());
  CHECK_FALSE(weight_from_string("a").has_value());
}

TEST_SUITE_END();
