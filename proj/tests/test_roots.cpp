#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldar/roots.hpp"

using namespace foldar;

namespace {

Root seg(int rank, int a, int b) {
  Root r(rank);
  for (int i = a; i <= b; ++i) r.coeff(i) = 1;
  return r;
}

}  // namespace

TEST_CASE("simple reflections on A2") {
  auto a2 = DynkinDiagram::type_a(2);
  CHECK(reflect(a2, 1, Root::simple(2, 1)) == -Root::simple(2, 1));
  CHECK(reflect(a2, 1, Root::simple(2, 2)) == seg(2, 1, 2));
  // involution
  auto b = seg(2, 1, 2);
  CHECK(reflect(a2, 2, reflect(a2, 2, b)) == b);
}

TEST_CASE("segment arithmetic for s_3 on A5") {
  auto a5 = DynkinDiagram::type_a(5);
  CHECK(reflect(a5, 3, seg(5, 2, 3)) == seg(5, 2, 2));
}

TEST_CASE("roots_of_word on A2") {
  auto a2 = DynkinDiagram::type_a(2);
  auto rs = roots_of_word(a2, {1, 2, 1});
  REQUIRE(rs.size() == 3);
  CHECK(rs[0] == Root::simple(2, 1));
  CHECK(rs[1] == seg(2, 1, 2));
  CHECK(rs[2] == Root::simple(2, 2));

  auto bad = roots_of_word(a2, {1, 1});
  CHECK(bad[1] == -Root::simple(2, 1));
  CHECK(is_reduced(a2, {1, 2, 1}));
  CHECK_FALSE(is_reduced(a2, {1, 1}));
}

TEST_CASE("the 15-letter A5 word is reduced with 15 distinct positive roots") {
  auto a5 = DynkinDiagram::type_a(5);
  Word w{1, 2, 3, 5, 4, 3, 1, 2, 3, 5, 4, 3, 1, 2, 3};
  CHECK(is_reduced(a5, w));
  auto rs = roots_of_word(a5, w);
  std::set<Root> distinct(rs.begin(), rs.end());
  CHECK(distinct.size() == 15);
  for (const auto& r : rs) CHECK(r.is_positive());
}

TEST_CASE("longest lengths and root system sizes agree") {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    auto d = DynkinDiagram::type_a(n);
    CHECK(longest_length(d) == n * (n + 1) / 2);
    CHECK(RootSystem(d).size() == longest_length(d));
  }
  auto d4 = DynkinDiagram::type_d(4);
  CHECK(longest_length(d4) == 12);
  CHECK(RootSystem(d4).size() == 12);
  auto e6 = DynkinDiagram::type_e6();
  CHECK(longest_length(e6) == 36);
  CHECK(RootSystem(e6).size() == 36);
}

TEST_CASE("automorphism powers act letterwise") {
  auto vee5 = DiagramAutomorphism::vee_a(5);
  CHECK(apply_automorphism_power(vee5, 1, {1, 2, 3}) == Word{5, 4, 3});
  CHECK(apply_automorphism_power(vee5, 0, {1, 2, 3}) == Word{1, 2, 3});
  auto tri = DiagramAutomorphism::d4_triality(1);
  CHECK(apply_automorphism_power(tri, 2, {2, 1}) == Word{1, 3});
}

TEST_CASE("automorphisms preserve the diagrams") {
  CHECK(DiagramAutomorphism::vee_a(5).preserves(DynkinDiagram::type_a(5)));
  CHECK(DiagramAutomorphism::vee_a(7).preserves(DynkinDiagram::type_a(7)));
  CHECK(DiagramAutomorphism::vee_e6().preserves(DynkinDiagram::type_e6()));
  CHECK(DiagramAutomorphism::d4_triality(1).preserves(DynkinDiagram::type_d(4)));
  CHECK(DiagramAutomorphism::vee_d(5).preserves(DynkinDiagram::type_d(5)));
}

TEST_CASE("orbit layout of vee on A_{2n+1}") {
  auto vee = DiagramAutomorphism::vee_a(7);
  auto orbs = vee.orbits();
  REQUIRE(orbs.size() == 4);
  CHECK(orbs[0] == std::vector<int>{1, 7});
  CHECK(orbs[3] == std::vector<int>{4});
}

TEST_CASE("generator word of the twisted point is reduced of full length") {
  for (int n : {1, 2, 3}) {
    int rank = 2 * n + 1;
    auto dg = DynkinDiagram::type_a(rank);
    auto vee = DiagramAutomorphism::vee_a(rank);
    Word block;
    for (int i = 1; i <= n + 1; ++i) block.push_back(i);
    Word w;
    for (int k = 0; k <= 2 * n; ++k) {
      Word b = apply_automorphism_power(vee, k, block);
      w.insert(w.end(), b.begin(), b.end());
    }
    CHECK(static_cast<int>(w.size()) == (2 * n + 1) * (n + 1));
    CHECK(static_cast<int>(w.size()) == longest_length(dg));
    CHECK(is_reduced(dg, w));
  }
}

TEST_CASE("longest involution matches the action of an explicit w0 word") {
  // Build a reduced word of w_0 from the generator pattern where available
  // and check w_0(alpha_i) = -alpha_{i*}.
  auto check = [](const DynkinDiagram& dg, const Word& w0) {
    REQUIRE(is_reduced(dg, w0));
    REQUIRE(static_cast<int>(w0.size()) == longest_length(dg));
    auto el = WeylElement::from_word(dg, w0);
    auto star = longest_involution(dg);
    for (int i = 1; i <= dg.rank; ++i)
      CHECK(el.apply(Root::simple(dg.rank, i)) == -Root::simple(dg.rank, star[i]));
  };
  check(DynkinDiagram::type_a(5), {1, 2, 3, 5, 4, 3, 1, 2, 3, 5, 4, 3, 1, 2, 3});
  check(DynkinDiagram::type_a(3), {1, 2, 3, 1, 2, 1});
  // D4 with central node 4
  check(DynkinDiagram::type_d(4), {1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});
  // E6: the appendix generator word
  {
    auto e6 = DynkinDiagram::type_e6();
    auto vee = DiagramAutomorphism::vee_e6();
    Word w;
    for (int k = 0; k <= 8; ++k) {
      Word b = apply_automorphism_power(vee, k, {1, 2, 6, 3});
      w.insert(w.end(), b.begin(), b.end());
    }
    check(e6, w);
  }
}

TEST_CASE("reduced words have as many distinct positive roots as letters") {
  auto a3 = DynkinDiagram::type_a(3);
  Word w{1, 2, 3, 1, 2, 1};
  auto rs = roots_of_word(a3, w);
  std::set<Root> s(rs.begin(), rs.end());
  CHECK(s.size() == w.size());
}
