#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "foldar/exceptional.hpp"

using namespace foldar;

TEST_CASE("the E6 twisted adapted point") {
  auto e6 = DynkinDiagram::type_e6();
  REQUIRE(is_reduced(e6, e6_generator_word()));
  auto point = e6_point();
  CHECK(point.size() == 32);
  auto vee = DiagramAutomorphism::vee_e6();
  for (const auto& c : point)
    CHECK(coxeter_composition(c, vee).entries == std::vector<int>{9, 9, 9, 9});
  CHECK(is_foldable(point, vee));
}

TEST_CASE("24 twisted Coxeter elements of E6") {
  auto e6 = DynkinDiagram::type_e6();
  auto vee = DiagramAutomorphism::vee_e6();
  auto els = enumerate_sigma_coxeter(e6, vee);
  CHECK(els.size() == 24);
  // the listed ones all appear (a sample across both tails of the list)
  std::set<WeylElement> got;
  for (const auto& tc : els) got.insert(WeylElement::from_word(e6, tc.word));
  for (const Word& w : std::vector<Word>{{6, 5, 4, 3}, {6, 1, 2, 3}, {5, 4, 3, 6},
                                         {3, 2, 1, 6}, {1, 2, 3, 6}, {6, 3, 5, 4}})
    CHECK(got.count(WeylElement::from_word(e6, w)));
}

TEST_CASE("the two triply twisted points of D4") {
  auto d4 = DynkinDiagram::type_d(4);
  REQUIRE(is_reduced(d4, d4_generator_word(1)));
  REQUIRE(is_reduced(d4, d4_generator_word(2)));
  auto [p1, p2] = d4_points();
  CHECK(p1.size() == 6);
  CHECK(p2.size() == 6);
  std::set<Word> w1, w2;
  for (const auto& c : p1) w1.insert(c.canonical());
  for (const auto& c : p2) w2.insert(c.canonical());
  CHECK(w1 != w2);

  auto vee = DiagramAutomorphism::d4_triality(1);
  for (const auto& c : p1) {
    CHECK(coxeter_composition(c, vee).entries == std::vector<int>{6, 6});
    CHECK(c.count_member_words(10) == 1);  // singleton classes
  }
  for (const auto& c : p2) {
    CHECK(coxeter_composition(c, vee).entries == std::vector<int>{6, 6});
    CHECK(c.count_member_words(10) == 1);
  }
}

TEST_CASE("12 triply twisted Coxeter elements of D4") {
  auto d4 = DynkinDiagram::type_d(4);
  size_t total = 0;
  for (int power : {1, 2}) {
    auto els = enumerate_sigma_coxeter(d4, DiagramAutomorphism::d4_triality(power), power);
    CHECK(els.size() == 6);
    total += els.size();
    std::set<WeylElement> got;
    for (const auto& tc : els) got.insert(WeylElement::from_word(d4, tc.word));
    // the listed elements s_a s_4 and s_4 s_a for a = 1,2,3
    for (const Word& w : std::vector<Word>{{1, 4}, {2, 4}, {3, 4}, {4, 1}, {4, 2}, {4, 3}})
      CHECK(got.count(WeylElement::from_word(d4, w)));
  }
  CHECK(total == 12);
}

TEST_CASE("D4 vee-composition counts letters in triality orbits") {
  // orbits {1,2,3} and {4}: the generator has six letters in each
  Word w = d4_generator_word(1);
  int leaves = 0, center = 0;
  for (int x : w) (x == 4 ? center : leaves) += 1;
  CHECK(leaves == 6);
  CHECK(center == 6);
}
