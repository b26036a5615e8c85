#include "foldar/exceptional.hpp"

namespace foldar {

Word e6_generator_word() {
  auto vee = DiagramAutomorphism::vee_e6();
  Word w;
  for (int k = 0; k <= 8; ++k) {
    Word b = apply_automorphism_power(vee, k, {1, 2, 6, 3});
    w.insert(w.end(), b.begin(), b.end());
  }
  return w;
}

std::vector<CommutationClass> e6_point() {
  auto e6 = DynkinDiagram::type_e6();
  return cluster_point(CommutationClass(e6, e6_generator_word()));
}

Word d4_generator_word(int sigma_power) {
  auto vee = DiagramAutomorphism::d4_triality(1);
  Word w;
  for (int k = 0; k <= 5; ++k) {
    Word b = apply_automorphism_power(vee, k * sigma_power, {2, 4});
    w.insert(w.end(), b.begin(), b.end());
  }
  return w;
}

std::pair<std::vector<CommutationClass>, std::vector<CommutationClass>> d4_points() {
  auto d4 = DynkinDiagram::type_d(4);
  auto first = cluster_point(CommutationClass(d4, d4_generator_word(1)));
  auto second = cluster_point(CommutationClass(d4, d4_generator_word(2)));
  return {first, second};
}

}  // namespace foldar
