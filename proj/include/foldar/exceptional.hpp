#pragma once

#include "foldar/twist.hpp"

// Appendix enumerations: the twisted adapted point of E6 under the order-two
// automorphism, and the two triply twisted points of D4 under the trialities.

namespace foldar {

Word e6_generator_word();                 // prod_{k=0}^{8} (1 2 6 3)^{k vee}
std::vector<CommutationClass> e6_point();

// Generators prod (2 4)^{k vee} and prod (2 4)^{2k vee} with the central
// node 4 fixed by the triality.
Word d4_generator_word(int sigma_power);
std::pair<std::vector<CommutationClass>, std::vector<CommutationClass>> d4_points();

}  // namespace foldar
