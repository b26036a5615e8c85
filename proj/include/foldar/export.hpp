#pragma once

#include <string>

#include "foldar/folded.hpp"

// DOT and JSON serialization.  Output is deterministic: vertices in word
// order, arrows sorted, residues as DOT ranks, positions as doubled integers
// under the "pos2x" key.

namespace foldar {

std::string to_dot(const ARQuiver& gamma);  // a coordinate quiver such as Gamma_Q
std::string to_dot(const TwistedCoordQuiver& q);
std::string to_dot(const FoldedQuiver& q);
std::string to_json(const TwistedCoordQuiver& q);
std::string to_json(const FoldedQuiver& q);

}  // namespace foldar
