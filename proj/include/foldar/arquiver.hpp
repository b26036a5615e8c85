#pragma once

#include <map>
#include <tuple>

#include "foldar/words.hpp"

// Combinatorial AR-quivers for commutation classes of w_0, Dynkin quivers
// and their adapted classes, and the coordinate quiver Gamma_Q.
//
// Positions are stored doubled ("pos2"): the coordinate (i, p) of the
// literature becomes (i, 2p), so the half-integer positions appearing in the
// twisted quivers stay integral.

namespace foldar {

struct DynkinQuiver {
  DynkinDiagram dg;
  // key (u,v) with u < v; value +1 for u -> v, -1 for v -> u
  std::map<std::pair<int, int>, int> orient;

  DynkinQuiver() = default;
  DynkinQuiver(const DynkinDiagram& d, const std::map<std::pair<int, int>, int>& o)
      : dg(d), orient(o) {}

  // Type A only: s[k] is '>' for k -> k+1 and '<' for k <- k+1.
  static DynkinQuiver from_orientation_string(const DynkinDiagram& d,
                                              const std::string& s);
  std::string orientation_string() const;

  bool has_arrow(int from, int to) const;
  bool is_sink(int i) const;
  bool is_source(int i) const;
  std::vector<int> sinks() const;
  DynkinQuiver flipped(int i) const;  // reverse arrows at a sink/source
  DynkinQuiver reversed() const;

  bool operator==(const DynkinQuiver& o) const { return orient == o.orient; }
  bool operator<(const DynkinQuiver& o) const { return orient < o.orient; }
};

std::vector<DynkinQuiver> all_quivers(const DynkinDiagram& dg);

// Number of arrows between i and i^* directed toward i (a) resp. i^* (b),
// along the tree path; r_i = (h_dual + a - b)/2 vertices of Gamma_Q live on
// residue i.
struct ResidueCount {
  int toward_i = 0;
  int toward_star = 0;
};
ResidueCount arrows_between(const DynkinQuiver& q, int i, int istar);
int dual_coxeter_number(const DynkinDiagram& dg);
int gamma_residue_count(const DynkinQuiver& q, int i);

Word adapted_word(const DynkinQuiver& q);           // sink elimination, ascending
Word coxeter_element_word(const DynkinQuiver& q);   // first pass of the above
CommutationClass adapted_class(const DynkinQuiver& q);
bool is_adapted(const Word& w, const DynkinQuiver& q);
// The unique quiver a class is adapted to; throws std::invalid_argument if none.
DynkinQuiver quiver_of_adapted_class(const CommutationClass& c);

// Height function with xi(1) = 0; xi(j) = xi(i) + 1 for arrows i -> j.
std::map<int, int> height_function(const DynkinQuiver& q);

struct ARQuiver {
  DynkinDiagram dg;
  Word word;                 // defining word; vertex k is the k-th letter
  std::vector<Root> labels;  // beta_k
  std::vector<std::pair<int, int>> arrows;  // (k, j): beta_k -> beta_j, j < k
  // arrow colors -(alpha_{i_j}, alpha_{i_k}); identically 1 while the source
  // diagrams stay simply laced, kept so the export schema will not move
  std::vector<int> arrow_color;
  std::vector<int> pos2;     // doubled positions; empty when unassigned

  int size() const { return static_cast<int>(word.size()); }
  int residue(int k) const { return word[k]; }
  bool has_coords() const { return !pos2.empty(); }

  int vertex_of_label(const Root& r) const;  // -1 if absent
  int vertex_at(int res, int p2) const;      // -1 if absent
  // Unique sectional neighbours or -1: arrows ascend positions, "up" lowers
  // the residue by one, "down" raises it.
  std::vector<int> up_next, up_prev, down_next, down_prev;
  void build_navigation();

  // path from beta_b to beta_a exists (i.e. label a precedes label b)
  bool reaches(int from, int to) const;
  mutable std::vector<std::vector<bool>> reach_;
  void build_reach() const;
};

ARQuiver build_upsilon(const CommutationClass& c);

// a < b in the convex partial order of the class (strict).
bool convex_precedes(const ARQuiver& ups, const Root& a, const Root& b);

// Gamma_Q: the adapted class's quiver with coordinates.
ARQuiver gamma_q(const DynkinQuiver& q);

// beta + phi(beta) = sum of the labels one half-step earlier (eq. additive).
bool check_additive(const ARQuiver& gamma);

// A coordinate quiver in comparison form: vertex triples sorted, arrows by
// vertex index.  normalized() shifts positions so they start at zero, which
// is the equality notion used for reflection round-trips (the reflection
// functor keeps the old frame while a fresh build re-anchors xi(1) = 0).
struct CoordView {
  std::vector<std::tuple<int, int, Root>> verts;  // (residue, pos2, label)
  std::vector<std::pair<int, int>> arrows;

  static CoordView of(const ARQuiver& q);
  CoordView normalized() const;
  bool operator==(const CoordView& o) const {
    return verts == o.verts && arrows == o.arrows;
  }
};

// Algorithm (A1)-(A3) on Gamma_Q at a sink i of [Q].
CoordView reflect_gamma(const ARQuiver& gamma, int i);

struct SectionalPath {
  bool north = true;          // upward arrows
  std::vector<int> vertices;  // along the arrows
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

std::vector<SectionalPath> sectional_paths(const ARQuiver& q);
SectionalPath n_path_through(const ARQuiver& q, int v);
SectionalPath s_path_through(const ARQuiver& q, int v);

// Labels of Gamma_Q (type A) recovered from sectional structure alone.
std::vector<Root> labels_by_sections_gamma(const ARQuiver& gamma);

}  // namespace foldar
