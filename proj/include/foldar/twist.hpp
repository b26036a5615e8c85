#pragma once

#include "foldar/arquiver.hpp"

// The twisted adapted cluster point of A_{2n+1}: twisted Coxeter elements,
// the surgery maps P and R, twisted AR-quiver coordinates, vertex
// classification, labels, twisted additivity and the twisted reflection
// functor.

namespace foldar {

struct TwistedCoxeterElement {
  Word word;       // one reflection per orbit, canonical form of its class
  int sigma_power; // the trailing automorphism power (1 unless D4's vee^2)
};

// All sigma-Coxeter elements for the diagram: one simple reflection per
// sigma-orbit in every order, deduplicated as Weyl group elements.
std::vector<TwistedCoxeterElement> enumerate_sigma_coxeter(
    const DynkinDiagram& dg, const DiagramAutomorphism& sigma, int sigma_power = 1);

std::vector<TwistedCoxeterElement> enumerate_twisted_coxeter(int n);  // A_{2n+1}

// i_0 = prod_{k=0}^{2n} (1 2 ... n+1)^{k vee}
Word twisted_generator_word(int n);

// prod_k (w)^{k sigma} over longest_length/|w| blocks; must come out reduced.
CommutationClass class_from_twisted_coxeter(const DynkinDiagram& dg,
                                            const DiagramAutomorphism& sigma,
                                            const TwistedCoxeterElement& tc);

std::vector<CommutationClass> twisted_cluster_point(int n);

// Letterwise surgery A_{2n+1} -> A_{2n}: keep i <= n, drop n+1, shift the rest.
Word P_word(const Word& w, int n);
CommutationClass surgery_P(const CommutationClass& c);

// '<' tags the class with n+1 as a source, '>' the one with n+1 as a sink.
enum class Side { source, sink };
inline char side_char(Side s) { return s == Side::source ? '<' : '>'; }

struct TwistedClass {
  CommutationClass cls;
  Side side;
  DynkinQuiver parent;  // the A_{2n} quiver P([i0]) is adapted to
  int n;

  static TwistedClass from_class(const CommutationClass& c);
};

CommutationClass surgery_R_class(const DynkinQuiver& q, Side side);
TwistedClass surgery_R(const DynkinQuiver& q, Side side);

enum class VertexKind { central_induced, central_star, ne, se, nw, sw };
std::string kind_name(VertexKind k);

struct TwistedCoordQuiver {
  int n;
  TwistedClass tcls;
  ARQuiver ups;               // coordinates attached, positions doubled
  std::vector<bool> induced;  // residue != n+1
  std::vector<VertexKind> kind;

  explicit TwistedCoordQuiver(const TwistedClass& t) : n(t.n), tcls(t) {}
  int size() const { return ups.size(); }
};

// Coordinates via the surgery: induced vertices inherit Gamma_Q positions,
// the residue-(n+1) vertices sit half a step off their neighbours.  Runs the
// sectional labeling as a cross-check and throws on any mismatch.
TwistedCoordQuiver assign_coordinates(const TwistedClass& tc);

// Labels recovered from the sectional structure alone (plus the root system
// on the residue-(n+1) vertices).
std::vector<Root> label_twisted_by_sections(const TwistedCoordQuiver& q);

int multiplicity(const Root& gamma);
int folded_multiplicity(const Root& gamma, const DiagramAutomorphism& sigma);

bool check_twisted_additive(const TwistedCoordQuiver& q);

// Algorithm (A1)-(A3) with h = 2n+1; equals a fresh build of the reflected
// class up to the global frame shift.
CoordView reflect_twisted(const TwistedCoordQuiver& q, int i);

// |a_i - b_i| = 1 for all i, with a/b counted between i and i-vee.
bool char_condition(const DynkinQuiver& q);
long count_char_quivers(int n);  // A_{2n} quivers satisfying the condition

}  // namespace foldar
