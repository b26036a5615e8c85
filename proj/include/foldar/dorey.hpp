#pragma once

#include <set>

#include "foldar/poly.hpp"

// Symbolic Dorey triples for U_q'(B^(1)_{n+1}): fundamental-module labels
// read off the folded quiver, never evaluated.  A triple stores the spectral
// ratios (y/z, x/z) of Hom(V(w_j)_y ⊗ V(w_i)_x, V(w_k)_z) as exact
// (sign, q_s-exponent) pairs.

namespace foldar {

struct SpectralLabel {
  int fund;  // folded residue, 1..n+1
  int sign;  // (-1)^fund
  int exp;   // q_s exponent = folded position
};

SpectralLabel v_label(const FoldedQuiver& fq, const Root& beta);

struct SpectralRatio {
  int sign;
  int exp;
  auto operator<=>(const SpectralRatio&) const = default;
};

struct DoreyTriple {
  int i, j, k;  // x-, y-, z- fundamental indices
  SpectralRatio yz, xz;
  auto operator<=>(const DoreyTriple&) const = default;
};

// Triples contributed by every minimal pair of every gamma in one class.
std::set<DoreyTriple> triples_from_minimal_pairs(const OrderContext& ctx,
                                                 const FoldedQuiver& fq);

// The two-clause enumeration of the Dorey condition for B^(1)_{n+1}.
std::set<DoreyTriple> triples_direct(int n);

// true when the triple satisfies exactly one clause pattern
int clause_of(int n, const DoreyTriple& t);  // 1, 2, or 0 for none

// Set equality of the union over the twisted point against triples_direct.
VerifyReport verify_dorey(int n);

// Every V(beta) is reachable from the simple-root labels by iterated
// minimal-pair fusion inside the class.
bool fusion_reachable(const OrderContext& ctx);

}  // namespace foldar
