#pragma once

#include "foldar/order.hpp"
#include "foldar/twist.hpp"

// Folded AR-quivers: residues collapse to the vee-orbits 1..n+1 and the
// position of a vertex is its doubled twisted position, which the parity of
// the twisted coordinates keeps collision-free.

namespace foldar {

struct FoldedQuiver {
  TwistedCoordQuiver twisted;
  std::vector<int> fres;  // folded residue per vertex

  explicit FoldedQuiver(const TwistedCoordQuiver& t) : twisted(t) {}
  int n() const { return twisted.n; }
  int size() const { return twisted.size(); }
  int fpos(int v) const { return twisted.ups.pos2[v]; }
  const Root& label(int v) const { return twisted.ups.labels[v]; }
  int vertex_at(int fr, int p) const;
  int vertex_of_label(const Root& r) const { return twisted.ups.vertex_of_label(r); }
  std::pair<int, int> coord_of(const Root& r) const;  // (fres, fpos)
};

FoldedQuiver fold(const TwistedCoordQuiver& q);

// The root at (fres, fpos -+ 4k) when present.
std::optional<Root> hat_shift(const FoldedQuiver& q, const Root& beta, int k);

// Simple roots live on the boundary; all sinks and sources are simple.
bool boundary_simple_check(const FoldedQuiver& q);

CoordView folded_view(const FoldedQuiver& q);
// Fold a twisted-coordinate view (for the fold/reflect commutation square).
CoordView fold_view(const CoordView& v, int n);

// Algorithm (A1)-(A3) in folded coordinates: offset d * h = 2(2n+1), arrow
// steps min(d_i, d_j).
CoordView folded_reflect(const FoldedQuiver& q, int i);

// alpha at (i, 2p - 2^{|orbit|}), beta at (i, 2p): their sum equals the sum
// over the mid-position vertices lying on directed paths from alpha to beta.
bool folded_additive_check(const FoldedQuiver& q);

// Coordinate characterization of the minimal pairs of gamma: returns the
// (alpha, beta) vertex pairs whose folded coordinates satisfy the clause
// table; alpha is the order-smaller member (larger position).
struct FoldedCoord {
  int res;
  int pos;
  bool operator==(const FoldedCoord& o) const { return res == o.res && pos == o.pos; }
  bool operator<(const FoldedCoord& o) const {
    return std::tie(res, pos) < std::tie(o.res, o.pos);
  }
};

bool minimal_pair_clause(int n, FoldedCoord alpha, FoldedCoord beta, FoldedCoord gamma);
std::vector<std::pair<FoldedCoord, FoldedCoord>> minimal_pair_coordinate_class(
    const FoldedQuiver& q, const Root& gamma);

}  // namespace foldar
