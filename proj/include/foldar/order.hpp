#pragma once

#include <map>
#include <optional>

#include "foldar/arquiver.hpp"

// Sequences of positive roots and the class-uniform bi-lexicographic order:
// m' <_b m along one reduced word when they agree outside an interval and
// drop strictly at both ends; m' precedes m for the class when that holds
// along every member word.

namespace foldar {

// Multiplicity vector over the RootSystem's fixed root order.
using Seq = std::vector<int>;

struct OrderContext {
  CommutationClass cls;
  RootSystem rs;
  ARQuiver ups;
  std::vector<int> vertex_of_root;  // root index -> vertex
  std::vector<int> root_of_vertex;  // vertex -> root index

  explicit OrderContext(const CommutationClass& c);

  int n_roots() const { return rs.size(); }
  bool precedes(int root_a, int root_b) const;  // strict convex order

  Seq empty_seq() const { return Seq(rs.size(), 0); }
  Seq pair_seq(const Root& a, const Root& b) const;
  Seq single_seq(const Root& a) const;
  Root weight(const Seq& m) const;
  int size(const Seq& m) const;
  bool is_pair(const Seq& m) const;

  // memoized per-weight sequence enumerations and pair simplicity
  const std::vector<Seq>& seqs_of(const Root& w) const;
  bool pair_simple(int r1, int r2) const;

 private:
  mutable std::map<Root, std::vector<Seq>> seqs_cache_;
  mutable std::map<std::pair<int, int>, bool> pair_simple_;
};

bool lt_b_word(const OrderContext& ctx, const Seq& m1, const Seq& m2, const Word& member);
// Poset criterion: strict drop at every minimal and every maximal element of
// the disagreement set.
bool prec_b_class(const OrderContext& ctx, const Seq& m1, const Seq& m2);
// Oracle: quantify over all member words (empty optional when more than cap).
std::optional<bool> prec_b_bruteforce(const OrderContext& ctx, const Seq& m1,
                                      const Seq& m2, size_t cap);

std::vector<Seq> sequences_of_weight(const OrderContext& ctx, const Root& w);

bool is_simple(const OrderContext& ctx, const Seq& m);

std::vector<Seq> minimal_sequences(const OrderContext& ctx, const Seq& s);

// Minimal pairs of a non-simple root: pairs (a, b) with a + b = gamma and no
// sequence strictly between (gamma) and the pair.  Each pair is returned with
// a preceding b in the convex order when comparable.
std::vector<std::pair<Root, Root>> minimal_pairs(const OrderContext& ctx, const Root& gamma);

int gdist(const OrderContext& ctx, const Seq& m);
int gdist_pair(const OrderContext& ctx, const Root& a, const Root& b);
int rds(const OrderContext& ctx, const Root& gamma);
// The unique simple equal-weight sequence below the pair; throws
// std::logic_error when several exist (falsifying well-definedness).
std::optional<Seq> socle(const OrderContext& ctx, const Seq& pair);

}  // namespace foldar
