#pragma once

#include <set>
#include <vector>

#include "foldar/roots.hpp"

// Commutation classes of reduced words, kept in Cartier-Foata normal form:
// greedy maximal antichain layers, each layer sorted ascending.  Two classes
// are equal iff their canonical words are equal.

namespace foldar {

// Letters at positions j < k are heap-dependent when their indices are equal
// or adjacent in the diagram.
Word cf_normal_form(const DynkinDiagram& dg, const Word& w);

class CommutationClass {
 public:
  CommutationClass(const DynkinDiagram& dg, const Word& w, bool require_reduced = true);

  const DynkinDiagram& diagram() const { return dg_; }
  const Word& canonical() const { return canon_; }
  int length() const { return static_cast<int>(canon_.size()); }

  bool operator==(const CommutationClass& o) const { return canon_ == o.canon_; }
  bool operator!=(const CommutationClass& o) const { return canon_ != o.canon_; }
  bool operator<(const CommutationClass& o) const { return canon_ < o.canon_; }

  bool contains(const Word& w) const;

  // Indices that can start (sink) or end (source) a member word.
  std::set<int> sinks() const;
  std::set<int> sources() const;

  // A member word starting (resp. ending) with i; throws when impossible.
  Word member_starting_with(int i) const;
  Word member_ending_with(int i) const;

  // All member words, aborting with an empty result if more than cap exist.
  std::vector<Word> member_words(size_t cap) const;
  // Number of member words, saturating at cap.
  size_t count_member_words(size_t cap) const;

 private:
  DynkinDiagram dg_;
  Word canon_;
};

// Right and left reflection functors; identity when i is not a sink/source.
CommutationClass reflect_right(const CommutationClass& c, int i);
CommutationClass reflect_left(const CommutationClass& c, int i);

// Closure of c under reflection functors, sorted by canonical word.
std::vector<CommutationClass> cluster_point(const CommutationClass& c);

struct CoxeterComposition {
  std::vector<int> entries;  // indexed by orbits, smallest representative first
  bool operator==(const CoxeterComposition& o) const { return entries == o.entries; }
  bool constant() const;
  std::string str() const;
};

CoxeterComposition coxeter_composition(const CommutationClass& c,
                                       const DiagramAutomorphism& sigma);

bool is_foldable(const std::vector<CommutationClass>& point,
                 const DiagramAutomorphism& sigma);

Word subword_restrict(const Word& w, const std::set<int>& J);

}  // namespace foldar
