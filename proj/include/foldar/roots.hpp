#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Simply-laced Dynkin diagrams, diagram automorphisms, roots and reduced
// words.  Index sets are 1-based throughout so that words and figures can be
// compared against the standard labelings directly.

namespace foldar {

using Word = std::vector<int>;

struct DynkinDiagram {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  // adj[i] = sorted neighbours of i, entries 1..rank (index 0 unused).
  std::vector<std::vector<int>> adj;

  static DynkinDiagram type_a(int n);
  static DynkinDiagram type_d(int n);
  static DynkinDiagram type_e6();
  static DynkinDiagram custom(char family, int n,
                              const std::vector<std::pair<int, int>>& edges);

  bool adjacent(int i, int j) const;
  void check_index(int i) const;
  std::string name() const { return family + std::to_string(rank); }

  bool operator==(const DynkinDiagram& o) const {
    return family == o.family && rank == o.rank;
  }
};

struct Root {
  std::vector<int> c;  // coefficient of alpha_i at c[i-1]

  explicit Root(int rank = 0) : c(rank, 0) {}
  static Root simple(int rank, int i);

  int rank() const { return static_cast<int>(c.size()); }
  int coeff(int i) const { return c[i - 1]; }
  int& coeff(int i) { return c[i - 1]; }
  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // all coefficients >= 0 and not zero
  bool is_negative() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  bool operator==(const Root& o) const { return c == o.c; }
  bool operator!=(const Root& o) const { return c != o.c; }
  bool operator<(const Root& o) const { return c < o.c; }

  // Segment view [a,b] with root = alpha_a + ... + alpha_b; only meaningful
  // for type A roots.
  std::optional<std::pair<int, int>> segment() const;
  std::string str() const;  // "[a,b]" in type A shape, else coefficient sum
};

// Simply-laced pairing (beta, alpha_i): 2 on the diagonal, -1 on edges.
int pairing_with_simple(const DynkinDiagram& dg, const Root& beta, int i);

// s_i(beta) = beta - (beta, alpha_i) alpha_i
Root reflect(const DynkinDiagram& dg, int i, const Root& beta);

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for k = 1..l
std::vector<Root> roots_of_word(const DynkinDiagram& dg, const Word& w);

bool is_reduced(const DynkinDiagram& dg, const Word& w);

// All positive roots, sorted: type A by segment (a,b), otherwise by
// coefficient vector.  The sort order is the global key for sequences.
struct RootSystem {
  DynkinDiagram dg;
  std::vector<Root> positives;

  explicit RootSystem(const DynkinDiagram& d);
  int size() const { return static_cast<int>(positives.size()); }
  const Root& at(int idx) const { return positives[idx]; }
  int index_of(const Root& r) const;  // -1 if absent
  bool contains(const Root& r) const { return index_of(r) >= 0; }

 private:
  std::map<Root, int> index_;
};

// N = l(w_0): n(n+1)/2 for A_n, n(n-1) for D_n, 36 for E_6.
int longest_length(const DynkinDiagram& dg);

struct DiagramAutomorphism {
  std::vector<int> map;  // map[i-1] = sigma(i)
  int order = 1;

  static DiagramAutomorphism identity(int rank);
  static DiagramAutomorphism vee_a(int rank);       // i -> rank+1-i
  static DiagramAutomorphism vee_d(int rank);       // swap the fork n, n+1
  static DiagramAutomorphism vee_e6();              // 1<->5, 2<->4
  static DiagramAutomorphism d4_triality(int power);  // (1 2 3), 4 fixed

  int apply(int i) const { return map[i - 1]; }
  int rank() const { return static_cast<int>(map.size()); }
  // Orbits sorted by smallest representative; each orbit sorted.
  std::vector<std::vector<int>> orbits() const;
  int orbit_index(int i) const;  // 0-based position in orbits()
  bool preserves(const DynkinDiagram& dg) const;
};

Word apply_automorphism_power(const DiagramAutomorphism& s, int k, const Word& w);

// A Weyl group element as the tuple of images of the simple roots.
struct WeylElement {
  std::vector<Root> images;  // images[i-1] = w(alpha_i)

  static WeylElement identity(const DynkinDiagram& dg);
  static WeylElement from_word(const DynkinDiagram& dg, const Word& w);
  Root apply(const Root& r) const;
  WeylElement then_apply(const DynkinDiagram& dg, int i) const;  // s_i ∘ w
  bool operator==(const WeylElement& o) const { return images == o.images; }
  bool operator<(const WeylElement& o) const { return images < o.images; }
};

// The involution * induced by w_0 (w_0(alpha_i) = -alpha_{i*}).
std::vector<int> longest_involution(const DynkinDiagram& dg);

}  // namespace foldar
