#pragma once

#include "foldar/folded.hpp"

// Distance polynomials over Gamma_Q, folded distance polynomials over the
// folded quivers, and the exact denominator formulas they reproduce.  All
// polynomials are kept as factor multisets (z - sign * q_s^exp); q = q_s^2.

namespace foldar {

struct QsFactorPoly {
  // (sign, exponent) sorted; sign is +1 or -1
  std::vector<std::pair<int, int>> factors;

  void add(int sign, int exp, int mult = 1);
  QsFactorPoly times(const QsFactorPoly& o) const;
  bool operator==(const QsFactorPoly& o) const { return factors == o.factors; }
  std::string str() const;
};

// gdist of the comparable pairs at residues (k,l) with position gap t in
// Gamma_Q (single units, not doubled); asserts the shared-value lemma, 0 when empty.
int o_t_adapted(const OrderContext& ctx, const ARQuiver& gamma, int k, int l, int t);

// Distance profiles t -> o_t, occupied gaps only.
std::map<int, int> distance_profile_adapted(const OrderContext& ctx,
                                            const ARQuiver& gamma, int k, int l);
std::map<int, int> distance_profile_folded(const OrderContext& ctx,
                                           const FoldedQuiver& fq, int kbar, int lbar);

QsFactorPoly dist_poly_adapted_for(const DynkinQuiver& q, int k, int l);
QsFactorPoly dist_poly_adapted(int n2, int k, int l);  // type A_{n2}, default quiver

// gdist of comparable pairs at folded residues with folded position gap t.
int o_t_folded(const OrderContext& ctx, const FoldedQuiver& fq, int kbar, int lbar, int t);

QsFactorPoly folded_dist_poly_for(const OrderContext& ctx, const FoldedQuiver& fq,
                                  int kbar, int lbar);
QsFactorPoly folded_dist_poly(int n, int kbar, int lbar);  // from one class

QsFactorPoly denom_A(int k, int l, int n);   // A^{(1)}_{2n}
QsFactorPoly denom_B(int k, int l, int n);   // B^{(1)}_{n+1}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;
  void fail(const std::string& s) {
    ok = false;
    lines.push_back("FALSIFIED: " + s);
  }
  void note(const std::string& s) { lines.push_back(s); }
};

// D_{k,l} (z + q^{h})^{delta_{l,k*}} = d^{A(1)_{2n}}_{k,l} over every quiver.
VerifyReport verify_dist_denom_A(int n);
// Dhat_{k,l} (z - q^{h})^{delta_{k,l}} = d^{B(1)_{n+1}}_{k,l}, all classes equal.
VerifyReport verify_dist_denom_B(int n);
// d^B_{k,l} / (z - q^h)^{delta} = D_{k,l} D_{k,l*} for 1 <= k,l <= n.
VerifyReport verify_interpretation(int n);

}  // namespace foldar
