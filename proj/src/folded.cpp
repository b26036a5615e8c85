#include "foldar/folded.hpp"

#include <algorithm>
#include <set>

namespace foldar {

int FoldedQuiver::vertex_at(int fr, int p) const {
  for (int v = 0; v < size(); ++v)
    if (fres[v] == fr && fpos(v) == p) return v;
  return -1;
}

std::pair<int, int> FoldedQuiver::coord_of(const Root& r) const {
  int v = vertex_of_label(r);
  if (v < 0) throw std::invalid_argument("coord_of: label absent");
  return {fres[v], fpos(v)};
}

FoldedQuiver fold(const TwistedCoordQuiver& q) {
  FoldedQuiver f(q);
  int rank = 2 * q.n + 1;
  f.fres.resize(q.size());
  std::set<std::pair<int, int>> seen;
  for (int v = 0; v < q.size(); ++v) {
    int i = q.ups.residue(v);
    f.fres[v] = std::min(i, rank + 1 - i);
    if (!seen.insert({f.fres[v], f.fpos(v)}).second)
      throw std::logic_error("fold: folded coordinates collide");
  }
  return f;
}

std::optional<Root> hat_shift(const FoldedQuiver& q, const Root& beta, int k) {
  auto [fr, p] = q.coord_of(beta);
  int v = q.vertex_at(fr, p - 4 * k);
  if (v < 0) return std::nullopt;
  return q.label(v);
}

bool boundary_simple_check(const FoldedQuiver& q) {
  int rank = 2 * q.n() + 1;
  std::vector<bool> has_in(q.size(), false), has_out(q.size(), false);
  for (auto [k, j] : q.twisted.ups.arrows) {
    has_out[k] = true;
    has_in[j] = true;
  }
  for (int i = 1; i <= rank; ++i) {
    int v = q.vertex_of_label(Root::simple(rank, i));
    if (v < 0) return false;
    bool sink_or_source = !has_in[v] || !has_out[v];
    bool boundary_residue = q.fres[v] == 1 || q.fres[v] == q.n() + 1;
    if (!sink_or_source && !boundary_residue) return false;
  }
  for (int v = 0; v < q.size(); ++v)
    if (!has_in[v] || !has_out[v])
      if (q.label(v).height() != 1) return false;
  return true;
}

CoordView folded_view(const FoldedQuiver& q) {
  CoordView view;
  for (int v = 0; v < q.size(); ++v)
    view.verts.emplace_back(q.fres[v], q.fpos(v), q.label(v));
  std::vector<int> order(q.size());
  for (int v = 0; v < q.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tuple(q.fres[a], q.fpos(a)) < std::tuple(q.fres[b], q.fpos(b));
  });
  std::vector<int> rank_of(q.size());
  for (int v = 0; v < q.size(); ++v) rank_of[order[v]] = v;
  std::sort(view.verts.begin(), view.verts.end());
  for (auto [k, j] : q.twisted.ups.arrows)
    view.arrows.emplace_back(rank_of[k], rank_of[j]);
  std::sort(view.arrows.begin(), view.arrows.end());
  return view;
}

CoordView fold_view(const CoordView& v, int n) {
  int rank = 2 * n + 1;
  CoordView out;
  std::vector<std::tuple<int, int, Root>> mapped;
  for (const auto& [res, p2, label] : v.verts)
    mapped.emplace_back(std::min(res, rank + 1 - res), p2, label);
  std::vector<int> order(mapped.size());
  for (size_t k = 0; k < mapped.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return mapped[a] < mapped[b]; });
  std::vector<int> rank_of(mapped.size());
  for (size_t k = 0; k < mapped.size(); ++k) rank_of[order[k]] = static_cast<int>(k);
  out.verts = mapped;
  std::sort(out.verts.begin(), out.verts.end());
  for (auto [a, b] : v.arrows) out.arrows.emplace_back(rank_of[a], rank_of[b]);
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

CoordView folded_reflect(const FoldedQuiver& q, int i) {
  if (!q.twisted.tcls.cls.sinks().count(i))
    throw std::invalid_argument("folded_reflect: index is not a sink of the class");
  int n = q.n();
  int rank = 2 * n + 1;
  int offset = 2 * (2 * n + 1);  // d-bar times the dual Coxeter number
  Root alpha = Root::simple(rank, i);
  int removed = q.vertex_of_label(alpha);
  auto dg_full = q.twisted.ups.dg;

  CoordView view;
  for (int v = 0; v < q.size(); ++v) {
    if (v == removed) continue;
    view.verts.emplace_back(q.fres[v], q.fpos(v), reflect(dg_full, i, q.label(v)));
  }
  int fr = std::min(i, rank + 1 - i);  // * is the identity on the folded set
  int newp = q.fpos(removed) - offset;
  view.verts.emplace_back(fr, newp, alpha);
  std::sort(view.verts.begin(), view.verts.end());

  auto index_at = [&](int res, int p) {
    for (size_t k = 0; k < view.verts.size(); ++k)
      if (std::get<0>(view.verts[k]) == res && std::get<1>(view.verts[k]) == p)
        return static_cast<int>(k);
    return -1;
  };
  for (auto [k, j] : q.twisted.ups.arrows) {
    if (k == removed || j == removed) continue;
    view.arrows.emplace_back(index_at(q.fres[k], q.fpos(k)),
                             index_at(q.fres[j], q.fpos(j)));
  }
  auto d = [n](int res) { return res == n + 1 ? 1 : 2; };
  int from = index_at(fr, newp);
  for (int jf = std::max(1, fr - 1); jf <= std::min(n + 1, fr + 1); ++jf) {
    if (jf == fr) continue;
    int to = index_at(jf, newp + std::min(d(fr), d(jf)));
    if (to >= 0) view.arrows.emplace_back(from, to);
  }
  std::sort(view.arrows.begin(), view.arrows.end());
  return view;
}

bool folded_additive_check(const FoldedQuiver& q) {
  int n = q.n();
  int rank = 2 * n + 1;
  const auto& ups = q.twisted.ups;
  for (int vb = 0; vb < q.size(); ++vb) {
    int i = q.fres[vb];
    int P = q.fpos(vb);
    int off = (i == n + 1) ? 2 : 4;  // 2^{|orbit|}
    int va = q.vertex_at(i, P - off);
    if (va < 0) continue;
    Root sum(rank);
    for (int v = 0; v < q.size(); ++v) {
      if (q.fpos(v) != P - off / 2) continue;
      if (ups.reaches(va, v) && ups.reaches(v, vb)) sum = sum + q.label(v);
    }
    if (q.label(va) + q.label(vb) != sum) return false;
  }
  return true;
}

bool minimal_pair_clause(int n, FoldedCoord a, FoldedCoord b, FoldedCoord g) {
  int i = a.res, p = a.pos;
  int j = b.res, q = b.pos;
  int k = g.res, r = g.pos;
  // clause (i): all residues in the short range
  int ell = std::max({i, j, k});
  if (ell <= n && i + j + k == 2 * ell) {
    int dq = q - r, dp = p - r;
    if (dq % 2 == 0 && dp % 2 == 0) {
      int hq = dq / 2, hp = dp / 2;
      if (ell == k && hq == -i && hp == j) return true;
      if (ell == i && hq == i - (2 * n + 1) && hp == j) return true;
      if (ell == j && hq == -i && hp == 2 * n + 1 - j) return true;
    }
  }
  // clause (ii): two of the residues are n+1.  Tables in circulation carry a
  // residue off-by-one in this clause; the offsets below are the ones that
  // brute-force minimal pairs realize on the quivers, at every n checked.
  int s = std::min({i, j, k});
  if (s <= n) {
    int others_fixed = 0;
    if (s == k && i == n + 1 && j == n + 1) others_fixed = 1;
    if (s == i && j == n + 1 && k == n + 1) others_fixed = 2;
    if (s == j && i == n + 1 && k == n + 1) others_fixed = 3;
    int dq = q - r, dp = p - r;
    if (others_fixed == 1 && dq == -2 * (n - k) - 1 && dp == 2 * (n - k) + 1) return true;
    if (others_fixed == 2 && dq == -4 * i && dp == 2 * (n - i) + 1) return true;
    if (others_fixed == 3 && dq == -2 * (n - j) - 1 && dp == 4 * j) return true;
  }
  return false;
}

std::vector<std::pair<FoldedCoord, FoldedCoord>> minimal_pair_coordinate_class(
    const FoldedQuiver& q, const Root& gamma) {
  std::vector<std::pair<FoldedCoord, FoldedCoord>> out;
  auto [gk, gr] = q.coord_of(gamma);
  FoldedCoord g{gk, gr};
  for (int va = 0; va < q.size(); ++va)
    for (int vb = 0; vb < q.size(); ++vb) {
      if (va == vb) continue;
      if (!(q.label(va) + q.label(vb) == gamma)) continue;
      FoldedCoord a{q.fres[va], q.fpos(va)};
      FoldedCoord b{q.fres[vb], q.fpos(vb)};
      if (minimal_pair_clause(q.n(), a, b, g)) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace foldar
