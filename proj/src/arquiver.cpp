#include "foldar/arquiver.hpp"

#include <algorithm>
#include <deque>

namespace foldar {

DynkinQuiver DynkinQuiver::from_orientation_string(const DynkinDiagram& d,
                                                   const std::string& s) {
  if (d.family != 'A')
    throw std::invalid_argument("orientation strings are for type A");
  if (static_cast<int>(s.size()) != d.rank - 1)
    throw std::invalid_argument("orientation string needs rank-1 characters");
  DynkinQuiver q;
  q.dg = d;
  for (int k = 1; k < d.rank; ++k) {
    char c = s[k - 1];
    if (c != '<' && c != '>')
      throw std::invalid_argument("orientation string may contain only < and >");
    q.orient[{k, k + 1}] = (c == '>') ? +1 : -1;
  }
  return q;
}

std::string DynkinQuiver::orientation_string() const {
  std::string s;
  for (int k = 1; k < dg.rank; ++k)
    s += orient.at({k, k + 1}) > 0 ? '>' : '<';
  return s;
}

bool DynkinQuiver::has_arrow(int from, int to) const {
  if (!dg.adjacent(from, to)) return false;
  auto key = std::minmax(from, to);
  int o = orient.at({key.first, key.second});
  return (from < to) == (o > 0);
}

bool DynkinQuiver::is_sink(int i) const {
  for (int j : dg.adj[i])
    if (has_arrow(i, j)) return false;
  return true;
}

bool DynkinQuiver::is_source(int i) const {
  for (int j : dg.adj[i])
    if (has_arrow(j, i)) return false;
  return true;
}

std::vector<int> DynkinQuiver::sinks() const {
  std::vector<int> out;
  for (int i = 1; i <= dg.rank; ++i)
    if (is_sink(i)) out.push_back(i);
  return out;
}

DynkinQuiver DynkinQuiver::flipped(int i) const {
  DynkinQuiver q(*this);
  for (int j : dg.adj[i]) {
    auto key = std::minmax(i, j);
    q.orient[{key.first, key.second}] *= -1;
  }
  return q;
}

DynkinQuiver DynkinQuiver::reversed() const {
  DynkinQuiver q(*this);
  for (auto& [e, o] : q.orient) o = -o;
  return q;
}

std::vector<DynkinQuiver> all_quivers(const DynkinDiagram& dg) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= dg.rank; ++i)
    for (int j : dg.adj[i])
      if (i < j) edges.emplace_back(i, j);
  std::vector<DynkinQuiver> out;
  for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
    DynkinQuiver q;
    q.dg = dg;
    for (size_t e = 0; e < edges.size(); ++e)
      q.orient[edges[e]] = (mask >> e & 1) ? +1 : -1;
    out.push_back(q);
  }
  return out;
}

namespace {

// Unique path between two vertices of the tree.
std::vector<int> tree_path(const DynkinDiagram& dg, int from, int to) {
  std::vector<int> parent(dg.rank + 1, 0);
  std::deque<int> q{from};
  parent[from] = from;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) break;
    for (int w : dg.adj[v])
      if (!parent[w]) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ResidueCount arrows_between(const DynkinQuiver& q, int i, int istar) {
  ResidueCount rc;
  if (i == istar) return rc;
  auto path = tree_path(q.dg, i, istar);
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    if (q.has_arrow(path[k + 1], path[k]))
      rc.toward_i += 1;  // oriented toward the i-side
    else
      rc.toward_star += 1;
  }
  return rc;
}

int dual_coxeter_number(const DynkinDiagram& dg) {
  switch (dg.family) {
    case 'A':
      return dg.rank + 1;
    case 'D':
      return 2 * dg.rank - 2;
    case 'E':
      if (dg.rank == 6) return 12;
      break;
  }
  throw std::invalid_argument("dual_coxeter_number: unsupported " + dg.name());
}

int gamma_residue_count(const DynkinQuiver& q, int i) {
  auto star = longest_involution(q.dg);
  auto rc = arrows_between(q, i, star[i]);
  return (dual_coxeter_number(q.dg) + rc.toward_i - rc.toward_star) / 2;
}

Word coxeter_element_word(const DynkinQuiver& q) {
  // Topological sink order: each vertex exactly once, ascending inside rounds.
  Word w;
  DynkinQuiver cur = q;
  std::vector<bool> done(q.dg.rank + 1, false);
  while (static_cast<int>(w.size()) < q.dg.rank) {
    std::vector<int> round;
    for (int i = 1; i <= q.dg.rank; ++i)
      if (!done[i] && cur.is_sink(i)) round.push_back(i);
    if (round.empty()) throw std::logic_error("coxeter_element_word: stuck");
    for (int i : round) {
      w.push_back(i);
      done[i] = true;
      cur = cur.flipped(i);
    }
  }
  return w;
}

namespace {

struct OmegaEntry {
  Root label;
  int residue;
  int pos2;
};

// Coordinates of Gamma_Q: start from the Coxeter slice at (i, xi(i)) and
// translate by phi_Q in steps of -2 while the image stays positive.
std::vector<OmegaEntry> omega_assignments(const DynkinQuiver& q) {
  auto xi = height_function(q);
  Word phi_word = coxeter_element_word(q);
  WeylElement phi = WeylElement::from_word(q.dg, phi_word);
  auto starts = roots_of_word(q.dg, phi_word);
  std::vector<OmegaEntry> out;
  for (size_t k = 0; k < phi_word.size(); ++k) {
    int i = phi_word[k];
    Root r = starts[k];
    int p2 = 2 * xi[i];
    while (true) {
      out.push_back({r, i, p2});
      Root next = phi.apply(r);
      if (!next.is_positive()) break;
      r = next;
      p2 -= 4;
    }
  }
  if (static_cast<int>(out.size()) != longest_length(q.dg))
    throw std::logic_error("omega_assignments: coordinate count mismatch");
  return out;
}

}  // namespace

Word adapted_word(const DynkinQuiver& q) {
  // Read the coordinate quiver right to left; vertices sharing a position
  // commute, so ascending residue inside a column is a harmless convention.
  auto omega = omega_assignments(q);
  std::sort(omega.begin(), omega.end(), [](const OmegaEntry& a, const OmegaEntry& b) {
    if (a.pos2 != b.pos2) return a.pos2 > b.pos2;
    return a.residue < b.residue;
  });
  Word w;
  for (const auto& e : omega) w.push_back(e.residue);
  if (!is_reduced(q.dg, w))
    throw std::logic_error("adapted_word: coordinate reading is not reduced");
  return w;
}

CommutationClass adapted_class(const DynkinQuiver& q) {
  return CommutationClass(q.dg, adapted_word(q));
}

bool is_adapted(const Word& w, const DynkinQuiver& q) {
  DynkinQuiver cur = q;
  for (int i : w) {
    if (!cur.is_sink(i)) return false;
    cur = cur.flipped(i);
  }
  return true;
}

DynkinQuiver quiver_of_adapted_class(const CommutationClass& c) {
  const auto& dg = c.diagram();
  const Word& w = c.canonical();
  std::vector<int> first(dg.rank + 1, -1);
  for (size_t k = 0; k < w.size(); ++k)
    if (first[w[k]] < 0) first[w[k]] = static_cast<int>(k);
  DynkinQuiver q;
  q.dg = dg;
  for (int i = 1; i <= dg.rank; ++i)
    for (int j : dg.adj[i])
      if (i < j) {
        if (first[i] < 0 || first[j] < 0)
          throw std::invalid_argument("quiver_of_adapted_class: letter missing");
        // the earlier of the two was consumed as a sink, so the edge enters it
        q.orient[{i, j}] = (first[i] < first[j]) ? -1 : +1;
      }
  if (!is_adapted(w, q))
    throw std::invalid_argument("class is not adapted to any quiver");
  return q;
}

std::map<int, int> height_function(const DynkinQuiver& q) {
  std::map<int, int> xi;
  xi[1] = 0;
  std::deque<int> bfs{1};
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int w : q.dg.adj[v])
      if (!xi.count(w)) {
        xi[w] = xi[v] + (q.has_arrow(v, w) ? +1 : -1);
        bfs.push_back(w);
      }
  }
  return xi;
}

int ARQuiver::vertex_of_label(const Root& r) const {
  for (int k = 0; k < size(); ++k)
    if (labels[k] == r) return k;
  return -1;
}

int ARQuiver::vertex_at(int res, int p2) const {
  for (int k = 0; k < size(); ++k)
    if (word[k] == res && pos2[k] == p2) return k;
  return -1;
}

void ARQuiver::build_navigation() {
  up_next.assign(size(), -1);
  up_prev.assign(size(), -1);
  down_next.assign(size(), -1);
  down_prev.assign(size(), -1);
  for (auto [k, j] : arrows) {
    // arrow beta_k -> beta_j with j earlier; in coordinates it ascends
    if (residue(j) == residue(k) - 1) {
      up_next[k] = j;
      up_prev[j] = k;
    } else if (residue(j) == residue(k) + 1) {
      down_next[k] = j;
      down_prev[j] = k;
    }
  }
}

void ARQuiver::build_reach() const {
  if (!reach_.empty()) return;
  int n = size();
  reach_.assign(n, std::vector<bool>(n, false));
  // arrows go from later vertices to earlier ones, so scan ascending
  std::vector<std::vector<int>> out(n);
  for (auto [k, j] : arrows) out[k].push_back(j);
  for (int k = 0; k < n; ++k) {
    reach_[k][k] = true;
    for (int j : out[k])
      for (int t = 0; t <= k; ++t)
        if (reach_[j][t]) reach_[k][t] = true;
  }
}

bool ARQuiver::reaches(int from, int to) const {
  build_reach();
  return reach_[from][to];
}

ARQuiver build_upsilon(const CommutationClass& c) {
  ARQuiver q;
  q.dg = c.diagram();
  q.word = c.canonical();
  q.labels = roots_of_word(q.dg, q.word);
  int n = q.size();
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j) {
      if (!q.dg.adjacent(q.word[j], q.word[k])) continue;
      bool clean = true;
      for (int t = j + 1; t < k && clean; ++t)
        if (q.word[t] == q.word[j] || q.word[t] == q.word[k]) clean = false;
      if (clean) {
        q.arrows.emplace_back(k, j);
        q.arrow_color.push_back(1);
      }
    }
  q.build_navigation();
  return q;
}

bool convex_precedes(const ARQuiver& ups, const Root& a, const Root& b) {
  int va = ups.vertex_of_label(a);
  int vb = ups.vertex_of_label(b);
  if (va < 0 || vb < 0) throw std::invalid_argument("convex_precedes: label absent");
  if (va == vb) return false;
  return ups.reaches(vb, va);
}

ARQuiver gamma_q(const DynkinQuiver& q) {
  CommutationClass c = adapted_class(q);
  ARQuiver g = build_upsilon(c);

  std::map<Root, std::pair<int, int>> omega;  // root -> (residue, pos2)
  for (const auto& e : omega_assignments(q)) omega[e.label] = {e.residue, e.pos2};
  if (static_cast<int>(omega.size()) != g.size())
    throw std::logic_error("gamma_q: coordinate count mismatch");

  g.pos2.assign(g.size(), 0);
  for (int k = 0; k < g.size(); ++k) {
    auto it = omega.find(g.labels[k]);
    if (it == omega.end() || it->second.first != g.residue(k))
      throw std::logic_error("gamma_q: residue mismatch between word and coordinates");
    g.pos2[k] = it->second.second;
  }

  // the combinatorial arrows must coincide with the coordinate rule
  for (auto [k, j] : g.arrows)
    if (g.pos2[j] != g.pos2[k] + 2)
      throw std::logic_error("gamma_q: arrow violates the coordinate step rule");

  for (int i = 1; i <= q.dg.rank; ++i) {
    int count = 0;
    for (int k = 0; k < g.size(); ++k)
      if (g.residue(k) == i) ++count;
    if (count != gamma_residue_count(q, i))
      throw std::logic_error("gamma_q: residue count differs from (h+a-b)/2");
  }
  return g;
}

bool check_additive(const ARQuiver& gamma) {
  for (int k = 0; k < gamma.size(); ++k) {
    int i = gamma.residue(k);
    int p2 = gamma.pos2[k];
    int tau = gamma.vertex_at(i, p2 - 4);
    if (tau < 0) continue;  // phi(beta) not positive
    Root sum(gamma.dg.rank);
    for (int j : gamma.dg.adj[i]) {
      int mid = gamma.vertex_at(j, p2 - 2);
      if (mid >= 0) sum = sum + gamma.labels[mid];
    }
    if (gamma.labels[k] + gamma.labels[tau] != sum) return false;
  }
  return true;
}

CoordView CoordView::of(const ARQuiver& q) {
  CoordView v;
  for (int k = 0; k < q.size(); ++k) v.verts.emplace_back(q.residue(k), q.pos2[k], q.labels[k]);
  std::vector<int> order(q.size());
  for (int k = 0; k < q.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return v.verts[a] < v.verts[b]; });
  std::vector<int> rank(q.size());
  for (int k = 0; k < q.size(); ++k) rank[order[k]] = k;
  std::sort(v.verts.begin(), v.verts.end());
  for (auto [k, j] : q.arrows) v.arrows.emplace_back(rank[k], rank[j]);
  std::sort(v.arrows.begin(), v.arrows.end());
  return v;
}

CoordView CoordView::normalized() const {
  CoordView out = *this;
  if (out.verts.empty()) return out;
  int lo = std::get<1>(out.verts.front());
  for (auto& t : out.verts) lo = std::min(lo, std::get<1>(t));
  for (auto& t : out.verts) std::get<1>(t) -= lo;
  // shifting cannot reorder (residue, pos2, label) triples
  return out;
}

CoordView reflect_gamma(const ARQuiver& gamma, int i) {
  CommutationClass c(gamma.dg, gamma.word);
  if (!c.sinks().count(i))
    throw std::invalid_argument("reflect_gamma: index is not a sink of the class");
  auto star = longest_involution(gamma.dg);
  int hd = dual_coxeter_number(gamma.dg);
  Root alpha = Root::simple(gamma.dg.rank, i);
  int removed = gamma.vertex_of_label(alpha);
  if (removed < 0 || gamma.residue(removed) != i)
    throw std::logic_error("reflect_gamma: alpha_i not on residue i");

  struct V {
    int res, p2;
    Root label;
  };
  std::vector<V> verts;
  for (int k = 0; k < gamma.size(); ++k) {
    if (k == removed) continue;
    verts.push_back({gamma.residue(k), gamma.pos2[k], reflect(gamma.dg, i, gamma.labels[k])});
  }
  int newp2 = gamma.pos2[removed] - 2 * hd;
  verts.push_back({star[i], newp2, alpha});

  CoordView view;
  for (auto& v : verts) view.verts.emplace_back(v.res, v.p2, v.label);
  std::sort(view.verts.begin(), view.verts.end());
  auto index_at = [&](int res, int p2) {
    for (size_t k = 0; k < view.verts.size(); ++k)
      if (std::get<0>(view.verts[k]) == res && std::get<1>(view.verts[k]) == p2)
        return static_cast<int>(k);
    return -1;
  };
  for (auto [k, j] : gamma.arrows) {
    if (k == removed || j == removed) continue;
    int a = index_at(gamma.residue(k), gamma.pos2[k]);
    int b = index_at(gamma.residue(j), gamma.pos2[j]);
    view.arrows.emplace_back(a, b);
  }
  int from = index_at(star[i], newp2);
  for (int j : gamma.dg.adj[star[i]]) {
    int to = index_at(j, newp2 + 2);
    if (to >= 0) view.arrows.emplace_back(from, to);
  }
  std::sort(view.arrows.begin(), view.arrows.end());
  return view;
}

SectionalPath n_path_through(const ARQuiver& q, int v) {
  SectionalPath p;
  p.north = true;
  int cur = v;
  while (q.up_prev[cur] >= 0) cur = q.up_prev[cur];
  while (cur >= 0) {
    p.vertices.push_back(cur);
    cur = q.up_next[cur];
  }
  return p;
}

SectionalPath s_path_through(const ARQuiver& q, int v) {
  SectionalPath p;
  p.north = false;
  int cur = v;
  while (q.down_prev[cur] >= 0) cur = q.down_prev[cur];
  while (cur >= 0) {
    p.vertices.push_back(cur);
    cur = q.down_next[cur];
  }
  return p;
}

std::vector<SectionalPath> sectional_paths(const ARQuiver& q) {
  std::vector<SectionalPath> out;
  for (int v = 0; v < q.size(); ++v) {
    if (q.up_prev[v] < 0) out.push_back(n_path_through(q, v));
    if (q.down_prev[v] < 0) out.push_back(s_path_through(q, v));
  }
  return out;
}

std::vector<Root> labels_by_sections_gamma(const ARQuiver& gamma) {
  if (gamma.dg.family != 'A')
    throw std::invalid_argument("labels_by_sections_gamma: type A only");
  int m = gamma.dg.rank;
  std::vector<int> first(gamma.size(), 0), second(gamma.size(), 0);
  for (const auto& p : sectional_paths(gamma)) {
    if (p.north) {
      int a = m - p.length();
      for (int v : p.vertices) first[v] = a;
    } else {
      int b = p.length() + 1;
      for (int v : p.vertices) second[v] = b;
    }
  }
  std::vector<Root> out;
  for (int v = 0; v < gamma.size(); ++v) {
    if (first[v] < 1 || second[v] < first[v])
      throw std::logic_error("labels_by_sections_gamma: inconsistent sections");
    Root r(m);
    for (int k = first[v]; k <= second[v]; ++k) r.coeff(k) = 1;
    out.push_back(r);
  }
  return out;
}

}  // namespace foldar
