#include "foldar/twist.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace foldar {

std::vector<TwistedCoxeterElement> enumerate_sigma_coxeter(
    const DynkinDiagram& dg, const DiagramAutomorphism& sigma, int sigma_power) {
  auto orbits = sigma.orbits();
  size_t n_orb = orbits.size();
  std::map<WeylElement, Word> seen;

  std::vector<size_t> pick(n_orb, 0);
  while (true) {
    Word reps;
    for (size_t k = 0; k < n_orb; ++k) reps.push_back(orbits[k][pick[k]]);
    std::sort(reps.begin(), reps.end());
    do {
      WeylElement el = WeylElement::from_word(dg, reps);
      Word canon = cf_normal_form(dg, reps);
      auto it = seen.find(el);
      if (it == seen.end() || canon < it->second) seen[el] = canon;
    } while (std::next_permutation(reps.begin(), reps.end()));

    size_t k = 0;
    while (k < n_orb && ++pick[k] == orbits[k].size()) pick[k++] = 0;
    if (k == n_orb) break;
  }

  std::vector<TwistedCoxeterElement> out;
  for (auto& [el, w] : seen) out.push_back({w, sigma_power});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

std::vector<TwistedCoxeterElement> enumerate_twisted_coxeter(int n) {
  auto dg = DynkinDiagram::type_a(2 * n + 1);
  return enumerate_sigma_coxeter(dg, DiagramAutomorphism::vee_a(2 * n + 1));
}

Word twisted_generator_word(int n) {
  auto vee = DiagramAutomorphism::vee_a(2 * n + 1);
  Word block;
  for (int i = 1; i <= n + 1; ++i) block.push_back(i);
  Word w;
  for (int k = 0; k <= 2 * n; ++k) {
    Word b = apply_automorphism_power(vee, k, block);
    w.insert(w.end(), b.begin(), b.end());
  }
  return w;
}

CommutationClass class_from_twisted_coxeter(const DynkinDiagram& dg,
                                            const DiagramAutomorphism& sigma,
                                            const TwistedCoxeterElement& tc) {
  int len = static_cast<int>(tc.word.size());
  int blocks = longest_length(dg) / len;
  Word w;
  for (int k = 0; k < blocks; ++k) {
    Word b = apply_automorphism_power(sigma, k * tc.sigma_power, tc.word);
    w.insert(w.end(), b.begin(), b.end());
  }
  return CommutationClass(dg, w);  // throws when tc was no twisted Coxeter element
}

std::vector<CommutationClass> twisted_cluster_point(int n) {
  auto dg = DynkinDiagram::type_a(2 * n + 1);
  return cluster_point(CommutationClass(dg, twisted_generator_word(n)));
}

Word P_word(const Word& w, int n) {
  Word out;
  for (int x : w) {
    if (x == n + 1) continue;
    out.push_back(x <= n ? x : x - 1);
  }
  return out;
}

CommutationClass surgery_P(const CommutationClass& c) {
  int rank = c.diagram().rank;
  if (c.diagram().family != 'A' || rank % 2 == 0)
    throw std::invalid_argument("surgery_P expects a class of type A_{2n+1}");
  int n = (rank - 1) / 2;
  auto dg = DynkinDiagram::type_a(2 * n);
  Word pw = P_word(c.canonical(), n);
  if (!is_reduced(dg, pw))
    throw std::invalid_argument("surgery_P: image is not reduced; class not twisted adapted");
  return CommutationClass(dg, pw);
}

CommutationClass surgery_R_class(const DynkinQuiver& q, Side side) {
  if (q.dg.family != 'A' || q.dg.rank % 2 == 1)
    throw std::invalid_argument("surgery_R expects a quiver of type A_{2n}");
  int n = q.dg.rank / 2;
  Word base = adapted_word(q);
  Word shifted;
  for (int x : base) shifted.push_back(x <= n ? x : x + 1);

  Word out;
  int seen_boundary = 0;
  int boundary_total = 0;
  for (int x : shifted)
    if (x == n || x == n + 2) ++boundary_total;
  if (side == Side::sink) out.push_back(n + 1);
  for (int x : shifted) {
    out.push_back(x);
    if (x == n || x == n + 2) {
      ++seen_boundary;
      // one n+1 between consecutive boundary letters, and for the source
      // class one more after the final one
      if (seen_boundary < boundary_total || side == Side::source)
        out.push_back(n + 1);
    }
  }
  return CommutationClass(DynkinDiagram::type_a(2 * n + 1), out);
}

TwistedClass surgery_R(const DynkinQuiver& q, Side side) {
  TwistedClass tc{surgery_R_class(q, side), side, q, q.dg.rank / 2};
  return tc;
}

TwistedClass TwistedClass::from_class(const CommutationClass& c) {
  int rank = c.diagram().rank;
  int n = (rank - 1) / 2;
  CommutationClass pc = surgery_P(c);
  DynkinQuiver q = quiver_of_adapted_class(pc);  // throws when not adapted
  bool is_sink = c.sinks().count(n + 1) > 0;
  bool is_source = c.sources().count(n + 1) > 0;
  if (is_sink == is_source)
    throw std::invalid_argument("twisted class must have n+1 as a source xor a sink");
  Side side = is_source ? Side::source : Side::sink;
  if (surgery_R_class(q, side) != c)
    throw std::invalid_argument("class is not in the twisted adapted cluster point");
  return TwistedClass{c, side, q, n};
}

std::string kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::central_induced: return "central-induced";
    case VertexKind::central_star: return "central-non-induced";
    case VertexKind::ne: return "NE";
    case VertexKind::se: return "SE";
    case VertexKind::nw: return "NW";
    case VertexKind::sw: return "SW";
  }
  return "?";
}

namespace {

bool path_has_star(const ARQuiver& ups, const SectionalPath& p, int star_res) {
  for (int v : p.vertices)
    if (ups.residue(v) == star_res) return true;
  return false;
}

void classify(TwistedCoordQuiver& q) {
  int star_res = q.n + 1;
  q.kind.assign(q.size(), VertexKind::central_star);
  for (int v = 0; v < q.size(); ++v) {
    if (!q.induced[v]) continue;
    auto np = n_path_through(q.ups, v);
    auto sp = s_path_through(q.ups, v);
    bool np_star = path_has_star(q.ups, np, star_res);
    bool sp_star = path_has_star(q.ups, sp, star_res);
    if (np_star && sp_star) {
      q.kind[v] = VertexKind::central_induced;
    } else if (q.ups.residue(v) <= q.n) {
      if (np_star == sp_star)
        throw std::logic_error("classify: ambiguous quadrant in the north");
      q.kind[v] = sp_star ? VertexKind::nw : VertexKind::ne;
    } else {
      if (np_star == sp_star)
        throw std::logic_error("classify: ambiguous quadrant in the south");
      q.kind[v] = np_star ? VertexKind::sw : VertexKind::se;
    }
  }
}

}  // namespace

std::vector<Root> label_twisted_by_sections(const TwistedCoordQuiver& q) {
  int n = q.n;
  int rank = 2 * n + 1;
  std::vector<int> first(q.size(), 0), second(q.size(), 0);
  for (const auto& p : sectional_paths(q.ups)) {
    bool has_induced = false;
    for (int v : p.vertices)
      if (q.induced[v]) has_induced = true;
    if (!has_induced) continue;
    if (p.north) {
      int a = rank - p.length();
      for (int v : p.vertices) first[v] = a;
    } else {
      int b = p.length() + 1;
      for (int v : p.vertices) second[v] = b;
    }
  }

  auto seg_root = [rank](int a, int b) {
    Root r(rank);
    for (int k = a; k <= b; ++k) r.coeff(k) = 1;
    return r;
  };

  std::vector<Root> out(q.size(), Root(rank));
  std::set<Root> used;
  std::vector<int> pending;
  for (int v = 0; v < q.size(); ++v) {
    if (first[v] >= 1 && second[v] >= 1) {
      if (second[v] < first[v])
        throw std::logic_error("label_twisted_by_sections: crossed components");
      out[v] = seg_root(first[v], second[v]);
      if (!used.insert(out[v]).second)
        throw std::logic_error("label_twisted_by_sections: duplicate label");
    } else {
      if (q.induced[v])
        throw std::logic_error("label_twisted_by_sections: induced vertex undetermined");
      pending.push_back(v);
    }
  }
  // Each residue-(n+1) vertex misses one component; the root system leaves a
  // unique unused candidate.
  for (int v : pending) {
    std::vector<Root> candidates;
    if (first[v] >= 1) {
      for (int b = first[v]; b <= rank; ++b)
        if (!used.count(seg_root(first[v], b))) candidates.push_back(seg_root(first[v], b));
    } else if (second[v] >= 1) {
      for (int a = 1; a <= second[v]; ++a)
        if (!used.count(seg_root(a, second[v]))) candidates.push_back(seg_root(a, second[v]));
    } else {
      throw std::logic_error("label_twisted_by_sections: vertex with no section data");
    }
    if (candidates.size() != 1)
      throw std::logic_error("label_twisted_by_sections: completion not unique");
    out[v] = candidates.front();
    used.insert(out[v]);
  }
  return out;
}

TwistedCoordQuiver assign_coordinates(const TwistedClass& tc) {
  TwistedCoordQuiver q(tc);
  q.ups = build_upsilon(tc.cls);
  int star_res = tc.n + 1;

  // Gamma_Q coordinates keyed by root.
  ARQuiver gamma = gamma_q(tc.parent);
  std::map<Root, int> gpos;
  for (int k = 0; k < gamma.size(); ++k) gpos[gamma.labels[k]] = gamma.pos2[k];

  Word pw = P_word(q.ups.word, tc.n);
  auto plabels = roots_of_word(tc.parent.dg, pw);

  q.ups.pos2.assign(q.size(), 0);
  q.induced.assign(q.size(), false);
  std::vector<bool> assigned(q.size(), false);
  size_t j = 0;
  for (int k = 0; k < q.size(); ++k) {
    if (q.ups.residue(k) == star_res) continue;
    q.induced[k] = true;
    auto it = gpos.find(plabels[j]);
    if (it == gpos.end())
      throw std::logic_error("assign_coordinates: induced label missing from Gamma_Q");
    q.ups.pos2[k] = it->second;
    assigned[k] = true;
    ++j;
  }

  // Residue-(n+1) vertices sit half a step (one doubled unit) from every
  // neighbour, on either side depending on the arrow direction.
  for (int pass = 0; pass < 2; ++pass)
    for (auto [k, t] : q.ups.arrows) {
      if (!assigned[k] && assigned[t] && q.ups.residue(k) == star_res) {
        q.ups.pos2[k] = q.ups.pos2[t] - 1;
        assigned[k] = true;
      }
      if (!assigned[t] && assigned[k] && q.ups.residue(t) == star_res) {
        q.ups.pos2[t] = q.ups.pos2[k] + 1;
        assigned[t] = true;
      }
    }
  for (int k = 0; k < q.size(); ++k)
    if (!assigned[k]) throw std::logic_error("assign_coordinates: isolated vertex");

  // Structural audit: consistency of every arrow span, injectivity, parity.
  std::set<std::pair<int, int>> coords;
  for (int k = 0; k < q.size(); ++k) {
    if (!coords.insert({q.ups.residue(k), q.ups.pos2[k]}).second)
      throw std::logic_error("assign_coordinates: coordinates collide");
    if (q.induced[k] ? (q.ups.pos2[k] % 2 != 0) : (q.ups.pos2[k] % 2 == 0))
      throw std::logic_error("assign_coordinates: parity violated");
  }
  for (auto [k, t] : q.ups.arrows) {
    bool half = q.ups.residue(k) == star_res || q.ups.residue(t) == star_res;
    if (q.ups.pos2[t] - q.ups.pos2[k] != (half ? 1 : 2))
      throw std::logic_error("assign_coordinates: arrow span violated");
  }

  classify(q);

  if (label_twisted_by_sections(q) != q.ups.labels)
    throw std::logic_error("assign_coordinates: sectional labels disagree with the word");
  return q;
}

int multiplicity(const Root& gamma) {
  int m = 0;
  for (int x : gamma.c) m = std::max(m, x);
  return m;
}

int folded_multiplicity(const Root& gamma, const DiagramAutomorphism& sigma) {
  int m = 0;
  for (const auto& orb : sigma.orbits()) {
    int s = 0;
    for (int i : orb) s += gamma.coeff(i);
    m = std::max(m, s);
  }
  return m;
}

bool check_twisted_additive(const TwistedCoordQuiver& q) {
  int n = q.n;
  int rank = 2 * n + 1;
  for (int k = 0; k < q.size(); ++k) {
    int i = q.ups.residue(k);
    int p2 = q.ups.pos2[k];
    int delta = (i == n + 1) ? 1 : 0;
    int prev = q.ups.vertex_at(i, p2 - 4 + 2 * delta);
    if (prev < 0) continue;
    int q2 = p2 - 2 / (1 + delta);
    std::vector<int> js;
    if (i == n)
      js = {n - 1, n + 2};
    else if (i == n + 2)
      js = {n, n + 3};
    else
      js = {i - 1, i + 1};
    Root sum(rank);
    for (int jres : js) {
      if (jres < 1 || jres > rank) continue;
      int mid = q.ups.vertex_at(jres, q2);
      if (mid >= 0) sum = sum + q.ups.labels[mid];
    }
    if (q.ups.labels[k] + q.ups.labels[prev] != sum) return false;
  }
  return true;
}

CoordView reflect_twisted(const TwistedCoordQuiver& q, int i) {
  if (!q.tcls.cls.sinks().count(i))
    throw std::invalid_argument("reflect_twisted: index is not a sink of the class");
  const auto& dg = q.ups.dg;
  auto star = longest_involution(dg);
  int h2 = 2 * (2 * q.n + 1);  // doubled dual Coxeter number
  Root alpha = Root::simple(dg.rank, i);
  int removed = q.ups.vertex_of_label(alpha);
  if (removed < 0 || q.ups.residue(removed) != i)
    throw std::logic_error("reflect_twisted: alpha_i not on residue i");

  CoordView view;
  for (int k = 0; k < q.size(); ++k) {
    if (k == removed) continue;
    view.verts.emplace_back(q.ups.residue(k), q.ups.pos2[k], reflect(dg, i, q.ups.labels[k]));
  }
  int newp2 = q.ups.pos2[removed] - h2;
  view.verts.emplace_back(star[i], newp2, alpha);
  std::sort(view.verts.begin(), view.verts.end());

  auto index_at = [&](int res, int p2) {
    for (size_t k = 0; k < view.verts.size(); ++k)
      if (std::get<0>(view.verts[k]) == res && std::get<1>(view.verts[k]) == p2)
        return static_cast<int>(k);
    return -1;
  };
  for (auto [k, t] : q.ups.arrows) {
    if (k == removed || t == removed) continue;
    view.arrows.emplace_back(index_at(q.ups.residue(k), q.ups.pos2[k]),
                             index_at(q.ups.residue(t), q.ups.pos2[t]));
  }
  int from = index_at(star[i], newp2);
  for (int jres : dg.adj[star[i]]) {
    bool half = jres == q.n + 1 || star[i] == q.n + 1;
    int to = index_at(jres, newp2 + (half ? 1 : 2));
    if (to >= 0) view.arrows.emplace_back(from, to);
  }
  std::sort(view.arrows.begin(), view.arrows.end());
  return view;
}

bool char_condition(const DynkinQuiver& q) {
  if (q.dg.family != 'A' || q.dg.rank % 2 == 1)
    throw std::invalid_argument("char_condition expects type A_{2n}");
  int rank = q.dg.rank;
  for (int i = 1; i <= rank; ++i) {
    auto rc = arrows_between(q, i, rank + 1 - i);
    if (std::abs(rc.toward_i - rc.toward_star) != 1) return false;
  }
  return true;
}

long count_char_quivers(int n) {
  long count = 0;
  for (const auto& q : all_quivers(DynkinDiagram::type_a(2 * n)))
    if (char_condition(q)) ++count;
  return count;
}

}  // namespace foldar
