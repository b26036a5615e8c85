#include "foldar/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace foldar {

DynkinDiagram DynkinDiagram::type_a(int n) {
  if (n < 1) throw std::invalid_argument("type_a: rank must be >= 1");
  DynkinDiagram d;
  d.family = 'A';
  d.rank = n;
  d.adj.assign(n + 1, {});
  for (int i = 1; i < n; ++i) {
    d.adj[i].push_back(i + 1);
    d.adj[i + 1].push_back(i);
  }
  for (auto& v : d.adj) std::sort(v.begin(), v.end());
  return d;
}

DynkinDiagram DynkinDiagram::type_d(int n) {
  if (n < 4) throw std::invalid_argument("type_d: rank must be >= 4");
  DynkinDiagram d;
  d.family = 'D';
  d.rank = n;
  d.adj.assign(n + 1, {});
  auto link = [&](int a, int b) {
    d.adj[a].push_back(b);
    d.adj[b].push_back(a);
  };
  if (n == 4) {
    // Triality-friendly labeling: 4 central, leaves 1,2,3.
    link(1, 4);
    link(2, 4);
    link(3, 4);
  } else {
    // Path 1 - 2 - ... - (n-2), fork n-1 and n attached to n-2.
    for (int i = 1; i < n - 2; ++i) link(i, i + 1);
    link(n - 2, n - 1);
    link(n - 2, n);
  }
  for (auto& v : d.adj) std::sort(v.begin(), v.end());
  return d;
}

DynkinDiagram DynkinDiagram::custom(char family, int n,
                                    const std::vector<std::pair<int, int>>& edges) {
  DynkinDiagram d;
  d.family = family;
  d.rank = n;
  d.adj.assign(n + 1, {});
  for (auto [a, b] : edges) {
    d.adj[a].push_back(b);
    d.adj[b].push_back(a);
  }
  for (auto& v : d.adj) std::sort(v.begin(), v.end());
  return d;
}

DynkinDiagram DynkinDiagram::type_e6() {
  // Path 1 - 2 - 3 - 4 - 5 with 6 attached to 3, as in the folding to F4.
  DynkinDiagram d;
  d.family = 'E';
  d.rank = 6;
  d.adj.assign(7, {});
  auto link = [&](int a, int b) {
    d.adj[a].push_back(b);
    d.adj[b].push_back(a);
  };
  for (int i = 1; i < 5; ++i) link(i, i + 1);
  link(3, 6);
  for (auto& v : d.adj) std::sort(v.begin(), v.end());
  return d;
}

bool DynkinDiagram::adjacent(int i, int j) const {
  check_index(i);
  check_index(j);
  return std::binary_search(adj[i].begin(), adj[i].end(), j);
}

void DynkinDiagram::check_index(int i) const {
  if (i < 1 || i > rank)
    throw std::invalid_argument("index " + std::to_string(i) + " outside I of " + name());
}

Root Root::simple(int rank, int i) {
  Root r(rank);
  r.coeff(i) = 1;
  return r;
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
}

Root Root::operator+(const Root& o) const {
  Root r(*this);
  for (size_t k = 0; k < c.size(); ++k) r.c[k] += o.c[k];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r(*this);
  for (size_t k = 0; k < c.size(); ++k) r.c[k] -= o.c[k];
  return r;
}

Root Root::operator-() const {
  Root r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

std::optional<std::pair<int, int>> Root::segment() const {
  int a = 0, b = 0;
  for (int i = 1; i <= rank(); ++i) {
    if (coeff(i) == 0) continue;
    if (coeff(i) != 1) return std::nullopt;
    if (a == 0) a = i;
    b = i;
  }
  if (a == 0) return std::nullopt;
  for (int i = a; i <= b; ++i)
    if (coeff(i) != 1) return std::nullopt;
  return std::make_pair(a, b);
}

std::string Root::str() const {
  if (auto s = segment()) {
    if (s->first == s->second) return "[" + std::to_string(s->first) + "]";
    return "[" + std::to_string(s->first) + "," + std::to_string(s->second) + "]";
  }
  std::string out;
  for (int i = 1; i <= rank(); ++i) {
    if (coeff(i) == 0) continue;
    if (!out.empty()) out += "+";
    if (coeff(i) != 1) out += std::to_string(coeff(i));
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int pairing_with_simple(const DynkinDiagram& dg, const Root& beta, int i) {
  dg.check_index(i);
  int v = 2 * beta.coeff(i);
  for (int j : dg.adj[i]) v -= beta.coeff(j);
  return v;
}

Root reflect(const DynkinDiagram& dg, int i, const Root& beta) {
  Root r(beta);
  r.coeff(i) -= pairing_with_simple(dg, beta, i);
  return r;
}

std::vector<Root> roots_of_word(const DynkinDiagram& dg, const Word& w) {
  std::vector<Root> out;
  out.reserve(w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    Root b = Root::simple(dg.rank, w[k]);
    for (size_t j = k; j-- > 0;) b = reflect(dg, w[j], b);
    out.push_back(std::move(b));
  }
  return out;
}

bool is_reduced(const DynkinDiagram& dg, const Word& w) {
  auto roots = roots_of_word(dg, w);
  std::set<Root> seen;
  for (const auto& b : roots) {
    if (!b.is_positive()) return false;
    if (!seen.insert(b).second) return false;
  }
  return true;
}

RootSystem::RootSystem(const DynkinDiagram& d) : dg(d) {
  std::set<Root> all;
  std::vector<Root> frontier;
  for (int i = 1; i <= dg.rank; ++i) {
    Root s = Root::simple(dg.rank, i);
    all.insert(s);
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier)
      for (int i = 1; i <= dg.rank; ++i) {
        Root s = reflect(dg, i, r);
        if (all.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  for (const auto& r : all)
    if (r.is_positive()) positives.push_back(r);
  if (dg.family == 'A') {
    std::sort(positives.begin(), positives.end(), [](const Root& x, const Root& y) {
      return *x.segment() < *y.segment();
    });
  } else {
    std::sort(positives.begin(), positives.end());
  }
  for (int k = 0; k < size(); ++k) index_[positives[k]] = k;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int longest_length(const DynkinDiagram& dg) {
  switch (dg.family) {
    case 'A':
      return dg.rank * (dg.rank + 1) / 2;
    case 'D':
      return dg.rank * (dg.rank - 1);
    case 'E':
      if (dg.rank == 6) return 36;
      break;
  }
  throw std::invalid_argument("longest_length: unsupported diagram " + dg.name());
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  DiagramAutomorphism s;
  s.map.resize(rank);
  std::iota(s.map.begin(), s.map.end(), 1);
  s.order = 1;
  return s;
}

DiagramAutomorphism DiagramAutomorphism::vee_a(int rank) {
  DiagramAutomorphism s;
  s.map.resize(rank);
  for (int i = 1; i <= rank; ++i) s.map[i - 1] = rank + 1 - i;
  s.order = (rank == 1) ? 1 : 2;
  return s;
}

DiagramAutomorphism DiagramAutomorphism::vee_d(int rank) {
  DiagramAutomorphism s = identity(rank);
  s.map[rank - 2] = rank;
  s.map[rank - 1] = rank - 1;
  s.order = 2;
  return s;
}

DiagramAutomorphism DiagramAutomorphism::vee_e6() {
  DiagramAutomorphism s = identity(6);
  s.map[0] = 5;
  s.map[4] = 1;
  s.map[1] = 4;
  s.map[3] = 2;
  s.order = 2;
  return s;
}

DiagramAutomorphism DiagramAutomorphism::d4_triality(int power) {
  DiagramAutomorphism s = identity(4);
  if (power % 3 == 1) {
    s.map[0] = 2;
    s.map[1] = 3;
    s.map[2] = 1;
    s.order = 3;
  } else if (power % 3 == 2) {
    s.map[0] = 3;
    s.map[1] = 1;
    s.map[2] = 2;
    s.order = 3;
  }
  return s;
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(rank() + 1, false);
  for (int i = 1; i <= rank(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = apply(j);
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

int DiagramAutomorphism::orbit_index(int i) const {
  auto os = orbits();
  for (size_t k = 0; k < os.size(); ++k)
    if (std::binary_search(os[k].begin(), os[k].end(), i)) return static_cast<int>(k);
  throw std::invalid_argument("orbit_index: index out of range");
}

bool DiagramAutomorphism::preserves(const DynkinDiagram& dg) const {
  if (rank() != dg.rank) return false;
  for (int i = 1; i <= dg.rank; ++i)
    for (int j : dg.adj[i])
      if (!dg.adjacent(apply(i), apply(j))) return false;
  return true;
}

Word apply_automorphism_power(const DiagramAutomorphism& s, int k, const Word& w) {
  Word out = w;
  int steps = ((k % s.order) + s.order) % s.order;
  for (int t = 0; t < steps; ++t)
    for (auto& x : out) x = s.apply(x);
  return out;
}

WeylElement WeylElement::identity(const DynkinDiagram& dg) {
  WeylElement e;
  for (int i = 1; i <= dg.rank; ++i) e.images.push_back(Root::simple(dg.rank, i));
  return e;
}

WeylElement WeylElement::from_word(const DynkinDiagram& dg, const Word& w) {
  WeylElement e = identity(dg);
  // w = s_{i_1} ... s_{i_l}; build right-to-left so apply() acts as the product.
  for (size_t k = w.size(); k-- > 0;) e = e.then_apply(dg, w[k]);
  return e;
}

Root WeylElement::apply(const Root& r) const {
  Root out(static_cast<int>(images.size()));
  for (int i = 1; i <= static_cast<int>(images.size()); ++i) {
    int m = r.coeff(i);
    if (m == 0) continue;
    for (size_t k = 0; k < out.c.size(); ++k) out.c[k] += m * images[i - 1].c[k];
  }
  return out;
}

WeylElement WeylElement::then_apply(const DynkinDiagram& dg, int i) const {
  WeylElement e;
  e.images.reserve(images.size());
  for (const auto& r : images) e.images.push_back(reflect(dg, i, r));
  return e;
}

std::vector<int> longest_involution(const DynkinDiagram& dg) {
  // Act with w_0 obtained from any reduced word; sink elimination on an
  // arbitrary orientation always yields one, but a plain closure is simpler:
  // w_0 = product over any reduced word; build one greedily via exchange.
  // Here we use the standard facts per family instead of a word.
  std::vector<int> star(dg.rank + 1, 0);
  if (dg.family == 'A') {
    for (int i = 1; i <= dg.rank; ++i) star[i] = dg.rank + 1 - i;
  } else if (dg.family == 'D') {
    for (int i = 1; i <= dg.rank; ++i) star[i] = i;
    if (dg.rank % 2 == 1) std::swap(star[dg.rank - 1], star[dg.rank]);
  } else if (dg.family == 'E' && dg.rank == 6) {
    star = {0, 5, 4, 3, 2, 1, 6};
  } else {
    throw std::invalid_argument("longest_involution: unsupported " + dg.name());
  }
  return star;
}

}  // namespace foldar
