#include "foldar/order.hpp"

#include <algorithm>
#include <functional>

namespace foldar {

OrderContext::OrderContext(const CommutationClass& c)
    : cls(c), rs(c.diagram()), ups(build_upsilon(c)) {
  if (ups.size() != rs.size())
    throw std::invalid_argument("OrderContext expects a class of w_0");
  vertex_of_root.assign(rs.size(), -1);
  root_of_vertex.assign(rs.size(), -1);
  for (int v = 0; v < ups.size(); ++v) {
    int r = rs.index_of(ups.labels[v]);
    if (r < 0) throw std::logic_error("OrderContext: label outside Phi+");
    vertex_of_root[r] = v;
    root_of_vertex[v] = r;
  }
  ups.build_reach();
}

bool OrderContext::precedes(int a, int b) const {
  if (a == b) return false;
  return ups.reaches(vertex_of_root[b], vertex_of_root[a]);
}

Seq OrderContext::pair_seq(const Root& a, const Root& b) const {
  Seq m = empty_seq();
  m[rs.index_of(a)] += 1;
  m[rs.index_of(b)] += 1;
  return m;
}

Seq OrderContext::single_seq(const Root& a) const {
  Seq m = empty_seq();
  m[rs.index_of(a)] = 1;
  return m;
}

Root OrderContext::weight(const Seq& m) const {
  Root w(rs.dg.rank);
  for (int k = 0; k < n_roots(); ++k)
    for (int rep = 0; rep < m[k]; ++rep) w = w + rs.at(k);
  return w;
}

int OrderContext::size(const Seq& m) const {
  int s = 0;
  for (int x : m) s += x;
  return s;
}

bool OrderContext::is_pair(const Seq& m) const {
  for (int x : m)
    if (x > 1) return false;
  return size(m) == 2;
}

bool lt_b_word(const OrderContext& ctx, const Seq& m1, const Seq& m2, const Word& member) {
  auto roots = roots_of_word(ctx.rs.dg, member);
  int first = -1, last = -1;
  for (size_t pos = 0; pos < roots.size(); ++pos) {
    int r = ctx.rs.index_of(roots[pos]);
    if (m1[r] != m2[r]) {
      if (first < 0) first = static_cast<int>(pos);
      last = static_cast<int>(pos);
    }
  }
  if (first < 0) return false;
  int rf = ctx.rs.index_of(roots[first]);
  int rl = ctx.rs.index_of(roots[last]);
  return m1[rf] < m2[rf] && m1[rl] < m2[rl];
}

bool prec_b_class(const OrderContext& ctx, const Seq& m1, const Seq& m2) {
  std::vector<int> diff;
  for (int r = 0; r < ctx.n_roots(); ++r)
    if (m1[r] != m2[r]) diff.push_back(r);
  if (diff.empty()) return false;
  for (int r : diff) {
    bool minimal = true, maximal = true;
    for (int s : diff) {
      if (ctx.precedes(s, r)) minimal = false;
      if (ctx.precedes(r, s)) maximal = false;
    }
    if ((minimal || maximal) && m1[r] >= m2[r]) return false;
  }
  return true;
}

std::optional<bool> prec_b_bruteforce(const OrderContext& ctx, const Seq& m1,
                                      const Seq& m2, size_t cap) {
  auto members = ctx.cls.member_words(cap);
  if (members.empty()) return std::nullopt;
  for (const auto& w : members)
    if (!lt_b_word(ctx, m1, m2, w)) return false;
  return true;
}

std::vector<Seq> sequences_of_weight(const OrderContext& ctx, const Root& w) {
  std::vector<Seq> out;
  Seq cur = ctx.empty_seq();
  std::function<void(int, Root)> rec = [&](int idx, Root rem) {
    if (rem.is_zero()) {
      out.push_back(cur);
      return;
    }
    if (idx >= ctx.n_roots()) return;
    const Root& r = ctx.rs.at(idx);
    int maxm = 1 << 20;
    for (int i = 1; i <= rem.rank(); ++i)
      if (r.coeff(i) > 0) maxm = std::min(maxm, rem.coeff(i) / r.coeff(i));
    for (int m = maxm; m >= 0; --m) {
      cur[idx] = m;
      Root next = rem;
      for (int rep = 0; rep < m; ++rep) next = next - r;
      rec(idx + 1, next);
    }
    cur[idx] = 0;
  };
  rec(0, w);
  return out;
}

const std::vector<Seq>& OrderContext::seqs_of(const Root& w) const {
  auto it = seqs_cache_.find(w);
  if (it != seqs_cache_.end()) return it->second;
  return seqs_cache_.emplace(w, sequences_of_weight(*this, w)).first->second;
}

bool OrderContext::pair_simple(int r1, int r2) const {
  auto key = std::minmax(r1, r2);
  auto it = pair_simple_.find(key);
  if (it != pair_simple_.end()) return it->second;
  Seq p = empty_seq();
  p[r1] += 1;
  p[r2] += 1;
  bool simple = true;
  for (const auto& m : seqs_of(weight(p)))
    if (prec_b_class(*this, m, p)) {
      simple = false;
      break;
    }
  pair_simple_[key] = simple;
  return simple;
}

bool is_simple(const OrderContext& ctx, const Seq& m) {
  std::vector<int> support;
  for (int r = 0; r < ctx.n_roots(); ++r)
    if (m[r] > 0) support.push_back(r);
  if (support.size() <= 1) return true;
  for (size_t a = 0; a < support.size(); ++a)
    for (size_t b = a + 1; b < support.size(); ++b)
      if (!ctx.pair_simple(support[a], support[b])) return false;
  return true;
}

namespace {

// Down-closure of {m} under the one-step relation prec_b; no transitivity is
// assumed, so chains are searched inside the closure exactly.
std::vector<Seq> down_closure(const OrderContext& ctx, const Seq& m) {
  const auto& all = ctx.seqs_of(ctx.weight(m));
  std::vector<Seq> closure{m};
  std::vector<bool> in(all.size(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t k = 0; k < all.size(); ++k) {
      if (in[k]) continue;
      for (const auto& c : closure)
        if (prec_b_class(ctx, all[k], c)) {
          in[k] = true;
          closure.push_back(all[k]);
          grew = true;
          break;
        }
    }
  }
  return closure;
}

}  // namespace

std::vector<Seq> minimal_sequences(const OrderContext& ctx, const Seq& s) {
  if (!is_simple(ctx, s)) throw std::invalid_argument("minimal_sequences: s not simple");
  std::vector<Seq> above;
  for (const auto& m : ctx.seqs_of(ctx.weight(s)))
    if (prec_b_class(ctx, s, m)) above.push_back(m);
  std::vector<Seq> out;
  for (const auto& m : above) {
    bool between = false;
    for (const auto& mid : above)
      if (prec_b_class(ctx, mid, m)) {
        between = true;
        break;
      }
    if (!between) out.push_back(m);
  }
  return out;
}

std::vector<std::pair<Root, Root>> minimal_pairs(const OrderContext& ctx, const Root& gamma) {
  std::vector<std::pair<Root, Root>> out;
  for (const auto& m : minimal_sequences(ctx, ctx.single_seq(gamma))) {
    if (!ctx.is_pair(m)) continue;
    std::vector<int> sup;
    for (int r = 0; r < ctx.n_roots(); ++r)
      if (m[r]) sup.push_back(r);
    Root a = ctx.rs.at(sup[0]);
    Root b = ctx.rs.at(sup[1]);
    if (ctx.precedes(sup[1], sup[0])) std::swap(a, b);
    out.push_back({a, b});
  }
  return out;
}

int gdist(const OrderContext& ctx, const Seq& m) {
  if (is_simple(ctx, m)) return 0;
  auto closure = down_closure(ctx, m);
  std::vector<Seq> nodes;
  for (const auto& s : closure)
    if (!is_simple(ctx, s)) nodes.push_back(s);
  // longest chain of one-step relations ending at m, counting nodes
  size_t n = nodes.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (a != b) lt[a][b] = prec_b_class(ctx, nodes[a], nodes[b]);
  std::vector<int> best(n, -1);
  std::vector<int> state(n, 0);
  std::function<int(size_t)> longest = [&](size_t a) -> int {
    if (state[a] == 2) return best[a];
    if (state[a] == 1) throw std::logic_error("prec_b cycle");
    state[a] = 1;
    int v = 1;
    for (size_t b = 0; b < n; ++b)
      if (lt[b][a]) v = std::max(v, 1 + longest(b));
    state[a] = 2;
    best[a] = v;
    return v;
  };
  for (size_t a = 0; a < n; ++a)
    if (nodes[a] == m) return longest(a);
  throw std::logic_error("gdist: target lost");
}

int gdist_pair(const OrderContext& ctx, const Root& a, const Root& b) {
  return gdist(ctx, ctx.pair_seq(a, b));
}

int rds(const OrderContext& ctx, const Root& gamma) {
  if (gamma.height() < 2) throw std::invalid_argument("rds: gamma must be non-simple");
  int best = -1;
  for (int a = 0; a < ctx.n_roots(); ++a)
    for (int b = a + 1; b < ctx.n_roots(); ++b) {
      if (!(ctx.rs.at(a) + ctx.rs.at(b) == gamma)) continue;
      best = std::max(best, gdist_pair(ctx, ctx.rs.at(a), ctx.rs.at(b)));
    }
  if (best < 0) throw std::logic_error("rds: no pairs of that weight");
  return best;
}

std::optional<Seq> socle(const OrderContext& ctx, const Seq& pair) {
  std::vector<Seq> candidates;
  if (is_simple(ctx, pair)) candidates.push_back(pair);
  for (const auto& m : ctx.seqs_of(ctx.weight(pair)))
    if (prec_b_class(ctx, m, pair) && is_simple(ctx, m)) candidates.push_back(m);
  if (candidates.empty()) return std::nullopt;
  if (candidates.size() > 1)
    throw std::logic_error("socle: several simple sequences below the pair");
  return candidates.front();
}

}  // namespace foldar
