#include "foldar/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace foldar {

namespace {

bool dependent(const DynkinDiagram& dg, int a, int b) {
  return a == b || dg.adjacent(a, b);
}

// depth[k] = 1 + max depth over earlier dependent occurrences.
std::vector<int> heap_depths(const DynkinDiagram& dg, const Word& w) {
  std::vector<int> depth(w.size(), 1);
  for (size_t k = 0; k < w.size(); ++k)
    for (size_t j = 0; j < k; ++j)
      if (dependent(dg, w[j], w[k])) depth[k] = std::max(depth[k], depth[j] + 1);
  return depth;
}

// Positions of occurrences with no earlier (resp. later) dependent occurrence.
std::vector<size_t> minimal_positions(const DynkinDiagram& dg, const Word& w) {
  std::vector<size_t> out;
  for (size_t k = 0; k < w.size(); ++k) {
    bool min = true;
    for (size_t j = 0; j < k && min; ++j)
      if (dependent(dg, w[j], w[k])) min = false;
    if (min) out.push_back(k);
  }
  return out;
}

std::vector<size_t> maximal_positions(const DynkinDiagram& dg, const Word& w) {
  std::vector<size_t> out;
  for (size_t k = 0; k < w.size(); ++k) {
    bool max = true;
    for (size_t j = k + 1; j < w.size() && max; ++j)
      if (dependent(dg, w[j], w[k])) max = false;
    if (max) out.push_back(k);
  }
  return out;
}

Word erase_position(const Word& w, size_t pos) {
  Word out = w;
  out.erase(out.begin() + static_cast<long>(pos));
  return out;
}

}  // namespace

Word cf_normal_form(const DynkinDiagram& dg, const Word& w) {
  auto depth = heap_depths(dg, w);
  int layers = 0;
  for (int d : depth) layers = std::max(layers, d);
  Word out;
  out.reserve(w.size());
  for (int d = 1; d <= layers; ++d) {
    Word layer;
    for (size_t k = 0; k < w.size(); ++k)
      if (depth[k] == d) layer.push_back(w[k]);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

CommutationClass::CommutationClass(const DynkinDiagram& dg, const Word& w,
                                   bool require_reduced)
    : dg_(dg) {
  for (int x : w) dg_.check_index(x);
  if (require_reduced && !is_reduced(dg, w))
    throw std::invalid_argument("CommutationClass: word is not reduced");
  canon_ = cf_normal_form(dg, w);
}

bool CommutationClass::contains(const Word& w) const {
  if (w.size() != canon_.size()) return false;
  for (int x : w)
    if (x < 1 || x > dg_.rank) return false;
  return cf_normal_form(dg_, w) == canon_;
}

std::set<int> CommutationClass::sinks() const {
  std::set<int> out;
  for (size_t k : minimal_positions(dg_, canon_)) out.insert(canon_[k]);
  return out;
}

std::set<int> CommutationClass::sources() const {
  std::set<int> out;
  for (size_t k : maximal_positions(dg_, canon_)) out.insert(canon_[k]);
  return out;
}

Word CommutationClass::member_starting_with(int i) const {
  for (size_t k : minimal_positions(dg_, canon_))
    if (canon_[k] == i) {
      Word rest = erase_position(canon_, k);
      rest.insert(rest.begin(), i);
      return rest;
    }
  throw std::invalid_argument("member_starting_with: " + std::to_string(i) +
                              " is not a sink of the class");
}

Word CommutationClass::member_ending_with(int i) const {
  for (size_t k : maximal_positions(dg_, canon_))
    if (canon_[k] == i) {
      Word rest = erase_position(canon_, k);
      rest.push_back(i);
      return rest;
    }
  throw std::invalid_argument("member_ending_with: " + std::to_string(i) +
                              " is not a source of the class");
}

std::vector<Word> CommutationClass::member_words(size_t cap) const {
  std::vector<Word> out;
  Word prefix;
  Word rest = canon_;
  bool overflow = false;
  std::function<void()> rec = [&]() {
    if (overflow) return;
    if (rest.empty()) {
      out.push_back(prefix);
      if (out.size() > cap) overflow = true;
      return;
    }
    for (size_t k : minimal_positions(dg_, rest)) {
      prefix.push_back(rest[k]);
      Word saved = rest;
      rest = erase_position(rest, k);
      rec();
      rest = saved;
      prefix.pop_back();
    }
  };
  rec();
  if (overflow) return {};
  return out;
}

size_t CommutationClass::count_member_words(size_t cap) const {
  size_t count = 0;
  Word rest = canon_;
  std::function<void()> rec = [&]() {
    if (count >= cap) return;
    if (rest.empty()) {
      ++count;
      return;
    }
    for (size_t k : minimal_positions(dg_, rest)) {
      Word saved = rest;
      rest = erase_position(rest, k);
      rec();
      rest = saved;
      if (count >= cap) return;
    }
  };
  rec();
  return count;
}

CommutationClass reflect_right(const CommutationClass& c, int i) {
  auto snk = c.sinks();
  if (!snk.count(i)) return c;
  Word w = c.member_starting_with(i);
  auto star = longest_involution(c.diagram());
  Word next(w.begin() + 1, w.end());
  next.push_back(star[i]);
  return CommutationClass(c.diagram(), next);
}

CommutationClass reflect_left(const CommutationClass& c, int i) {
  auto src = c.sources();
  if (!src.count(i)) return c;
  Word w = c.member_ending_with(i);
  auto star = longest_involution(c.diagram());
  Word next;
  next.push_back(star[i]);
  next.insert(next.end(), w.begin(), w.end() - 1);
  return CommutationClass(c.diagram(), next);
}

std::vector<CommutationClass> cluster_point(const CommutationClass& c) {
  std::set<Word> seen{c.canonical()};
  std::deque<CommutationClass> queue{c};
  std::vector<CommutationClass> out{c};
  while (!queue.empty()) {
    CommutationClass cur = queue.front();
    queue.pop_front();
    std::vector<CommutationClass> nbrs;
    for (int i : cur.sinks()) nbrs.push_back(reflect_right(cur, i));
    for (int i : cur.sources()) nbrs.push_back(reflect_left(cur, i));
    for (auto& nb : nbrs)
      if (seen.insert(nb.canonical()).second) {
        out.push_back(nb);
        queue.push_back(nb);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterComposition::constant() const {
  for (int e : entries)
    if (e != entries.front()) return false;
  return !entries.empty();
}

std::string CoxeterComposition::str() const {
  std::string s = "(";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(entries[k]);
  }
  return s + ")";
}

CoxeterComposition coxeter_composition(const CommutationClass& c,
                                       const DiagramAutomorphism& sigma) {
  auto star = longest_involution(c.diagram());
  for (int i = 1; i <= c.diagram().rank; ++i)
    if (sigma.orbit_index(i) != sigma.orbit_index(star[i]))
      throw std::invalid_argument("coxeter_composition: sigma incompatible with *");
  auto orbits = sigma.orbits();
  CoxeterComposition comp;
  comp.entries.assign(orbits.size(), 0);
  for (int x : c.canonical()) comp.entries[sigma.orbit_index(x)] += 1;
  return comp;
}

bool is_foldable(const std::vector<CommutationClass>& point,
                 const DiagramAutomorphism& sigma) {
  if (point.empty()) return false;
  return coxeter_composition(point.front(), sigma).constant();
}

Word subword_restrict(const Word& w, const std::set<int>& J) {
  Word out;
  for (int x : w)
    if (J.count(x)) out.push_back(x);
  return out;
}

}  // namespace foldar
