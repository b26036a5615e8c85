#include "foldar/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace foldar {

namespace {

using nlohmann::json;

std::string vertex_name(int res, int p2) {
  std::string p = p2 < 0 ? "m" + std::to_string(-p2) : std::to_string(p2);
  return "v" + std::to_string(res) + "_" + p;
}

void dot_body(std::ostream& os, const std::vector<int>& residues,
              const std::vector<int>& pos, const std::vector<Root>& labels,
              const std::vector<bool>& star,
              const std::vector<std::pair<int, int>>& arrows) {
  int n = static_cast<int>(residues.size());
  std::map<int, std::vector<int>> by_res;
  for (int v = 0; v < n; ++v) by_res[residues[v]].push_back(v);
  for (auto& [res, verts] : by_res) {
    os << "  { rank=same;";
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    for (int v : verts) os << " " << vertex_name(res, pos[v]) << ";";
    os << " }\n";
  }
  for (auto& [res, verts] : by_res)
    for (int v : verts) {
      os << "  " << vertex_name(res, pos[v]) << " [label=\"" << labels[v].str()
         << "\"";
      if (star[v]) os << " shape=diamond";
      os << "];\n";
    }
  auto sorted = arrows;
  std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) {
    return std::tuple(residues[a.first], pos[a.first], residues[a.second]) <
           std::tuple(residues[b.first], pos[b.first], residues[b.second]);
  });
  for (auto [k, j] : sorted)
    os << "  " << vertex_name(residues[k], pos[k]) << " -> "
       << vertex_name(residues[j], pos[j]) << ";\n";
}

json root_json(const Root& r) {
  if (auto s = r.segment()) return json::array({s->first, s->second});
  return json(r.c);
}

json vertices_json(const std::vector<int>& residues, const std::vector<int>& pos,
                   const std::vector<Root>& labels,
                   const std::vector<std::string>& kinds) {
  json verts = json::array();
  for (size_t v = 0; v < residues.size(); ++v) {
    json e;
    e["root"] = root_json(labels[v]);
    e["residue"] = residues[v];
    e["pos2x"] = pos[v];
    e["kind"] = kinds[v];
    verts.push_back(e);
  }
  return verts;
}

}  // namespace

std::string to_dot(const ARQuiver& gamma) {
  if (!gamma.has_coords())
    throw std::invalid_argument("to_dot: quiver has no coordinates");
  std::ostringstream os;
  os << "digraph gamma {\n  rankdir=RL;\n";
  std::vector<int> residues(gamma.size());
  std::vector<bool> star(gamma.size(), false);
  for (int v = 0; v < gamma.size(); ++v) residues[v] = gamma.residue(v);
  dot_body(os, residues, gamma.pos2, gamma.labels, star, gamma.arrows);
  os << "}\n";
  return os.str();
}

std::string to_dot(const TwistedCoordQuiver& q) {
  std::ostringstream os;
  os << "digraph upsilon {\n  rankdir=RL;\n";
  std::vector<int> residues(q.size()), pos(q.size());
  std::vector<bool> star(q.size());
  for (int v = 0; v < q.size(); ++v) {
    residues[v] = q.ups.residue(v);
    pos[v] = q.ups.pos2[v];
    star[v] = !q.induced[v];
  }
  dot_body(os, residues, pos, q.ups.labels, star, q.ups.arrows);
  os << "}\n";
  return os.str();
}

std::string to_dot(const FoldedQuiver& q) {
  std::ostringstream os;
  os << "digraph folded_upsilon {\n  rankdir=RL;\n";
  std::vector<int> pos(q.size());
  std::vector<bool> star(q.size());
  for (int v = 0; v < q.size(); ++v) {
    pos[v] = q.fpos(v);
    star[v] = !q.twisted.induced[v];
  }
  dot_body(os, q.fres, pos, q.twisted.ups.labels, star, q.twisted.ups.arrows);
  os << "}\n";
  return os.str();
}

std::string to_json(const TwistedCoordQuiver& q) {
  json j;
  j["family"] = q.ups.dg.name();
  j["n"] = q.n;
  j["class"] = {{"word", q.ups.word}, {"side", std::string(1, side_char(q.tcls.side))},
                {"parent_quiver", q.tcls.parent.orientation_string()}};
  std::vector<int> residues(q.size()), pos(q.size());
  std::vector<std::string> kinds(q.size());
  for (int v = 0; v < q.size(); ++v) {
    residues[v] = q.ups.residue(v);
    pos[v] = q.ups.pos2[v];
    kinds[v] = kind_name(q.kind[v]);
  }
  j["vertices"] = vertices_json(residues, pos, q.ups.labels, kinds);
  json arrows = json::array();
  auto sorted = q.ups.arrows;
  std::sort(sorted.begin(), sorted.end());
  for (auto [k, t] : sorted) arrows.push_back(json::array({k, t}));
  j["arrows"] = arrows;
  return j.dump(2) + "\n";
}

std::string to_json(const FoldedQuiver& q) {
  json j;
  j["family"] = q.twisted.ups.dg.name();
  j["n"] = q.n();
  j["folded"] = true;
  j["class"] = {{"word", q.twisted.ups.word},
                {"side", std::string(1, side_char(q.twisted.tcls.side))},
                {"parent_quiver", q.twisted.tcls.parent.orientation_string()}};
  std::vector<int> pos(q.size());
  std::vector<std::string> kinds(q.size());
  for (int v = 0; v < q.size(); ++v) {
    pos[v] = q.fpos(v);
    kinds[v] = kind_name(q.twisted.kind[v]);
  }
  j["vertices"] = vertices_json(q.fres, pos, q.twisted.ups.labels, kinds);
  json arrows = json::array();
  auto sorted = q.twisted.ups.arrows;
  std::sort(sorted.begin(), sorted.end());
  for (auto [k, t] : sorted) arrows.push_back(json::array({k, t}));
  j["arrows"] = arrows;
  return j.dump(2) + "\n";
}

}  // namespace foldar
