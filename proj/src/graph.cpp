#include "ccc/graph.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace ccc {

std::int64_t CCCGraph::edge_count() const {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if (adj[i][j]) ++e;
  return e;
}

namespace {

bool classes_commute(const GroupSpec& spec, const ConjugacyClass& x,
                     const ConjugacyClass& y, AdjacencyScan scan) {
  if (scan == AdjacencyScan::FullPairs) {
    for (const auto& p : x.members)
      for (const auto& q : y.members)
        if (commute(spec, p, q)) return true;
    return false;
  }
  // Conjugating a commuting pair stays a commuting pair within the same
  // classes, so fixing one side's representative loses nothing. The full
  // scan above is kept to certify this in tests.
  for (const auto& q : y.members)
    if (commute(spec, x.representative, q)) return true;
  for (const auto& p : x.members)
    if (commute(spec, p, y.representative)) return true;
  return false;
}

}  // namespace

CCCGraph build_ccc(const GroupSpec& spec, AdjacencyScan scan) {
  CCCGraph g;
  g.spec = spec;
  for (auto& cls : conjugacy_classes(spec))
    if (!cls.is_central) g.classes.push_back(std::move(cls));
  if (g.classes.empty())
    throw AbelianGroupError(spec.name() + " is abelian: the commuting conjugacy "
                            "class graph has no vertices");
  const int k = g.vertex_count();
  g.adj.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (classes_commute(spec, g.classes[i], g.classes[j], scan))
        g.adj[i][j] = g.adj[j][i] = true;
  return g;
}

std::int64_t UnionShape::vertex_count() const {
  std::int64_t v = 0;
  for (const auto& p : parts) v += p.count * p.size;
  return v;
}

std::string UnionShape::str() const {
  if (parts.empty()) return "empty";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    if (p.count != 1) out += std::to_string(p.count);
    out += "K" + std::to_string(p.size);
  }
  return out;
}

UnionShape make_shape(std::vector<UnionShape::Part> raw) {
  std::map<std::int64_t, std::int64_t> by_size;
  for (const auto& p : raw)
    if (p.size > 0 && p.count > 0) by_size[p.size] += p.count;
  UnionShape shape;
  for (auto it = by_size.rbegin(); it != by_size.rend(); ++it)
    shape.parts.push_back({it->second, it->first});
  return shape;
}

UnionShape complete_union_shape(const CCCGraph& g) {
  const int k = g.vertex_count();
  std::vector<int> comp(k, -1);
  std::vector<UnionShape::Part> raw;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = s;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < k; ++v)
        if (g.adj[u][v] && comp[v] < 0) { comp[v] = s; stack.push_back(v); }
    }
    for (int u : members)
      for (int v : members)
        if (u != v && !g.adj[u][v]) {
          std::sort(members.begin(), members.end());
          throw NotUnionOfCliquesError(
              g.spec.name() + ": a connected component of " +
              std::to_string(members.size()) + " vertices is not complete",
              members);
        }
    raw.push_back({1, static_cast<std::int64_t>(members.size())});
  }
  return make_shape(std::move(raw));
}

UnionShape expected_shape(const GroupSpec& spec, ShapeMode mode) {
  const std::int64_t n = spec.n, m = spec.m;
  switch (spec.family) {
    case Family::Dihedral:
      if (n % 2 == 1) return make_shape({{1, (n - 1) / 2}, {1, 1}});
      if (n % 4 == 0) return make_shape({{1, n / 2 - 1}, {2, 1}});
      return make_shape({{1, n / 2 - 1}, {1, 2}});
    case Family::Dicyclic:
      if (m % 2 == 1) return make_shape({{1, m - 1}, {1, 2}});
      return make_shape({{1, m - 1}, {2, 1}});
    case Family::UMeta:
      if (m == 2 && mode == ShapeMode::Strict)
        throw AbelianGroupError(spec.name() + " is abelian: no CCC graph exists "
                                "(the m=2 relation forces y = y^-1)");
      if (m % 2 == 1) return make_shape({{1, n * (m - 1) / 2}, {1, n}});
      if (m % 4 == 0 || m == 2) return make_shape({{1, n * (m - 2) / 2}, {2, n}});
      // m = 2 mod 4, m >= 6: the 2n odd-power classes form one clique
      return make_shape({{1, n * (m - 2) / 2}, {1, 2 * n}});
    case Family::VGroup:
      if (n % 2 == 1) return make_shape({{1, 2 * n - 1}, {2, 1}});
      return make_shape({{1, 2 * n - 2}, {2, 2}});
    case Family::SemiDihedral:
      if (n % 2 == 1) return make_shape({{1, 4}, {1, 2 * n - 2}});
      return make_shape({{1, 2 * n - 1}, {2, 1}});
  }
  throw std::invalid_argument("unknown family");
}

std::string to_adjacency_json(const CCCGraph& g) {
  nlohmann::json j;
  j["group"] = g.spec.name();
  j["vertexCount"] = g.vertex_count();
  auto labels = nlohmann::json::array();
  for (const auto& cls : g.classes)
    labels.push_back({cls.representative.a, cls.representative.b});
  j["labels"] = std::move(labels);
  auto adjacency = nlohmann::json::array();
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto row = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.adj[u][v]) row.push_back(v);
    adjacency.push_back(std::move(row));
  }
  j["adjacency"] = std::move(adjacency);
  return j.dump(2);
}

std::string to_edge_list(const CCCGraph& g) {
  std::string out;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adj[u][v])
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace ccc
