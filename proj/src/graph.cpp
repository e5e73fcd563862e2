#include "wonder/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wonder/errors.hpp"

namespace wonder {

namespace {

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Connected components of a vertex list under an edge list, as vertex lists.
std::vector<std::vector<int>> components(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  std::map<int, std::vector<int>> adj;
  for (int v : vertices) adj[v];
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<int, bool> seen;
  std::vector<std::vector<int>> out;
  for (int s : vertices) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

LabeledGraph::LabeledGraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw InputError("edge endpoint outside 1..n");
    if (u == v) throw InputError("self-loops are not allowed");
    edges_.insert(ordered(u, v));
  }
}

bool LabeledGraph::has_edge(int u, int v) const { return edges_.count(ordered(u, v)) > 0; }

Subgraph::Subgraph(std::vector<int> vs, std::vector<Edge> es) : vertices(std::move(vs)), edges(std::move(es)) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("repeated vertex in subgraph");
  for (auto& e : edges) {
    if (e.first == e.second) throw InputError("self-loops are not allowed");
    e = ordered(e.first, e.second);
    if (!std::binary_search(vertices.begin(), vertices.end(), e.first) ||
        !std::binary_search(vertices.begin(), vertices.end(), e.second))
      throw InputError("subgraph edge leaves its vertex set");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Subgraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& vertices) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (std::find(vertices.begin(), vertices.end(), u) != vertices.end() &&
        std::find(vertices.begin(), vertices.end(), v) != vertices.end())
      es.emplace_back(u, v);
  return Subgraph(vertices, es);
}

bool is_vertex_2connected(const Subgraph& g) {
  if (g.vertices.size() < 2) throw InputError("vertex-2-connectivity needs at least two vertices");
  if (components(g.vertices, g.edges).size() != 1) return false;
  if (g.vertices.size() == 2) return true;
  for (int cut : g.vertices) {
    std::vector<int> vs;
    std::vector<Edge> es;
    for (int v : g.vertices)
      if (v != cut) vs.push_back(v);
    for (auto e : g.edges)
      if (e.first != cut && e.second != cut) es.push_back(e);
    if (components(vs, es).size() != 1) return false;
  }
  return true;
}

std::vector<Subgraph> v2c_subgraphs(const LabeledGraph& g) {
  const int n = g.n();
  if (n > 24) throw ResourceError("v2c enumeration is limited to 24 vertices");
  std::vector<Subgraph> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> vs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) vs.push_back(i + 1);
    Subgraph s = induced_subgraph(g, vs);
    if (is_vertex_2connected(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgraph& a, const Subgraph& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

bool is_full_subgraph(const LabeledGraph& g, const Subgraph& f) {
  if (static_cast<int>(f.vertices.size()) != g.n()) return false;
  for (auto e : f.edges)
    if (!g.has_edge(e.first, e.second)) return false;
  std::vector<int> comp_of(static_cast<std::size_t>(g.n()) + 1);
  int c = 0;
  for (const auto& comp : components(f.vertices, f.edges)) {
    for (int v : comp) comp_of[v] = c;
    ++c;
  }
  for (auto e : g.edges())
    if (comp_of[e.first] == comp_of[e.second] && !std::binary_search(f.edges.begin(), f.edges.end(), e))
      return false;
  return true;
}

std::vector<Subgraph> full_subgraph_decomposition(const LabeledGraph& g, const Subgraph& f) {
  if (!is_full_subgraph(g, f)) throw InputError("subgraph is not full");
  // Biconnected components by the edge-stack depth-first search.
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : f.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<int, int> disc, low;
  std::vector<Edge> stack;
  std::vector<Subgraph> blocks;
  int clock = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++clock;
    for (int v : adj[u]) {
      if (!disc.count(v)) {
        stack.push_back(ordered(u, v));
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Edge> es;
          std::vector<int> vs;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            es.push_back(top);
            vs.push_back(top.first);
            vs.push_back(top.second);
          } while (top != ordered(u, v));
          std::sort(vs.begin(), vs.end());
          vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
          blocks.emplace_back(vs, es);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.push_back(ordered(u, v));
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v : f.vertices)
    if (!disc.count(v)) dfs(v, 0);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Polydiagonal polydiagonal_of(int n, const Subgraph& s) {
  std::vector<Block> blocks;
  for (auto& comp : components(s.vertices, s.edges))
    if (comp.size() >= 2) blocks.push_back(comp);
  return Polydiagonal(n, std::move(blocks));
}

std::vector<Polydiagonal> kt_building_set(const LabeledGraph& g) {
  std::vector<Polydiagonal> out;
  if (g.n() < 2) return out;
  for (const auto& s : v2c_subgraphs(g)) out.push_back(polydiagonal_of(g.n(), s));
  return out;
}

bool kt_is_nest(const std::vector<Subgraph>& subgraphs) {
  for (const auto& s : subgraphs)
    if (s.vertices.size() < 2 || !is_vertex_2connected(s))
      throw InputError("kt_is_nest expects vertex-2-connected subgraphs");
  auto included = [](const Subgraph& a, const Subgraph& b) {
    return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end()) &&
           std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
  };
  for (std::size_t i = 0; i < subgraphs.size(); ++i)
    for (std::size_t j = i + 1; j < subgraphs.size(); ++j) {
      const auto& a = subgraphs[i];
      const auto& b = subgraphs[j];
      std::vector<int> common;
      std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                            std::back_inserter(common));
      if (common.size() <= 1 || included(a, b) || included(b, a)) continue;
      return false;
    }
  return true;
}

}  // namespace wonder
