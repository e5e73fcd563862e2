#pragma once

#include <set>
#include <utility>
#include <vector>

#include "wonder/polydiagonal.hpp"

namespace wonder {

using Edge = std::pair<int, int>;

// Simple graph on vertices 1..n.
class LabeledGraph {
 public:
  LabeledGraph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

 private:
  int n_;
  std::set<Edge> edges_;
};

struct Subgraph {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted, u < v

  Subgraph() = default;
  Subgraph(std::vector<int> vertices, std::vector<Edge> edges);

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;
};

Subgraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& vertices);

bool is_vertex_2connected(const Subgraph& g);

// One representative per diagonal: the induced subgraph on each vertex set that is 2-connected.
std::vector<Subgraph> v2c_subgraphs(const LabeledGraph& g);

bool is_full_subgraph(const LabeledGraph& g, const Subgraph& f);
std::vector<Subgraph> full_subgraph_decomposition(const LabeledGraph& g, const Subgraph& f);

// Delta of a subgraph: one block per connected component with >= 2 vertices.
Polydiagonal polydiagonal_of(int n, const Subgraph& s);

std::vector<Polydiagonal> kt_building_set(const LabeledGraph& g);

// Pairwise criterion: disjoint, one shared vertex, or nested.
bool kt_is_nest(const std::vector<Subgraph>& subgraphs);

}  // namespace wonder
