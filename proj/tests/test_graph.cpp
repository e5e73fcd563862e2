#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wonder/arrangement.hpp"
#include "wonder/errors.hpp"
#include "wonder/graph.hpp"
#include "wonder/instance.hpp"
#include "wonder/nests.hpp"

using namespace wonder;

namespace {

LabeledGraph path3() { return LabeledGraph(3, {{1, 2}, {2, 3}}); }
LabeledGraph complete(int n) {
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
  return LabeledGraph(n, es);
}

std::set<std::vector<int>> vertex_sets(const std::vector<Subgraph>& gs) {
  std::set<std::vector<int>> out;
  for (const auto& s : gs) out.insert(s.vertices);
  return out;
}

// Vertex sets of 2-connected subgraphs spanned by edge subsets, by brute force.
std::set<std::vector<int>> v2c_oracle(int n, const std::vector<Edge>& edges) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
    std::vector<Edge> es;
    std::set<int> vset;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) {
        es.push_back(edges[i]);
        vset.insert(edges[i].first);
        vset.insert(edges[i].second);
      }
    std::vector<int> vs(vset.begin(), vset.end());
    bool ok = oracle::connected(vs, es);
    if (vs.size() > 2)
      for (int cut : vs) {
        std::vector<int> rest;
        for (int v : vs)
          if (v != cut) rest.push_back(v);
        if (!oracle::connected(rest, es)) ok = false;
      }
    if (ok) out.insert(vs);
  }
  (void)n;
  return out;
}

}  // namespace

TEST_CASE("is_vertex_2connected examples") {
  CHECK(is_vertex_2connected(Subgraph({1, 2}, {{1, 2}})));
  CHECK(is_vertex_2connected(Subgraph({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}})));
  CHECK_FALSE(is_vertex_2connected(Subgraph({1, 2, 3}, {{1, 2}, {2, 3}})));
  CHECK_THROWS_AS(is_vertex_2connected(Subgraph({1}, {})), InputError);
}

TEST_CASE("v2c_subgraphs examples") {
  CHECK(v2c_subgraphs(complete(3)).size() == 4);
  CHECK(vertex_sets(v2c_subgraphs(path3())) == std::set<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(v2c_subgraphs(LabeledGraph(2, {{1, 2}})).size() == 1);
}

TEST_CASE("v2c_subgraphs matches edge-subset enumeration for every graph on <= 5 vertices") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& es : oracle::all_graphs(n)) {
      LabeledGraph g(n, es);
      CHECK(vertex_sets(v2c_subgraphs(g)) == v2c_oracle(n, es));
    }
}

TEST_CASE("full_subgraph_decomposition examples") {
  auto k4 = complete(4);
  auto tri = Subgraph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {1, 3}});
  auto d = full_subgraph_decomposition(k4, tri);
  REQUIRE(d.size() == 1);
  CHECK(d[0].vertices == std::vector<int>{1, 2, 3});
  auto p = full_subgraph_decomposition(path3(), Subgraph({1, 2, 3}, {{1, 2}, {2, 3}}));
  REQUIRE(p.size() == 2);
  CHECK(p[0].vertices == std::vector<int>{1, 2});
  CHECK(p[1].vertices == std::vector<int>{2, 3});
  CHECK(full_subgraph_decomposition(k4, Subgraph({1, 2, 3, 4}, {})).empty());
  // Path 1-2-3 inside the triangle is not full: edge 13 joins one component.
  CHECK_THROWS_AS(full_subgraph_decomposition(complete(3), Subgraph({1, 2, 3}, {{1, 2}, {2, 3}})), InputError);
  CHECK_THROWS_AS(full_subgraph_decomposition(k4, Subgraph({1, 2, 3}, {{1, 2}})), InputError);
}

TEST_CASE("kt_building_set examples") {
  auto names = [](const std::vector<Polydiagonal>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(p.label());
    return out;
  };
  CHECK(names(kt_building_set(complete(3))) == std::set<std::string>{"Δ12", "Δ13", "Δ23", "Δ123"});
  CHECK(names(kt_building_set(path3())) == std::set<std::string>{"Δ12", "Δ23"});
  CHECK(names(kt_building_set(LabeledGraph(2, {{1, 2}}))) == std::set<std::string>{"Δ12"});
}

TEST_CASE("kt_building_set of the complete graph is Fulton-MacPherson, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::set<Polydiagonal> expect;
    for (const auto& b : oracle::all_diagonal_blocks(n)) expect.insert(Polydiagonal(n, {b}));
    auto got = kt_building_set(complete(n));
    CHECK(std::set<Polydiagonal>(got.begin(), got.end()) == expect);
  }
}

TEST_CASE("full subgraphs correspond to the induced arrangement, n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& es : oracle::all_graphs(n)) {
      LabeledGraph g(n, es);
      auto inst = generate_kt(g, DimMultiplier::fixed(1));
      std::set<Polydiagonal> arrangement;
      if (!inst.building.empty()) {
        auto& sp = dynamic_cast<DiagonalSpace&>(*inst.space);
        for (ElemId e : close_intersections(sp, inst.building)) arrangement.insert(sp.value(e));
      }
      std::set<Polydiagonal> from_full;
      std::vector<Edge> all(g.edges().begin(), g.edges().end());
      std::vector<int> vs;
      for (int i = 1; i <= n; ++i) vs.push_back(i);
      for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (mask >> i & 1) sub.push_back(all[i]);
        Subgraph f(vs, sub);
        if (!is_full_subgraph(g, f)) continue;
        Polydiagonal p = polydiagonal_of(n, f);
        // The blocks of a full subgraph intersect to its diagonal.
        Polydiagonal acc = Polydiagonal::ambient(n);
        for (const auto& blk : full_subgraph_decomposition(g, f))
          acc = intersect_partitions(acc, polydiagonal_of(n, blk));
        CHECK(acc == p);
        if (!p.is_ambient()) CHECK(from_full.insert(p).second);
      }
      CHECK(from_full == arrangement);
    }
}

TEST_CASE("kt_is_nest examples") {
  Subgraph e12({1, 2}, {{1, 2}}), e23({2, 3}, {{2, 3}}), e13({1, 3}, {{1, 3}});
  Subgraph tri({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(kt_is_nest({e12, e23}));
  CHECK(kt_is_nest({e12, tri}));
  // The pairwise criterion accepts this pair even though it is not a nest of the FM building set.
  CHECK(kt_is_nest({e12, e13}));
  CHECK_FALSE(kt_is_nest({Subgraph({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}), Subgraph({2, 3, 4}, {{2, 3}, {3, 4}, {2, 4}})}));
  CHECK_THROWS_AS(kt_is_nest({Subgraph({1, 2, 3}, {{1, 2}, {2, 3}})}), InputError);

  // Generic check on the path graph agrees for {12, 23}.
  auto inst = generate_kt(path3(), DimMultiplier::fixed(1));
  CHECK(is_nest(*inst.space, inst.building, inst.building));
}

TEST_CASE("pairwise nest criterion against the generic checker, graphs on <= 4 vertices") {
  std::size_t subsets = 0, divergences = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& es : oracle::all_graphs(n)) {
      LabeledGraph g(n, es);
      auto subs = v2c_subgraphs(g);
      if (subs.empty()) continue;
      auto inst = generate_kt(g, DimMultiplier::fixed(1));
      std::vector<ElemId> ids;
      for (const auto& s : subs) ids.push_back(inst.by_name(polydiagonal_of(n, s).label()));
      for (unsigned mask = 0; mask < (1u << subs.size()); ++mask) {
        std::vector<Subgraph> t;
        std::vector<ElemId> tid;
        for (std::size_t i = 0; i < subs.size(); ++i)
          if (mask >> i & 1) {
            t.push_back(subs[i]);
            tid.push_back(ids[i]);
          }
        ++subsets;
        bool generic = is_nest(*inst.space, inst.building, tid);
        bool pairwise = kt_is_nest(t);
        // The pairwise condition is necessary for every nest.
        CHECK((!generic || pairwise));
        if (generic != pairwise) ++divergences;
      }
    }
  MESSAGE("pairwise criterion: ", divergences, " of ", subsets, " subsets accepted but not nests");
  CHECK(divergences > 0);
}
