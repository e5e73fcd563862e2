#include <functional>
#include <set>

#include "doctest.h"
#include "wonder/errors.hpp"
#include "wonder/polydiagonal.hpp"

using namespace wonder;

namespace {

Polydiagonal P(int n, std::vector<Block> b) { return Polydiagonal(n, std::move(b)); }
AnchoredPolydiagonal A(int n, Block m, std::optional<Anchor> a) {
  return AnchoredPolydiagonal(n, {AnchoredBlock{std::move(m), a}});
}

// All polydiagonals of X^n (including the ambient), by brute force over label vectors.
std::vector<Polydiagonal> all_polydiagonals(int n) {
  std::set<Polydiagonal> out;
  std::vector<int> lab(static_cast<std::size_t>(n));
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      std::vector<Block> blocks;
      for (int v = 0; v < n; ++v) {
        Block b;
        for (int k = 0; k < n; ++k)
          if (lab[k] == v) b.push_back(k + 1);
        if (b.size() >= 2) blocks.push_back(b);
      }
      out.insert(Polydiagonal(n, blocks));
      return;
    }
    for (int v = 0; v < n; ++v) {
      lab[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return {out.begin(), out.end()};
}

// Point set of a polydiagonal over the alphabet {0..n-1}: tuples equal within blocks.
std::set<std::vector<int>> points(const Polydiagonal& p) {
  std::set<std::vector<int>> out;
  int n = p.n();
  std::vector<int> t(static_cast<std::size_t>(n));
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      for (const auto& b : p.blocks())
        for (int x : b)
          if (t[x - 1] != t[b[0] - 1]) return;
      out.insert(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// Point set of an anchored polydiagonal: values 0, 1, 2 are the anchors, 3.. are generic.
std::set<std::vector<int>> points(const AnchoredPolydiagonal& p) {
  std::set<std::vector<int>> out;
  int k = p.n() - 3;
  int alphabet = 3 + k;
  std::vector<int> t(static_cast<std::size_t>(k));
  std::function<void(int)> go = [&](int i) {
    if (i == k) {
      for (const auto& b : p.blocks())
        for (int x : b.members) {
          if (t[x - 4] != t[b.members[0] - 4]) return;
          if (b.anchor && t[x - 4] != static_cast<int>(*b.anchor)) return;
        }
      out.insert(t);
      return;
    }
    for (int v = 0; v < alphabet; ++v) {
      t[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

std::set<std::vector<int>> meet(const std::set<std::vector<int>>& a, const std::set<std::vector<int>>& b) {
  std::set<std::vector<int>> out;
  for (const auto& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

std::vector<AnchoredPolydiagonal> anchored_generators(int n) {
  std::vector<AnchoredPolydiagonal> out;
  std::vector<int> coords;
  for (int i = 4; i <= n; ++i) coords.push_back(i);
  for (unsigned mask = 0; mask < (1u << coords.size()); ++mask) {
    Block b;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (mask >> i & 1) b.push_back(coords[i]);
    if (b.size() < 2) continue;
    out.push_back(A(n, b, std::nullopt));
    for (Anchor a : {Anchor::zero, Anchor::one, Anchor::infinity}) out.push_back(A(n, b, a));
  }
  return out;
}

}  // namespace

TEST_CASE("intersect_partitions examples") {
  CHECK(intersect_partitions(P(3, {{1, 2}}), P(3, {{1, 3}})) == P(3, {{1, 2, 3}}));
  CHECK(intersect_partitions(P(4, {{1, 2}}), P(4, {{3, 4}})).blocks() == std::vector<Block>{{1, 2}, {3, 4}});
  CHECK_FALSE(intersect_partitions(A(5, {4, 5}, Anchor::zero), A(5, {4, 5}, Anchor::one)).has_value());
  CHECK_THROWS_AS(intersect_partitions(P(3, {{1, 2}}), P(4, {{1, 2}})), InputError);
}

TEST_CASE("partition_contains examples") {
  CHECK(partition_contains(P(3, {{1, 2}}), P(3, {{1, 2, 3}})));
  CHECK_FALSE(partition_contains(P(3, {{1, 2}}), P(3, {{1, 3}})));
  CHECK(partition_contains(A(5, {4, 5}, std::nullopt), A(5, {4, 5}, Anchor::zero)));
}

TEST_CASE("partition_dim examples") {
  CHECK(partition_dim(P(4, {{1, 2}}), DimMultiplier::symbolic()) == Affine{3, 0});
  CHECK(partition_dim(P(4, {{1, 2}}), DimMultiplier::symbolic()).to_string() == "3m");
  CHECK(partition_dim(P(4, {{1, 2, 3, 4}}), DimMultiplier::symbolic()) == Affine{1, 0});
  CHECK(partition_dim(P(4, {{1, 2}}), DimMultiplier::fixed(2)) == Affine::of(6));
  CHECK(partition_dim(A(5, {4, 5}, Anchor::zero)) == Affine::of(0));
  CHECK(partition_dim(A(5, {4, 5}, std::nullopt)) == Affine::of(1));
  CHECK(partition_dim(AnchoredPolydiagonal::ambient(6)) == Affine::of(3));
}

TEST_CASE("to_linear examples") {
  CHECK(to_linear(P(2, {{1, 2}})).conormal() == std::vector<RationalRow>{{Rational(1), Rational(-1)}});
  CHECK(to_linear(P(3, {{1, 2, 3}})).codim() == 2);
  CHECK(to_linear(P(4, {{1, 2}, {3, 4}})).codim() == 2);
  CHECK_THROWS_AS(to_linear(A(5, {4, 5}, Anchor::zero)), UnsupportedError);
}

TEST_CASE("invalid partitions are rejected") {
  CHECK_THROWS_AS(P(3, {{1}}), InputError);
  CHECK_THROWS_AS(P(3, {{1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(P(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(A(5, {3, 4}, std::nullopt), InputError);
  CHECK_THROWS_AS(AnchoredPolydiagonal(6, {AnchoredBlock{{4, 5}, Anchor::zero}, AnchoredBlock{{6, 7}, Anchor::zero}}),
                  InputError);
}

TEST_CASE("partition lattice laws and point-set oracle, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto all = all_polydiagonals(n);
    CHECK(all.size() == std::vector<std::size_t>{0, 0, 2, 5, 15}[n]);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto ab = intersect_partitions(a, b);
        CHECK(ab == intersect_partitions(b, a));
        CHECK(intersect_partitions(a, a) == a);
        CHECK(points(ab) == meet(points(a), points(b)));
        CHECK(partition_contains(a, b) == (ab == b));
        // Linear images: intersection and containment agree.
        CHECK(to_linear(ab) == intersect_subspaces(to_linear(a), to_linear(b)));
        CHECK(partition_contains(a, b) == contains_subspace(to_linear(a), to_linear(b)));
        CHECK(partition_dim(a, DimMultiplier::fixed(1)) == Affine::of(to_linear(a).dim()));
        for (const auto& c : all)
          CHECK(intersect_partitions(ab, c) == intersect_partitions(a, intersect_partitions(b, c)));
      }
  }
}

TEST_CASE("anchored intersections match the point-set oracle") {
  for (int n = 5; n <= 6; ++n) {
    auto gens = anchored_generators(n);
    std::set<AnchoredPolydiagonal> closed(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<AnchoredPolydiagonal> cur(closed.begin(), closed.end());
      for (const auto& a : cur)
        for (const auto& b : cur)
          if (auto x = intersect_partitions(a, b); x && closed.insert(*x).second) grew = true;
    }
    for (const auto& a : closed)
      for (const auto& b : closed) {
        auto x = intersect_partitions(a, b);
        auto expect = meet(points(a), points(b));
        if (x)
          CHECK(points(*x) == expect);
        else
          CHECK(expect.empty());
        CHECK(partition_contains(a, b) == (x && *x == b));
      }
  }
}
