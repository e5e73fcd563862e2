#include "wonder/polydiagonal.hpp"

#include <algorithm>
#include <numeric>

#include "wonder/errors.hpp"

namespace wonder {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string join_members(const Block& b) {
  std::string out;
  bool wide = std::any_of(b.begin(), b.end(), [](int x) { return x > 9; });
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (wide && i) out += ".";
    out += std::to_string(b[i]);
  }
  return out;
}

// Sort members, sort blocks, and check the partition invariants on [lo, n].
void normalize_blocks(std::vector<Block>& blocks, int lo, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto& b : blocks) {
    if (b.size() < 2) throw InputError("blocks must have at least two members");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < lo || x > n)
        throw InputError("block member " + std::to_string(x) + " outside " + std::to_string(lo) +
                         ".." + std::to_string(n));
      if (seen[x]) throw InputError("blocks are not disjoint at " + std::to_string(x));
      seen[x] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end());
}

}  // namespace

DimMultiplier DimMultiplier::fixed(long long m) {
  if (m < 1) throw InputError("dim X must be a positive integer");
  return DimMultiplier{m};
}

Affine DimMultiplier::times(long long k) const {
  return value ? Affine{0, k * *value} : Affine{k, 0};
}

std::string DimMultiplier::to_string() const { return value ? std::to_string(*value) : "m"; }

Polydiagonal::Polydiagonal(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 2) throw InputError("polydiagonal needs n >= 2");
  normalize_blocks(blocks_, 1, n);
}

int Polydiagonal::rank() const {
  int r = 0;
  for (const auto& b : blocks_) r += static_cast<int>(b.size()) - 1;
  return r;
}

std::string Polydiagonal::label() const {
  if (blocks_.empty()) return "X^" + std::to_string(n_);
  if (blocks_.size() == 1) return "Δ" + join_members(blocks_[0]);
  std::string out = "Δ(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += join_members(blocks_[i]);
  }
  return out + ")";
}

std::string anchor_name(Anchor a) {
  switch (a) {
    case Anchor::zero:
      return "0";
    case Anchor::one:
      return "1";
    case Anchor::infinity:
      return "inf";
  }
  return "?";
}

Anchor parse_anchor(const std::string& text) {
  if (text == "0") return Anchor::zero;
  if (text == "1") return Anchor::one;
  if (text == "inf" || text == "∞") return Anchor::infinity;
  throw InputError("unknown anchor '" + text + "'");
}

AnchoredPolydiagonal::AnchoredPolydiagonal(int n, std::vector<AnchoredBlock> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 4) throw InputError("anchored model needs n >= 4");
  std::vector<Block> plain;
  for (auto& b : blocks_) plain.push_back(b.members);
  normalize_blocks(plain, 4, n);
  for (auto& b : blocks_) std::sort(b.members.begin(), b.members.end());
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = i + 1; j < blocks_.size(); ++j)
      if (blocks_[i].anchor && blocks_[i].anchor == blocks_[j].anchor)
        throw InputError("two blocks share the anchor " + anchor_name(*blocks_[i].anchor));
}

std::string AnchoredPolydiagonal::label() const {
  if (blocks_.empty()) return "(P1)^" + std::to_string(n_ - 3);
  auto one = [](const AnchoredBlock& b) {
    std::string s = join_members(b.members);
    if (b.anchor) s += "," + (*b.anchor == Anchor::infinity ? std::string("∞") : anchor_name(*b.anchor));
    return s;
  };
  if (blocks_.size() == 1) return "Δ" + one(blocks_[0]);
  std::string out = "Δ(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ";";
    out += one(blocks_[i]);
  }
  return out + ")";
}

Polydiagonal intersect_partitions(const Polydiagonal& a, const Polydiagonal& b) {
  if (a.n() != b.n()) throw InputError("polydiagonals of different n");
  const int n = a.n();
  UnionFind uf(n + 1);
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks())
      for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  std::vector<Block> classes(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) classes[uf.find(x)].push_back(x);
  std::vector<Block> blocks;
  for (auto& c : classes)
    if (c.size() >= 2) blocks.push_back(std::move(c));
  return Polydiagonal(n, std::move(blocks));
}

std::optional<AnchoredPolydiagonal> intersect_partitions(const AnchoredPolydiagonal& a,
                                                         const AnchoredPolydiagonal& b) {
  if (a.n() != b.n()) throw InputError("anchored polydiagonals of different n");
  const int n = a.n();
  // Nodes 0, 1, 2 stand for the anchors; coordinate i is node i - 1 (i >= 4).
  UnionFind uf(n);
  auto anchor_node = [](Anchor x) { return static_cast<int>(x); };
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks()) {
      for (std::size_t i = 1; i < blk.members.size(); ++i) uf.unite(blk.members[0] - 1, blk.members[i] - 1);
      if (blk.anchor) uf.unite(blk.members[0] - 1, anchor_node(*blk.anchor));
    }
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y)
      if (uf.find(x) == uf.find(y)) return std::nullopt;
  std::vector<AnchoredBlock> classes(static_cast<std::size_t>(n));
  for (int i = 4; i <= n; ++i) classes[uf.find(i - 1)].members.push_back(i);
  for (int x = 0; x < 3; ++x) classes[uf.find(x)].anchor = static_cast<Anchor>(x);
  std::vector<AnchoredBlock> blocks;
  for (auto& c : classes) {
    if (c.members.empty() || (c.members.size() == 1 && !c.anchor)) continue;
    if (c.members.size() < 2)
      throw InvariantError("anchored intersection produced a singleton block");
    blocks.push_back(std::move(c));
  }
  return AnchoredPolydiagonal(n, std::move(blocks));
}

bool partition_contains(const Polydiagonal& a, const Polydiagonal& b) {
  return intersect_partitions(a, b) == b;
}

bool partition_contains(const AnchoredPolydiagonal& a, const AnchoredPolydiagonal& b) {
  auto x = intersect_partitions(a, b);
  return x && *x == b;
}

Affine partition_dim(const Polydiagonal& p, DimMultiplier mult) { return mult.times(p.n() - p.rank()); }

Affine partition_dim(const AnchoredPolydiagonal& p) {
  long long free_coords = p.n() - 3;
  for (const auto& b : p.blocks()) {
    free_coords -= static_cast<long long>(b.members.size());
    if (!b.anchor) free_coords += 1;
  }
  return Affine::of(free_coords);
}

Subspace to_linear(const Polydiagonal& p) {
  std::vector<RationalRow> rows;
  for (const auto& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) {
      RationalRow row(static_cast<std::size_t>(p.n()), Rational(0));
      row[b[i - 1] - 1] = 1;
      row[b[i] - 1] = -1;
      rows.push_back(std::move(row));
    }
  return make_subspace(p.n(), rows);
}

Subspace to_linear(const AnchoredPolydiagonal&) {
  throw UnsupportedError("anchored polydiagonals have no linear model");
}

}  // namespace wonder
