#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wonder/affine.hpp"
#include "wonder/subspace.hpp"

namespace wonder {

// dim X. Unset means symbolic m.
struct DimMultiplier {
  std::optional<long long> value;

  static DimMultiplier symbolic() { return {}; }
  static DimMultiplier fixed(long long m);
  bool is_symbolic() const { return !value.has_value(); }
  // k * m as an affine dimension.
  Affine times(long long k) const;
  std::string to_string() const;
};

using Block = std::vector<int>;

// Intersection of diagonals of X^n, given by the non-singleton blocks of a set partition.
class Polydiagonal {
 public:
  Polydiagonal(int n, std::vector<Block> blocks);
  static Polydiagonal ambient(int n) { return Polydiagonal(n, {}); }

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  // Sum of (|b| - 1), the codimension in units of m.
  int rank() const;
  bool is_ambient() const { return blocks_.empty(); }
  std::string label() const;

  friend bool operator==(const Polydiagonal&, const Polydiagonal&) = default;
  friend auto operator<=>(const Polydiagonal&, const Polydiagonal&) = default;

 private:
  int n_;
  std::vector<Block> blocks_;
};

enum class Anchor { zero, one, infinity };

std::string anchor_name(Anchor a);
Anchor parse_anchor(const std::string& text);

struct AnchoredBlock {
  Block members;
  std::optional<Anchor> anchor;

  friend bool operator==(const AnchoredBlock&, const AnchoredBlock&) = default;
  friend auto operator<=>(const AnchoredBlock&, const AnchoredBlock&) = default;
};

// Polydiagonal of (P^1)^{n-3} with coordinates p_4..p_n; blocks may be pinned to 0, 1 or inf.
class AnchoredPolydiagonal {
 public:
  AnchoredPolydiagonal(int n, std::vector<AnchoredBlock> blocks);
  static AnchoredPolydiagonal ambient(int n) { return AnchoredPolydiagonal(n, {}); }

  int n() const { return n_; }
  const std::vector<AnchoredBlock>& blocks() const { return blocks_; }
  bool is_ambient() const { return blocks_.empty(); }
  std::string label() const;

  friend bool operator==(const AnchoredPolydiagonal&, const AnchoredPolydiagonal&) = default;
  friend auto operator<=>(const AnchoredPolydiagonal&, const AnchoredPolydiagonal&) = default;

 private:
  int n_;
  std::vector<AnchoredBlock> blocks_;
};

Polydiagonal intersect_partitions(const Polydiagonal& a, const Polydiagonal& b);
// nullopt when two different anchors collide.
std::optional<AnchoredPolydiagonal> intersect_partitions(const AnchoredPolydiagonal& a,
                                                         const AnchoredPolydiagonal& b);

bool partition_contains(const Polydiagonal& a, const Polydiagonal& b);
bool partition_contains(const AnchoredPolydiagonal& a, const AnchoredPolydiagonal& b);

Affine partition_dim(const Polydiagonal& p, DimMultiplier mult);
Affine partition_dim(const AnchoredPolydiagonal& p);

Subspace to_linear(const Polydiagonal& p);
// Always throws: anchored loci are not linear.
Subspace to_linear(const AnchoredPolydiagonal& p);

}  // namespace wonder
