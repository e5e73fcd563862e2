#include "wonder/space.hpp"

#include <utility>

#include "wonder/errors.hpp"

namespace wonder {

MaybeElem Space::meet(ElemId a, ElemId b) const {
  if (a == b || a == kAmbient) return b;
  if (b == kAmbient) return a;
  if (a > b) std::swap(a, b);
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  if (auto it = meet_cache_.find(key); it != meet_cache_.end()) {
    if (it->second == kEmpty) return std::nullopt;
    return static_cast<ElemId>(it->second);
  }
  MaybeElem r = compute_meet(a, b);
  meet_cache_.emplace(key, r ? static_cast<std::int64_t>(*r) : kEmpty);
  return r;
}

bool Space::contains(ElemId a, ElemId b) const {
  MaybeElem x = meet(a, b);
  return x && *x == b;
}

std::string Space::name(ElemId e) const {
  if (auto it = names_.find(e); it != names_.end()) return it->second;
  return label(e);
}

void Space::set_name(ElemId e, std::string name) { names_[e] = std::move(name); }

LinearSpace::LinearSpace(int dim, bool projective) : dim_(dim), projective_(projective) {
  if (projective && dim < 2) throw InputError("projective model needs vector dimension >= 2");
  intern(Subspace(dim));
}

Affine LinearSpace::dim(ElemId e) const { return Affine::of(value(e).dim() - (projective_ ? 1 : 0)); }

MaybeElem LinearSpace::compute_meet(ElemId a, ElemId b) const {
  Subspace s = intersect_subspaces(value(a), value(b));
  if (projective_ && s.is_zero()) return std::nullopt;
  return intern(s);
}

DiagonalSpace::DiagonalSpace(int n, DimMultiplier m) : n_(n), m_(m) { intern(Polydiagonal::ambient(n)); }

Affine DiagonalSpace::dim(ElemId e) const { return partition_dim(value(e), m_); }

MaybeElem DiagonalSpace::compute_meet(ElemId a, ElemId b) const {
  return intern(intersect_partitions(value(a), value(b)));
}

AnchoredSpace::AnchoredSpace(int n) : n_(n) { intern(AnchoredPolydiagonal::ambient(n)); }

Affine AnchoredSpace::dim(ElemId e) const { return partition_dim(value(e)); }

MaybeElem AnchoredSpace::compute_meet(ElemId a, ElemId b) const {
  auto x = intersect_partitions(value(a), value(b));
  if (!x) return std::nullopt;
  return intern(*x);
}

}  // namespace wonder
