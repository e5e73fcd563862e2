#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "wonder/affine.hpp"
#include "wonder/polydiagonal.hpp"
#include "wonder/subspace.hpp"

namespace wonder {

using ElemId = std::uint32_t;
// Id 0 is always the ambient variety.
inline constexpr ElemId kAmbient = 0;
// nullopt encodes the empty intersection.
using MaybeElem = std::optional<ElemId>;

// A family of subvarieties of one ambient, interned to integer ids.
// Meets are memoized, so one instance must not be used from several threads at once.
class Space {
 public:
  virtual ~Space() = default;

  MaybeElem meet(ElemId a, ElemId b) const;
  // a contains b.
  bool contains(ElemId a, ElemId b) const;
  virtual Affine dim(ElemId e) const = 0;
  Affine ambient_dim() const { return dim(kAmbient); }
  Affine codim(ElemId e) const { return ambient_dim() - dim(e); }
  virtual std::size_t size() const = 0;

  std::string name(ElemId e) const;
  void set_name(ElemId e, std::string name);

 protected:
  virtual MaybeElem compute_meet(ElemId a, ElemId b) const = 0;
  virtual std::string label(ElemId e) const = 0;

 private:
  static constexpr std::int64_t kEmpty = -1;
  mutable std::unordered_map<std::uint64_t, std::int64_t> meet_cache_;
  std::unordered_map<ElemId, std::string> names_;
};

// Space whose elements are canonical model values.
template <class Value>
class ValueSpace : public Space {
 public:
  ElemId intern(const Value& v) const {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    auto id = static_cast<ElemId>(values_.size());
    values_.push_back(v);
    index_.emplace(v, id);
    return id;
  }
  std::optional<ElemId> find(const Value& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Value& value(ElemId e) const { return values_.at(e); }
  std::size_t size() const override { return values_.size(); }

 protected:
  std::string label(ElemId e) const override { return values_.at(e).label(); }

 private:
  mutable std::deque<Value> values_;
  mutable std::map<Value, ElemId> index_;
};

// Subspaces of Q^d. With projective = true they are cones in P^{d-1} and 0 means empty.
class LinearSpace final : public ValueSpace<Subspace> {
 public:
  LinearSpace(int dim, bool projective);
  int vector_dim() const { return dim_; }
  bool projective() const { return projective_; }
  Affine dim(ElemId e) const override;

 protected:
  MaybeElem compute_meet(ElemId a, ElemId b) const override;

 private:
  int dim_;
  bool projective_;
};

class DiagonalSpace final : public ValueSpace<Polydiagonal> {
 public:
  DiagonalSpace(int n, DimMultiplier m);
  int n() const { return n_; }
  DimMultiplier multiplier() const { return m_; }
  Affine dim(ElemId e) const override;

 protected:
  MaybeElem compute_meet(ElemId a, ElemId b) const override;

 private:
  int n_;
  DimMultiplier m_;
};

class AnchoredSpace final : public ValueSpace<AnchoredPolydiagonal> {
 public:
  explicit AnchoredSpace(int n);
  int n() const { return n_; }
  Affine dim(ElemId e) const override;

 protected:
  MaybeElem compute_meet(ElemId a, ElemId b) const override;

 private:
  int n_;
};

}  // namespace wonder
