#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "wonder/rational.hpp"

namespace wonder {

using RationalRow = std::vector<Rational>;

// Linear subspace of Q^d stored by its conormal space in canonical RREF.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // the whole space

  int ambient_dim() const { return ambient_dim_; }
  int codim() const { return static_cast<int>(rows_.size()); }
  int dim() const { return ambient_dim_ - codim(); }
  bool is_zero() const { return codim() == ambient_dim_; }
  const std::vector<RationalRow>& conormal() const { return rows_; }
  std::string label() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  friend Subspace make_subspace(int ambient_dim, std::span<const RationalRow> rows);
  int ambient_dim_;
  std::vector<RationalRow> rows_;
};

// Row-reduce in place and drop zero rows.
void reduce_rows(std::vector<RationalRow>& rows);

Subspace make_subspace(int ambient_dim, std::span<const RationalRow> rows);
Subspace intersect_subspaces(const Subspace& a, const Subspace& b);
// Span of the given vectors, converted to conormal form.
Subspace subspace_spanned_by(int ambient_dim, std::span<const RationalRow> vectors);
// a contains b.
bool contains_subspace(const Subspace& a, const Subspace& b);

}  // namespace wonder
