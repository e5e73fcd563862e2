#include "wonder/subspace.hpp"

#include <algorithm>

#include "wonder/errors.hpp"

namespace wonder {

void reduce_rows(std::vector<RationalRow>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = Rational(1) / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
}

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 1) throw InputError("ambient dimension must be positive");
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                b.rows_.end());
}

std::string Subspace::label() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ";";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ",";
      out += rows_[r][c].to_string();
    }
  }
  return out + "]";
}

Subspace make_subspace(int ambient_dim, std::span<const RationalRow> rows) {
  Subspace s(ambient_dim);
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != ambient_dim)
      throw InputError("conormal row of length " + std::to_string(row.size()) +
                       " in ambient of dimension " + std::to_string(ambient_dim));
  s.rows_.assign(rows.begin(), rows.end());
  reduce_rows(s.rows_);
  return s;
}

Subspace intersect_subspaces(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("ambient dimension mismatch");
  std::vector<RationalRow> rows = a.conormal();
  rows.insert(rows.end(), b.conormal().begin(), b.conormal().end());
  return make_subspace(a.ambient_dim(), rows);
}

Subspace subspace_spanned_by(int ambient_dim, std::span<const RationalRow> vectors) {
  std::vector<RationalRow> rows(vectors.begin(), vectors.end());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != ambient_dim) throw InputError("vector length mismatch");
  reduce_rows(rows);
  // Null space basis: one vector per free column.
  std::vector<int> pivot_of_col(static_cast<std::size_t>(ambient_dim), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto it = std::find_if(rows[r].begin(), rows[r].end(), [](const Rational& x) { return !x.is_zero(); });
    pivot_of_col[static_cast<std::size_t>(it - rows[r].begin())] = static_cast<int>(r);
  }
  std::vector<RationalRow> kernel;
  for (int c = 0; c < ambient_dim; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RationalRow v(static_cast<std::size_t>(ambient_dim), Rational(0));
    v[c] = 1;
    for (int p = 0; p < ambient_dim; ++p)
      if (pivot_of_col[p] >= 0) v[p] = -rows[pivot_of_col[p]][c];
    kernel.push_back(std::move(v));
  }
  return make_subspace(ambient_dim, kernel);
}

bool contains_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("ambient dimension mismatch");
  if (a.codim() > b.codim()) return false;
  // Reduce each conormal row of a against the RREF basis of b.
  const auto& basis = b.conormal();
  for (RationalRow row : a.conormal()) {
    for (const auto& brow : basis) {
      auto pivot = std::find_if(brow.begin(), brow.end(), [](const Rational& x) { return !x.is_zero(); });
      std::size_t c = static_cast<std::size_t>(pivot - brow.begin());
      if (row[c].is_zero()) continue;
      Rational f = row[c];
      for (std::size_t k = c; k < row.size(); ++k) row[k] -= f * brow[k];
    }
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace wonder
