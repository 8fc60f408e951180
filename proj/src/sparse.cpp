#include "bd/sparse.hpp"

#include <algorithm>

#include "bd/errors.hpp"

namespace bd {

SparseMatrix::SparseMatrix(const Pool& pool, std::vector<GammaId> row_ids,
                           std::vector<GammaId> col_ids)
    : pool_(&pool), row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)) {
  std::sort(row_ids_.begin(), row_ids_.end(), IdLess{pool_});
  std::sort(col_ids_.begin(), col_ids_.end(), IdLess{pool_});
  rows_.reserve(row_ids_.size());
  for (std::size_t i = 0; i < row_ids_.size(); ++i) {
    rows_.emplace_back(pool);
    row_pos_.emplace(row_ids_[i].value, i);
  }
}

SparseMatrix SparseMatrix::identity(const Pool& pool, const std::vector<GammaId>& ids) {
  SparseMatrix m(pool, ids, ids);
  for (GammaId id : m.row_ids_) m.row(id).set(id, 1);
  return m;
}

SparseRow& SparseMatrix::row(GammaId id) {
  auto it = row_pos_.find(id.value);
  if (it == row_pos_.end()) throw Error(Errc::unknown_gamma, "row id outside matrix");
  return rows_[it->second];
}

const SparseRow& SparseMatrix::row(GammaId id) const {
  auto it = row_pos_.find(id.value);
  if (it == row_pos_.end()) throw Error(Errc::unknown_gamma, "row id outside matrix");
  return rows_[it->second];
}

SparseRow SparseMatrix::apply(const SparseRow& x) const {
  SparseRow out(*pool_);
  for (std::size_t i = 0; i < row_ids_.size(); ++i) {
    out.set(row_ids_[i], rows_[i].dot(x));
  }
  return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& inner) const {
  SparseMatrix out(*pool_, row_ids_, inner.col_ids());
  for (std::size_t i = 0; i < row_ids_.size(); ++i) {
    SparseRow& target = out.row(row_ids_[i]);
    for (const auto& [mid, value] : rows_[i].entries()) {
      target.add_scaled(inner.row(mid), value);
    }
  }
  return out;
}

Rational SparseMatrix::op_norm_inf() const {
  Rational best(0);
  for (const SparseRow& r : rows_) {
    Rational norm = r.l1_norm();
    if (norm > best) best = norm;
  }
  return best;
}

SparseRow SparseMatrix::column(GammaId col) const {
  SparseRow out(*pool_);
  for (std::size_t i = 0; i < row_ids_.size(); ++i) {
    Rational v = rows_[i].get(col);
    if (v != 0) out.set(row_ids_[i], v);
  }
  return out;
}

std::size_t exact_rank(const std::vector<SparseRow>& rows, const std::vector<GammaId>& columns) {
  if (rows.empty() || columns.empty()) return 0;
  const std::size_t r_count = rows.size();
  const std::size_t c_count = columns.size();

  // Clear denominators row by row (row scaling preserves rank).
  std::vector<std::vector<Integer>> m(r_count, std::vector<Integer>(c_count, 0));
  for (std::size_t i = 0; i < r_count; ++i) {
    Integer lcm(1);
    for (const auto& [id, value] : rows[i].entries()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < c_count; ++j) {
      Rational scaled = rows[i].get(columns[j]) * lcm;
      m[i][j] = scaled.get_num();  // denominator is 1 by choice of lcm
    }
  }

  Integer previous_pivot(1);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < c_count && pivot_row < r_count; ++col) {
    std::size_t found = pivot_row;
    while (found < r_count && m[found][col] == 0) ++found;
    if (found == r_count) continue;
    std::swap(m[pivot_row], m[found]);
    const Integer& pivot = m[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < r_count; ++i) {
      if (m[i][col] == 0) {
        // Still rescale the untouched row so later exact divisions stay valid.
        for (std::size_t j = col + 1; j < c_count; ++j) {
          Integer t = pivot * m[i][j];
          mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < c_count; ++j) {
        Integer t = pivot * m[i][j] - m[i][col] * m[pivot_row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous_pivot = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace bd
