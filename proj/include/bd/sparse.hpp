#pragma once

#include <map>
#include <vector>

#include "bd/gamma.hpp"
#include "bd/pool.hpp"
#include "bd/rational.hpp"

namespace bd {

// Exact sparse row (equally used as functional-in-coordinates and as
// coordinate vector). Zero entries are dropped eagerly so structural
// equality coincides with mathematical equality; iteration follows the
// pool's canonical id order.
class SparseRow {
 public:
  explicit SparseRow(const Pool& pool) : entries_(IdLess{&pool}) {}

  const Pool& pool() const { return *entries_.key_comp().pool; }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Rational get(GammaId id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(GammaId id, const Rational& value) {
    if (value == 0) {
      entries_.erase(id);
    } else {
      entries_[id] = value;
    }
  }

  void add(GammaId id, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = entries_.emplace(id, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void add_scaled(const SparseRow& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [id, value] : other.entries_) add(id, value * scale);
  }

  SparseRow& operator+=(const SparseRow& other) {
    for (const auto& [id, value] : other.entries_) add(id, value);
    return *this;
  }

  SparseRow& operator-=(const SparseRow& other) {
    for (const auto& [id, value] : other.entries_) add(id, -value);
    return *this;
  }

  friend SparseRow operator+(SparseRow a, const SparseRow& b) { return a += b; }
  friend SparseRow operator-(SparseRow a, const SparseRow& b) { return a -= b; }

  SparseRow scaled(const Rational& scale) const {
    SparseRow out(pool());
    if (scale == 0) return out;
    for (const auto& [id, value] : entries_) out.entries_.emplace(id, value * scale);
    return out;
  }

  Rational dot(const SparseRow& other) const {
    const SparseRow* small = this;
    const SparseRow* large = &other;
    if (small->size() > large->size()) std::swap(small, large);
    Rational acc(0);
    for (const auto& [id, value] : small->entries_) {
      auto it = large->entries_.find(id);
      if (it != large->entries_.end()) acc += value * it->second;
    }
    return acc;
  }

  Rational l1_norm() const {
    Rational acc(0);
    for (const auto& [id, value] : entries_) acc += rational_abs(value);
    return acc;
  }

  Rational sup_norm() const {
    Rational best(0);
    for (const auto& [id, value] : entries_) {
      Rational a = rational_abs(value);
      if (a > best) best = a;
    }
    return best;
  }

  bool operator==(const SparseRow& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [id, value] : entries_) {
      if (!(it->first == id) || it->second != value) return false;
      ++it;
    }
    return true;
  }

  const std::map<GammaId, Rational, IdLess>& entries() const { return entries_; }

 private:
  std::map<GammaId, Rational, IdLess> entries_;
};

inline Rational row_l1_norm(const SparseRow& row) { return row.l1_norm(); }
inline Rational sup_norm(const SparseRow& row) { return row.sup_norm(); }

// Finite matrix with declared row/column index sets. Rows are kept in the
// canonical order of their ids.
class SparseMatrix {
 public:
  SparseMatrix(const Pool& pool, std::vector<GammaId> row_ids, std::vector<GammaId> col_ids);

  static SparseMatrix identity(const Pool& pool, const std::vector<GammaId>& ids);

  const Pool& pool() const { return *pool_; }
  const std::vector<GammaId>& row_ids() const { return row_ids_; }
  const std::vector<GammaId>& col_ids() const { return col_ids_; }

  bool has_row(GammaId id) const { return row_pos_.count(id.value) > 0; }
  SparseRow& row(GammaId id);
  const SparseRow& row(GammaId id) const;

  // Matrix-vector product; x is read on this matrix's column ids (entries
  // of x outside the column set are ignored).
  SparseRow apply(const SparseRow& x) const;

  // this ∘ inner: inner's rows must cover this matrix's column ids.
  SparseMatrix compose(const SparseMatrix& inner) const;

  // max over rows of the row l1 norm: the operator norm between sup-normed
  // coordinate spaces. Zero for an empty matrix.
  Rational op_norm_inf() const;

  SparseRow column(GammaId col) const;

 private:
  const Pool* pool_;
  std::vector<GammaId> row_ids_;
  std::vector<GammaId> col_ids_;
  std::vector<SparseRow> rows_;
  std::unordered_map<std::uint32_t, std::size_t> row_pos_;
};

inline Rational op_norm_inf(const SparseMatrix& m) { return m.op_norm_inf(); }

// Exact rank of the row system over the rationals, by fraction-free
// (Bareiss) elimination on the denominator-cleared integer matrix.
std::size_t exact_rank(const std::vector<SparseRow>& rows, const std::vector<GammaId>& columns);

}  // namespace bd
