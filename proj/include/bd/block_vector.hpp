#pragma once

#include <iosfwd>
#include <optional>

#include "bd/counting.hpp"
#include "bd/sparse.hpp"

namespace bd {

// Element of the space given by its coefficients with respect to the basis
// (d_gamma). Ids must be materialized in the ambient pool; zero coefficients
// are never stored.
class BlockVector {
 public:
  explicit BlockVector(const Pool& pool) : coeffs_(pool) {}
  explicit BlockVector(SparseRow coeffs) : coeffs_(std::move(coeffs)) {}

  const Pool& pool() const { return coeffs_.pool(); }
  const SparseRow& coeffs() const { return coeffs_; }

  bool empty() const { return coeffs_.empty(); }
  void set(GammaId id, const Rational& value) { coeffs_.set(id, value); }
  void add(GammaId id, const Rational& value) { coeffs_.add(id, value); }

  BlockVector scaled(const Rational& scale) const { return BlockVector(coeffs_.scaled(scale)); }

  friend BlockVector operator+(const BlockVector& a, const BlockVector& b) {
    return BlockVector(a.coeffs_ + b.coeffs_);
  }

  std::uint32_t min_rank() const;
  std::uint32_t max_rank() const;

  // First and last support ids in basis (canonical) order.
  GammaId first_id() const;
  GammaId last_id() const;

  // Certified lower bound on the basis position (1-based) of the first
  // support vector: 1 + #Gamma_{r-1} with r the least support rank. Exact
  // level cardinalities make this work far beyond enumerable ranks.
  Integer basis_floor(LevelCounter& counter) const;

  // One "<digest> <coefficient>" record per line.
  void write(std::ostream& out) const;
  static BlockVector read(const Pool& pool, std::istream& in);

 private:
  SparseRow coeffs_;
};

// max over support of a in basis order < min over support of b.
bool strictly_before(const BlockVector& a, const BlockVector& b);

// Successive with a full rank gap between consecutive fdd ranges.
bool skipped_gap(const BlockVector& a, const BlockVector& b);

}  // namespace bd
