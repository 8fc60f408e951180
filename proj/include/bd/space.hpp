#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "bd/pool.hpp"
#include "bd/sparse.hpp"

namespace bd {

// The level sets Delta_0, ..., Delta_Q of a truncated construction. Every
// listed id must carry the matching pool rank; levels are disjoint and
// non-empty.
class LevelStructure {
 public:
  LevelStructure(const Pool& pool, std::vector<std::vector<GammaId>> levels);

  // Levels 0..Q taken from the pool's member lists, which must be complete
  // for ranks >= 1 (see Pool::mark_level_complete).
  static LevelStructure from_pool(const Pool& pool, std::uint32_t truncation);

  const Pool& pool() const { return *pool_; }
  std::uint32_t truncation() const { return static_cast<std::uint32_t>(levels_.size()) - 1; }
  const std::vector<GammaId>& level(std::uint32_t q) const;
  std::vector<GammaId> gamma_up_to(std::uint32_t q) const;  // canonical order
  bool contains(GammaId id) const { return ranks_.count(id.value) > 0; }
  std::size_t gamma_size(std::uint32_t q) const;

 private:
  const Pool* pool_;
  std::vector<std::vector<GammaId>> levels_;
  std::unordered_map<std::uint32_t, std::uint32_t> ranks_;
};

class TruncatedSpace;

// One-step extension data: the row of the extension functional of gamma on
// the coordinates of Gamma_{rank(gamma)-1}. The partially built space
// carries every composed matrix strictly below rank(gamma).
class ExtensionRule {
 public:
  virtual ~ExtensionRule() = default;
  virtual SparseRow row(GammaId gamma, const TruncatedSpace& below) const = 0;
};

// Adapter for fabricated rules in tests.
class FunctionRule final : public ExtensionRule {
 public:
  using Fn = std::function<SparseRow(GammaId, const TruncatedSpace&)>;
  explicit FunctionRule(Fn fn) : fn_(std::move(fn)) {}
  SparseRow row(GammaId gamma, const TruncatedSpace& below) const override {
    return fn_(gamma, below);
  }

 private:
  Fn fn_;
};

struct DualTriple {
  SparseRow e_row;
  SparseRow c_row;
  SparseRow d_row;  // e_row - c_row
};

// A truncated model: the coordinate space of Gamma_Q together with all
// composed extension matrices i_{p,q}, 0 <= p <= q <= Q, and the computed
// bound c_bound = max_p ||i_{p,Q}||. Immutable after build (the mutable_ext
// accessor exists only for fault-injection in tests and negative controls).
class TruncatedSpace {
 public:
  const Pool& pool() const { return structure_.pool(); }
  const LevelStructure& structure() const { return structure_; }
  std::uint32_t truncation() const { return structure_.truncation(); }

  const SparseMatrix& ext(std::uint32_t p, std::uint32_t q) const;
  SparseMatrix& mutable_ext(std::uint32_t p, std::uint32_t q);

  const Rational& c_bound() const { return c_bound_; }

  // Coordinates of x restricted to Gamma_q (entries of higher rank dropped).
  SparseRow restrict_to(const SparseRow& x, std::uint32_t q) const;

  // Interval projection: i_{hi,Q} r_hi - i_{lo-1,Q} r_{lo-1} on coordinates.
  SparseRow project(RankInterval interval, const SparseRow& x) const;

  // d_gamma as coordinates over Gamma_Q.
  const SparseRow& basis_vector(GammaId gamma) const;

  // Coordinates of sum coeff[gamma] * d_gamma.
  SparseRow coords_of(const SparseRow& basis_coeffs) const;

  DualTriple dual_triple(GammaId gamma) const;

  friend TruncatedSpace build_truncated(LevelStructure structure, const ExtensionRule& rule);

 private:
  explicit TruncatedSpace(LevelStructure structure) : structure_(std::move(structure)) {}

  std::size_t ext_index(std::uint32_t p, std::uint32_t q) const;
  void recompute_c_bound();

  LevelStructure structure_;
  std::vector<SparseMatrix> ext_;  // i_{p,q} for p <= q, flattened
  std::unordered_map<std::uint32_t, SparseRow> basis_;
  Rational c_bound_ = 0;
};

// Composes all one-step extensions of the rule over the structure. Throws
// InadmissibleRule if any rule row leaves the coordinates of the previous
// Gamma level.
TruncatedSpace build_truncated(LevelStructure structure, const ExtensionRule& rule);

}  // namespace bd
