#include "bd/space.hpp"

#include <algorithm>

#include "bd/errors.hpp"

namespace bd {

LevelStructure::LevelStructure(const Pool& pool, std::vector<std::vector<GammaId>> levels)
    : pool_(&pool), levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(Errc::bad_input, "a level structure needs a level 0");
  for (std::uint32_t q = 0; q < levels_.size(); ++q) {
    if (levels_[q].empty()) throw Error(Errc::bad_input, "levels must be non-empty");
    std::sort(levels_[q].begin(), levels_[q].end(), IdLess{pool_});
    for (GammaId id : levels_[q]) {
      if (!pool.contains(id)) throw Error(Errc::unknown_gamma, "level lists unknown id");
      if (pool.rank(id) != q) throw Error(Errc::bad_input, "member rank differs from its level");
      if (!ranks_.emplace(id.value, q).second) {
        throw Error(Errc::bad_input, "levels must be disjoint");
      }
    }
  }
}

LevelStructure LevelStructure::from_pool(const Pool& pool, std::uint32_t truncation) {
  std::vector<std::vector<GammaId>> levels;
  for (std::uint32_t q = 0; q <= truncation; ++q) {
    if (q >= 1 && !pool.level_complete(q)) {
      throw Error(Errc::bad_input, "level " + std::to_string(q) + " is not fully enumerated");
    }
    levels.push_back(pool.members_of_rank(q));
  }
  return LevelStructure(pool, std::move(levels));
}

const std::vector<GammaId>& LevelStructure::level(std::uint32_t q) const {
  if (q >= levels_.size()) throw Error(Errc::bad_interval, "level index beyond truncation");
  return levels_[q];
}

std::vector<GammaId> LevelStructure::gamma_up_to(std::uint32_t q) const {
  std::vector<GammaId> out;
  for (std::uint32_t p = 0; p <= q; ++p) {
    out.insert(out.end(), level(p).begin(), level(p).end());
  }
  std::sort(out.begin(), out.end(), IdLess{pool_});
  return out;
}

std::size_t LevelStructure::gamma_size(std::uint32_t q) const {
  std::size_t total = 0;
  for (std::uint32_t p = 0; p <= q; ++p) total += level(p).size();
  return total;
}

std::size_t TruncatedSpace::ext_index(std::uint32_t p, std::uint32_t q) const {
  std::uint32_t truncation = structure_.truncation();
  if (q > truncation || p > q) throw Error(Errc::bad_interval, "extension index out of range");
  return static_cast<std::size_t>(q) * (q + 1) / 2 + p;
}

const SparseMatrix& TruncatedSpace::ext(std::uint32_t p, std::uint32_t q) const {
  return ext_[ext_index(p, q)];
}

SparseMatrix& TruncatedSpace::mutable_ext(std::uint32_t p, std::uint32_t q) {
  return ext_[ext_index(p, q)];
}

void TruncatedSpace::recompute_c_bound() {
  c_bound_ = 0;
  std::uint32_t truncation = structure_.truncation();
  for (std::uint32_t p = 0; p <= truncation; ++p) {
    Rational norm = ext(p, truncation).op_norm_inf();
    if (norm > c_bound_) c_bound_ = norm;
  }
}

SparseRow TruncatedSpace::restrict_to(const SparseRow& x, std::uint32_t q) const {
  SparseRow out(pool());
  for (const auto& [id, value] : x.entries()) {
    if (pool().rank(id) <= q && structure_.contains(id)) out.set(id, value);
  }
  return out;
}

SparseRow TruncatedSpace::project(RankInterval interval, const SparseRow& x) const {
  std::uint32_t truncation = structure_.truncation();
  if (interval.lo > interval.hi || interval.hi > truncation) {
    throw Error(Errc::bad_interval, "projection interval outside [0, Q]");
  }
  SparseRow out = ext(interval.hi, truncation).apply(restrict_to(x, interval.hi));
  if (interval.lo > 0) {
    out -= ext(interval.lo - 1, truncation).apply(restrict_to(x, interval.lo - 1));
  }
  return out;
}

const SparseRow& TruncatedSpace::basis_vector(GammaId gamma) const {
  auto it = basis_.find(gamma.value);
  if (it == basis_.end()) throw Error(Errc::unknown_gamma, "id outside the truncation");
  return it->second;
}

SparseRow TruncatedSpace::coords_of(const SparseRow& basis_coeffs) const {
  SparseRow out(pool());
  for (const auto& [id, value] : basis_coeffs.entries()) {
    out.add_scaled(basis_vector(id), value);
  }
  return out;
}

DualTriple TruncatedSpace::dual_triple(GammaId gamma) const {
  if (!structure_.contains(gamma)) throw Error(Errc::unknown_gamma, "id outside the truncation");
  DualTriple triple{SparseRow(pool()), SparseRow(pool()), SparseRow(pool())};
  triple.e_row.set(gamma, 1);
  std::uint32_t rank = pool().rank(gamma);
  if (rank > 0) {
    triple.c_row = ext(rank - 1, structure_.truncation()).row(gamma);
  }
  triple.d_row = triple.e_row - triple.c_row;
  return triple;
}

TruncatedSpace build_truncated(LevelStructure structure, const ExtensionRule& rule) {
  TruncatedSpace space(std::move(structure));
  const LevelStructure& levels = space.structure_;
  const Pool& pool = levels.pool();
  std::uint32_t truncation = levels.truncation();
  space.ext_.reserve((truncation + 1) * (truncation + 2) / 2);

  space.ext_.push_back(SparseMatrix::identity(pool, levels.level(0)));
  for (std::uint32_t q = 1; q <= truncation; ++q) {
    // One-step matrix: identity on Gamma_{q-1}, rule rows on Delta_q.
    std::vector<GammaId> domain = levels.gamma_up_to(q - 1);
    std::vector<GammaId> codomain = levels.gamma_up_to(q);
    SparseMatrix one_step(pool, codomain, domain);
    for (GammaId id : domain) one_step.row(id).set(id, 1);
    for (GammaId gamma : levels.level(q)) {
      SparseRow row = rule.row(gamma, space);
      for (const auto& [id, value] : row.entries()) {
        if (!levels.contains(id) || pool.rank(id) >= q) {
          throw Error(Errc::inadmissible_rule,
                      "rule row for " + pool.digest(gamma) + " leaves Gamma_" +
                          std::to_string(q - 1));
        }
      }
      one_step.row(gamma) = std::move(row);
    }
    // i_{p,q} = i_{q-1,q} o i_{p,q-1} for p < q, then i_{q,q} = identity.
    for (std::uint32_t p = 0; p < q; ++p) {
      space.ext_.push_back(one_step.compose(space.ext(p, q - 1)));
    }
    space.ext_.push_back(SparseMatrix::identity(pool, codomain));
  }

  for (std::uint32_t q = 0; q <= truncation; ++q) {
    const SparseMatrix& to_top = space.ext(q, truncation);
    for (GammaId gamma : levels.level(q)) {
      space.basis_.emplace(gamma.value, to_top.column(gamma));
    }
  }
  space.recompute_c_bound();
  return space;
}

}  // namespace bd
