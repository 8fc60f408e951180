#pragma once

#include <vector>

#include "bd/pool.hpp"
#include "bd/space.hpp"

namespace bd {

// The exact coordinate row of gamma's extension functional on the previous
// Gamma level: (theta/N)(1/n) sum of signed windowed evaluation rows, plus
// the base's evaluation row for t2 tuples. `below` must carry composed
// matrices through rank(gamma) - 1.
SparseRow extension_row(GammaId gamma, const Pool& pool, const TruncatedSpace& below);

// ExtensionRule backed by the tuple codes of a pool.
class X0Rule final : public ExtensionRule {
 public:
  explicit X0Rule(const Pool& pool) : pool_(&pool) {}
  SparseRow row(GammaId gamma, const TruncatedSpace& below) const override {
    return extension_row(gamma, *pool_, below);
  }

 private:
  const Pool* pool_;
};

// The unique decomposition of an evaluation functional along its chain of
// bases: steps[0], ..., steps[a-1] are the chain members from the age-1 root
// to gamma itself, each contributing its own weighted average.
struct AnalysisStep {
  GammaId xi;
  Integer n;
  std::vector<TupleEntry> entries;
};

struct Analysis {
  std::vector<AnalysisStep> steps;
  std::uint32_t age() const { return static_cast<std::uint32_t>(steps.size()); }
};

// Unwinds the t2 chain of gamma (rank >= 1 required) and checks the
// structural invariants: interleaving of windows with chain ranks, and the
// weight growth n_r >= (#Gamma_{rank(xi_{r-1})})^2 for r >= 2.
Analysis analyse(GammaId gamma, const Pool& pool);

// Coordinate row over Gamma_Q of the right-hand side of the analysis
// identity: sum of d* rows of the chain plus the weighted projected
// evaluation rows. Equals the unit row at gamma exactly.
SparseRow analysis_recomposition(const Analysis& analysis, const TruncatedSpace& space);

}  // namespace bd
