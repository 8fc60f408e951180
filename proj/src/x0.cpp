#include "bd/x0.hpp"

#include <algorithm>

#include "bd/errors.hpp"

namespace bd {

namespace {

// Row over Gamma_q of e_eta* composed with the projection onto the window.
// Windows containing level 0 reduce to the plain evaluation row; otherwise
// the initial part i_{lo-1,q} r_{lo-1} is subtracted.
SparseRow windowed_evaluation_row(GammaId eta, RankInterval window, const TruncatedSpace& below,
                                  std::uint32_t q) {
  SparseRow row(below.pool());
  row.set(eta, 1);
  if (window.lo > 0) {
    row -= below.ext(window.lo - 1, q).row(eta);
  }
  return row;
}

}  // namespace

SparseRow extension_row(GammaId gamma, const Pool& pool, const TruncatedSpace& below) {
  if (!pool.is_tuple(gamma)) {
    throw Error(Errc::unknown_gamma, "extension rows exist for tuple members only");
  }
  const TupleCode& code = pool.tuple(gamma);
  const std::uint32_t q = code.rank - 1;
  SparseRow row(pool);
  if (code.type == TupleType::t2) {
    row.set(code.base, 1);
  }
  Rational scale = pool.params().weight() / Rational(code.n);
  for (const TupleEntry& entry : code.entries) {
    row.add_scaled(windowed_evaluation_row(entry.node, entry.window, below, q),
                   entry.sign * scale);
  }
  return row;
}

Analysis analyse(GammaId gamma, const Pool& pool) {
  if (!pool.is_tuple(gamma)) {
    throw Error(Errc::unknown_gamma, "only tuple members admit an analysis");
  }
  Analysis out;
  GammaId cursor = gamma;
  while (true) {
    const TupleCode& code = pool.tuple(cursor);
    out.steps.push_back({cursor, code.n, code.entries});
    if (code.type == TupleType::t1) break;
    cursor = code.base;
    if (!pool.is_tuple(cursor)) {
      throw Error(Errc::unknown_gamma, "chain base is not a tuple");
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());

  if (out.age() != pool.age(gamma)) {
    throw Error(Errc::bad_input, "chain length differs from recorded age");
  }
  std::uint32_t next_free = 0;
  for (std::size_t r = 0; r < out.steps.size(); ++r) {
    const AnalysisStep& step = out.steps[r];
    for (const TupleEntry& entry : step.entries) {
      if (entry.window.lo < next_free || entry.window.lo > entry.window.hi) {
        throw Error(Errc::non_successive_intervals, "analysis windows fail to interleave");
      }
      next_free = entry.window.hi + 1;
    }
    if (pool.rank(step.xi) < next_free) {
      throw Error(Errc::non_successive_intervals, "chain rank below its own windows");
    }
    next_free = pool.rank(step.xi) + 1;  // windows of step r+1 start above rank(xi_r)
    if (r >= 1) {
      Integer floor = pool.counter().t2_n_min(pool.rank(out.steps[r - 1].xi));
      if (step.n < floor) {
        throw Error(Errc::bad_n, "chain weight below the admissibility floor");
      }
    }
  }
  return out;
}

SparseRow analysis_recomposition(const Analysis& analysis, const TruncatedSpace& space) {
  const Pool& pool = space.pool();
  std::uint32_t truncation = space.truncation();
  SparseRow row(pool);
  for (const AnalysisStep& step : analysis.steps) {
    row += space.dual_triple(step.xi).d_row;
    Rational scale = pool.params().weight() / Rational(step.n);
    for (const TupleEntry& entry : step.entries) {
      row.add_scaled(windowed_evaluation_row(entry.node, entry.window, space, truncation),
                     entry.sign * scale);
    }
  }
  return row;
}

}  // namespace bd
