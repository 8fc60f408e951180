#pragma once

#include "bd/checks.hpp"
#include "bd/eval.hpp"

namespace bd {

// A weighted average (1/n) sum sign_i e_{eta_i}* P_{E_i} to test against a
// family of blocks. Entries follow the tuple-entry conventions (successive
// windows, node rank inside its window) but n is free apart from the
// hypothesis n >= max(m^2, k).
struct AveragingInstance {
  Integer n;
  std::vector<TupleEntry> entries;
};

// Exact value of the average against the sum of the blocks; asserts
// |value| <= 4N/(N-2theta). Hypotheses (successive blocks, certified norm
// upper bounds <= 1, n >= max(m^2, k), k >= 1) raise HypothesisViolated.
VerificationReport avg_bound_check(const TruncatedSpace& space, const Pool& pool,
                                   const std::vector<BlockVector>& blocks,
                                   const AveragingInstance& average);

// Pool seminorm of the sum of m successive blocks with certified norm upper
// bounds <= 1 and m <= basis_floor of the first block; asserts the value is
// at most K = (2N^3+4thetaN^2-4thetaN)/(N^2-3thetaN+2theta^2).
VerificationReport asymptotic_c0_check(const TruncatedSpace& space, const Pool& pool,
                                       const std::vector<BlockVector>& family);

struct WitnessReport {
  TupleCode tuple;
  GammaId id;
  Rational achieved;
  Rational predicted;
  bool admissible = false;
  std::vector<GammaId> witnesses;        // windowed maximizer per block
  std::vector<RankInterval> windows;
};

// Builds the admissible rank-(q+1) t1 tuple whose average pairs each block
// with its own windowed seminorm witness, materializes it into the pool and
// evaluates it against the sum of the blocks. For normalized blocks the
// achieved value is exactly (theta/N) times the mean of the per-block
// witness values. Blocks must be skipped (a rank gap between consecutive
// fdd ranges) and each windowed seminorm must be >= 1.
WitnessReport build_theta_witness(std::vector<BlockVector> blocks, Pool& pool);

// Admissibility data for extending a witness chain by one t2 step over the
// given base: the weight floor (#Gamma_{rank(base)})^2 that any extension
// must respect, from the counting recurrence.
struct ChainStepReport {
  GammaId base;
  std::uint32_t base_rank = 0;
  std::uint32_t base_age = 0;
  bool extendable = false;  // age(base) < N
  Integer n_floor;
  Rational step_weight;  // theta/N: the per-unit gain (theta/N)(k/n) * average
};

ChainStepReport theta_chain_step(const Pool& pool, GammaId base);

}  // namespace bd
