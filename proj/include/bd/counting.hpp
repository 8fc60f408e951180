#pragma once

#include <cstdint>
#include <vector>

#include "bd/params.hpp"
#include "bd/rational.hpp"

namespace bd {

// Exact level cardinalities, computed by a counting recurrence instead of
// enumeration: #Delta_q is astronomical from q = 3 on, but admissibility of
// a tuple at any rank only needs the numbers #Gamma_p, which this class
// produces for free. Counts are stratified by age so that the t2 sum ranges
// over exactly the bases that still admit an extension.
class LevelCounter {
 public:
  explicit LevelCounter(X0Params params) : params_(std::move(params)) {}

  const X0Params& params() const { return params_; }

  // #Delta_q and #Gamma_q = sum of #Delta_p for p <= q.
  const Integer& delta_count(std::uint32_t q);
  const Integer& gamma_count(std::uint32_t q);

  // #Delta_q restricted to age a (a in [1, N]; rank 0 has no aged members).
  const Integer& delta_count_by_age(std::uint32_t q, std::uint32_t age);

  // Largest admissible weight parameter for a tuple of the given rank:
  // (#Gamma_{rank-1})^2.
  Integer n_max(std::uint32_t rank);

  // Smallest admissible weight parameter for a t2 tuple over a base of the
  // given rank: (#Gamma_{base_rank})^2.
  Integer t2_n_min(std::uint32_t base_rank);

  // Coefficient vector of the generating polynomial of successive-interval
  // sequences inside levels [lo, hi]: coefficient k counts sequences of k
  // intervals, each interval weighted by 2 * (number of members whose rank
  // it contains). Index 0 is the empty sequence. Exposed for the
  // cross-check tests against direct enumeration.
  std::vector<Integer> shape_polynomial(std::uint32_t lo, std::uint32_t hi);

 private:
  void ensure_computed(std::uint32_t q);

  X0Params params_;
  std::vector<Integer> delta_;
  std::vector<Integer> gamma_;
  std::vector<std::vector<Integer>> by_age_;  // [rank][age], age index 0 unused
};

}  // namespace bd
