#pragma once

#include <optional>
#include <unordered_map>

#include "bd/block_vector.hpp"
#include "bd/space.hpp"

namespace bd {

// Exact evaluation of e_gamma* composed with an interval projection against
// a basis-coefficient vector, by recursion on rank:
//
//   eval(gamma, E, x) = [rank(gamma) in E] * a_gamma
//                     + eval(base, E, x)                        (t2 only)
//                     + (theta/N)(1/n) sum_i sign_i * eval(eta_i, E ^ E_i, x)
//
// Inner ranks strictly decrease, so the recursion terminates; identical
// subproblems are memoized per target vector.
class Evaluator {
 public:
  Evaluator(const Pool& pool, const BlockVector& x) : pool_(&pool), x_(&x) {}

  Rational eval(GammaId gamma, Window window);

 private:
  const Pool* pool_;
  const BlockVector* x_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

Rational eval(const Pool& pool, GammaId gamma, Window window, const BlockVector& x);

struct SeminormValue {
  Rational value;
  std::optional<GammaId> witness;  // canonical-first maximizer, absent for 0 on empty pools
};

// max over the materialized pool of |eval(delta, ALL, x)|: a certified lower
// bound on the norm, monotone under pool growth.
SeminormValue pool_seminorm(const Pool& pool, const BlockVector& x);

struct NormInterval {
  Rational lower;
  Rational upper;
  std::optional<GammaId> lower_witness;
  std::string upper_method;  // "restriction-bound" or "triangle-bound"
};

// Certified two-sided bounds: lower from the pool seminorm (attained by the
// exhibited functional), upper from min(C * sup of the restricted
// coordinates, C * sum |a_gamma|) with C = N/(N-2theta). The true norm lies
// between the two.
NormInterval norm_interval(const TruncatedSpace& space, const Pool& pool, const BlockVector& x);

}  // namespace bd
