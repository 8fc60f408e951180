#include "bd/eval.hpp"

#include "bd/errors.hpp"

namespace bd {

Rational Evaluator::eval(GammaId gamma, Window window) {
  const std::uint32_t rank = pool_->rank(gamma);
  // Blocks above rank(gamma) are annihilated, so clip the window.
  Window clipped = window.intersect(Window::range(0, rank));
  if (clipped.empty) return 0;
  if (rank >= (1u << 20)) throw Error(Errc::bad_input, "rank too large for memo key");
  std::uint64_t key = (static_cast<std::uint64_t>(gamma.value) << 40) |
                      (static_cast<std::uint64_t>(clipped.lo) << 20) |
                      static_cast<std::uint64_t>(clipped.hi);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  Rational acc(0);
  if (clipped.contains(rank)) acc += x_->coeffs().get(gamma);
  if (rank > 0) {
    if (!pool_->is_tuple(gamma)) {
      throw Error(Errc::bad_input, "evaluation needs tuple members above rank 0");
    }
    const TupleCode& code = pool_->tuple(gamma);
    if (code.type == TupleType::t2) acc += eval(code.base, clipped);
    Rational scale = pool_->params().weight() / Rational(code.n);
    for (const TupleEntry& entry : code.entries) {
      Rational inner = eval(entry.node, clipped.intersect(Window::of(entry.window)));
      acc += entry.sign * scale * inner;
    }
  }
  memo_.emplace(key, acc);
  return acc;
}

Rational eval(const Pool& pool, GammaId gamma, Window window, const BlockVector& x) {
  Evaluator evaluator(pool, x);
  return evaluator.eval(gamma, window);
}

SeminormValue pool_seminorm(const Pool& pool, const BlockVector& x) {
  Evaluator evaluator(pool, x);
  SeminormValue out{Rational(0), std::nullopt};
  for (GammaId id : pool.all_members()) {
    Rational value = rational_abs(evaluator.eval(id, Window::all()));
    if (!out.witness.has_value() || value > out.value) {
      out.value = value;
      out.witness = id;
    }
  }
  return out;
}

NormInterval norm_interval(const TruncatedSpace& space, const Pool& pool, const BlockVector& x) {
  NormInterval out;
  SeminormValue lower = pool_seminorm(pool, x);
  out.lower = lower.value;
  out.lower_witness = lower.witness;
  if (x.empty()) {
    out.upper = 0;
    out.upper_method = "restriction-bound";
    return out;
  }
  Rational c = pool.params().isomorphism_bound();
  Rational triangle = c * x.coeffs().l1_norm();
  out.upper = triangle;
  out.upper_method = "triangle-bound";
  if (x.max_rank() <= space.truncation()) {
    Rational restriction = c * space.restrict_to(space.coords_of(x.coeffs()), x.max_rank()).sup_norm();
    if (restriction < triangle) {
      out.upper = restriction;
      out.upper_method = "restriction-bound";
    }
  }
  return out;
}

}  // namespace bd
