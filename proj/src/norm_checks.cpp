#include "bd/norm_checks.hpp"

#include "bd/errors.hpp"

namespace bd {

namespace {

void require_successive(const std::vector<BlockVector>& blocks) {
  for (const BlockVector& block : blocks) {
    if (block.empty()) throw Error(Errc::hypothesis_violated, "blocks must be non-zero");
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (!strictly_before(blocks[i], blocks[i + 1])) {
      throw Error(Errc::hypothesis_violated, "blocks must be successive in basis order");
    }
  }
}

void require_unit_upper(const TruncatedSpace& space, const Pool& pool,
                        const std::vector<BlockVector>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    NormInterval interval = norm_interval(space, pool, blocks[i]);
    if (interval.upper > 1) {
      throw Error(Errc::hypothesis_violated,
                  "block " + std::to_string(i) + " has certified norm upper bound " +
                      format_rational(interval.upper) + " > 1");
    }
  }
}

BlockVector sum_blocks(const Pool& pool, const std::vector<BlockVector>& blocks) {
  BlockVector sum{SparseRow(pool)};
  for (const BlockVector& block : blocks) sum = sum + block;
  return sum;
}

}  // namespace

VerificationReport avg_bound_check(const TruncatedSpace& space, const Pool& pool,
                                   const std::vector<BlockVector>& blocks,
                                   const AveragingInstance& average) {
  if (blocks.empty()) throw Error(Errc::hypothesis_violated, "no blocks given");
  if (average.entries.empty()) throw Error(Errc::hypothesis_violated, "empty average (k = 0)");
  require_successive(blocks);
  require_unit_upper(space, pool, blocks);

  const Integer m(static_cast<unsigned long>(blocks.size()));
  const Integer k(static_cast<unsigned long>(average.entries.size()));
  Integer hypothesis_floor = m * m > k ? m * m : k;
  if (average.n < hypothesis_floor) {
    throw Error(Errc::hypothesis_violated,
                "n = " + average.n.get_str() + " below max(m^2, k) = " + hypothesis_floor.get_str());
  }
  std::uint32_t next_free = 0;
  for (const TupleEntry& entry : average.entries) {
    if (entry.window.lo < next_free || entry.window.lo > entry.window.hi) {
      throw Error(Errc::hypothesis_violated, "average windows must be successive");
    }
    if (!entry.window.contains(pool.rank(entry.node))) {
      throw Error(Errc::hypothesis_violated, "average node rank outside its window");
    }
    next_free = entry.window.hi + 1;
  }

  BlockVector sum = sum_blocks(pool, blocks);
  Evaluator evaluator(pool, sum);
  Rational value(0);
  for (const TupleEntry& entry : average.entries) {
    value += entry.sign * evaluator.eval(entry.node, Window::of(entry.window));
  }
  value /= Rational(average.n);

  Rational bound = pool.params().averaging_bound();
  VerificationReport report;
  report.add("norms", "averaging-bound", format_rational(rational_abs(value)),
             format_rational(bound), rational_abs(value) <= bound);
  return report;
}

VerificationReport asymptotic_c0_check(const TruncatedSpace& space, const Pool& pool,
                                       const std::vector<BlockVector>& family) {
  if (family.empty()) throw Error(Errc::hypothesis_violated, "empty family");
  require_successive(family);
  require_unit_upper(space, pool, family);
  Integer m(static_cast<unsigned long>(family.size()));
  Integer floor = family.front().basis_floor(pool.counter());
  if (m > floor) {
    throw Error(Errc::hypothesis_violated, "family length " + m.get_str() +
                                               " exceeds the certified basis floor " +
                                               floor.get_str());
  }
  SeminormValue value = pool_seminorm(pool, sum_blocks(pool, family));
  Rational bound = pool.params().asymptotic_bound();
  VerificationReport report;
  report.add("norms", "asymptotic-c0-bound", format_rational(value.value),
             format_rational(bound), value.value <= bound);
  return report;
}

WitnessReport build_theta_witness(std::vector<BlockVector> blocks, Pool& pool) {
  if (blocks.empty()) throw Error(Errc::bad_input, "no blocks given");
  for (const BlockVector& block : blocks) {
    if (block.empty()) throw Error(Errc::bad_input, "blocks must be non-zero");
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (!skipped_gap(blocks[i], blocks[i + 1])) {
      throw Error(Errc::not_skipped, "blocks " + std::to_string(i) + " and " +
                                         std::to_string(i + 1) + " leave no rank gap");
    }
  }

  WitnessReport out;
  const std::size_t m = blocks.size();
  std::vector<int> signs(m, 1);
  std::vector<Rational> values(m);
  for (std::size_t j = 0; j < m; ++j) {
    // Corridor available to this block's witness: from its first rank up to
    // just below the next block (one level above its last rank for the final
    // block).
    std::uint32_t lo = blocks[j].min_rank();
    std::uint32_t hi = j + 1 < m ? blocks[j + 1].min_rank() - 1 : blocks[j].max_rank() + 1;
    Window corridor = Window::range(lo, hi);

    Evaluator evaluator(pool, blocks[j]);
    std::optional<GammaId> witness;
    Rational best(0);
    for (GammaId id : pool.all_members()) {
      std::uint32_t rank = pool.rank(id);
      if (!corridor.contains(rank)) continue;
      Rational value = evaluator.eval(id, corridor);
      if (!witness.has_value() || rational_abs(value) > rational_abs(best)) {
        witness = id;
        best = value;
      }
    }
    if (!witness.has_value() || rational_abs(best) < 1) {
      throw Error(Errc::not_normalized,
                  "block " + std::to_string(j) + " has windowed seminorm below 1");
    }
    signs[j] = rational_sign(best) < 0 ? -1 : 1;
    values[j] = rational_abs(best);
    out.witnesses.push_back(*witness);
    out.windows.push_back(
        {lo, std::max(blocks[j].max_rank(), pool.rank(*witness))});
  }

  out.tuple.type = TupleType::t1;
  out.tuple.rank = out.windows.back().hi + 1;
  out.tuple.n = Integer(static_cast<unsigned long>(m));
  for (std::size_t j = 0; j < m; ++j) {
    out.tuple.entries.push_back({signs[j], out.windows[j], out.witnesses[j]});
  }
  out.id = pool.materialize(out.tuple);
  out.admissible = true;

  out.predicted = 0;
  for (const Rational& value : values) out.predicted += value;
  out.predicted *= pool.params().weight() / Rational(out.tuple.n);
  out.achieved = eval(pool, out.id, Window::all(), sum_blocks(pool, blocks));
  return out;
}

ChainStepReport theta_chain_step(const Pool& pool, GammaId base) {
  if (!pool.is_tuple(base)) {
    throw Error(Errc::bad_input, "chain steps extend tuple members");
  }
  ChainStepReport out;
  out.base = base;
  out.base_rank = pool.rank(base);
  out.base_age = pool.age(base);
  out.extendable = out.base_age < static_cast<std::uint32_t>(pool.params().n());
  out.n_floor = pool.counter().t2_n_min(out.base_rank);
  out.step_weight = pool.params().weight();
  return out;
}

}  // namespace bd
