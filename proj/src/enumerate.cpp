#include "bd/enumerate.hpp"

#include <algorithm>

#include "bd/errors.hpp"

namespace bd {

namespace {

struct Generator {
  const Pool& pool;
  std::uint32_t rank;
  Integer n_max;
  std::vector<TupleCode>* out;

  // Members available per level, canonical order.
  std::vector<GammaId> candidates(RankInterval window) const {
    std::vector<GammaId> ids;
    for (std::uint32_t p = window.lo; p <= window.hi; ++p) {
      std::vector<GammaId> level = pool.members_of_rank(p);
      ids.insert(ids.end(), level.begin(), level.end());
    }
    return ids;
  }

  void emit_all_weights(TupleCode& code, const Integer& n_min) const {
    Integer k(static_cast<unsigned long>(code.entries.size()));
    Integer lo = k > n_min ? k : n_min;
    for (Integer n = lo; n <= n_max; ++n) {
      code.n = n;
      out->push_back(code);
    }
  }

  // Extends the entry list over the chosen interval shape with every node
  // and sign combination.
  void fill_entries(TupleCode& code, const std::vector<RankInterval>& shape, std::size_t index,
                    const Integer& n_min) const {
    if (index == shape.size()) {
      emit_all_weights(code, n_min);
      return;
    }
    for (GammaId node : candidates(shape[index])) {
      for (int sign : {1, -1}) {
        code.entries.push_back({sign, shape[index], node});
        fill_entries(code, shape, index + 1, n_min);
        code.entries.pop_back();
      }
    }
  }

  // All sequences of successive intervals inside [from, window_hi].
  void walk_shapes(std::vector<RankInterval>& shape, std::uint32_t from, std::uint32_t window_hi,
                   TupleCode& code, const Integer& n_min) const {
    if (!shape.empty()) fill_entries(code, shape, 0, n_min);
    for (std::uint32_t lo = from; lo <= window_hi; ++lo) {
      for (std::uint32_t hi = lo; hi <= window_hi; ++hi) {
        shape.push_back({lo, hi});
        walk_shapes(shape, hi + 1, window_hi, code, n_min);
        shape.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<TupleCode> enumerate_level(const Pool& pool, std::uint32_t rank,
                                       const Integer& budget) {
  if (rank < 1) throw Error(Errc::bad_input, "enumeration starts at rank 1");
  for (std::uint32_t p = 1; p < rank; ++p) {
    if (!pool.level_complete(p)) {
      throw Error(Errc::bad_input, "lower level " + std::to_string(p) + " is incomplete");
    }
  }
  const Integer& count = pool.counter().delta_count(rank);
  if (count > budget) {
    throw BudgetError(count, "level " + std::to_string(rank) + " exceeds the enumeration budget");
  }

  std::vector<TupleCode> out;
  Generator gen{pool, rank, pool.counter().n_max(rank), &out};

  {
    TupleCode code;
    code.type = TupleType::t1;
    code.rank = rank;
    std::vector<RankInterval> shape;
    gen.walk_shapes(shape, 0, rank - 1, code, Integer(1));
  }
  for (std::uint32_t base_rank = 1; base_rank + 2 <= rank; ++base_rank) {
    for (GammaId base : pool.members_of_rank(base_rank)) {
      if (!pool.is_tuple(base)) continue;
      if (pool.age(base) >= static_cast<std::uint32_t>(pool.params().n())) continue;
      TupleCode code;
      code.type = TupleType::t2;
      code.rank = rank;
      code.base = base;
      std::vector<RankInterval> shape;
      gen.walk_shapes(shape, base_rank + 1, rank - 1, code,
                      pool.counter().t2_n_min(base_rank));
    }
  }

  std::sort(out.begin(), out.end(), [&pool](const TupleCode& a, const TupleCode& b) {
    return compare_tuple_codes(pool, a, b) < 0;
  });
  if (Integer(static_cast<unsigned long>(out.size())) != count) {
    throw Error(Errc::bad_input, "enumeration disagrees with the counting recurrence: " +
                                     std::to_string(out.size()) + " vs " + count.get_str());
  }
  return out;
}

void ensure_enumerated(Pool& pool, std::uint32_t truncation, const Integer& budget) {
  for (std::uint32_t rank = 1; rank <= truncation; ++rank) {
    if (pool.level_complete(rank)) continue;
    for (const TupleCode& code : enumerate_level(pool, rank, budget)) {
      pool.materialize(code);
    }
    pool.mark_level_complete(rank);
  }
}

}  // namespace bd
