#include "bd/counting.hpp"

#include "bd/errors.hpp"

namespace bd {

namespace {

// c += z * a * scale
void add_shifted_scaled(std::vector<Integer>& c, const std::vector<Integer>& a,
                        const Integer& scale) {
  if (c.size() < a.size() + 1) c.resize(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i + 1] += a[i] * scale;
}

void add_into(std::vector<Integer>& c, const std::vector<Integer>& a) {
  if (c.size() < a.size()) c.resize(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
}

// Number of admissible n in [max(k, n_min), n_max], clamped at zero.
Integer n_choices(const Integer& k, const Integer& n_min, const Integer& n_max) {
  Integer lo = k > n_min ? k : n_min;
  if (lo > n_max) return 0;
  return n_max - lo + 1;
}

}  // namespace

std::vector<Integer> LevelCounter::shape_polynomial(std::uint32_t lo, std::uint32_t hi) {
  if (lo > hi) return {Integer(1)};
  ensure_computed(hi);
  // weight(a, b) = #members with rank in [a, b] = Gamma_b - Gamma_{a-1}
  auto weight = [&](std::uint32_t a, std::uint32_t b) -> Integer {
    Integer w = gamma_[b];
    if (a > 0) w -= gamma_[a - 1];
    return w;
  };
  // suffix[pos - lo] = polynomial for sequences inside [pos, hi]
  std::vector<std::vector<Integer>> suffix(hi - lo + 2);
  suffix[hi - lo + 1] = {Integer(1)};
  for (std::uint32_t pos = hi + 1; pos-- > lo;) {
    std::vector<Integer> acc = suffix[pos - lo + 1];  // level pos unused
    for (std::uint32_t end = pos; end <= hi; ++end) {
      add_shifted_scaled(acc, suffix[end - lo + 1], 2 * weight(pos, end));
    }
    suffix[pos - lo] = std::move(acc);
  }
  return suffix[0];
}

void LevelCounter::ensure_computed(std::uint32_t q) {
  const std::uint32_t ages = static_cast<std::uint32_t>(params_.n());
  while (delta_.size() <= q) {
    std::uint32_t rank = static_cast<std::uint32_t>(delta_.size());
    if (rank == 0) {
      delta_.push_back(1);  // the origin atom
      gamma_.push_back(1);
      by_age_.push_back(std::vector<Integer>(ages + 1, 0));
      continue;
    }
    std::vector<Integer> by_age(ages + 1, 0);
    Integer nmax = gamma_[rank - 1] * gamma_[rank - 1];

    // age 1: t1 tuples, windows inside [0, rank-1], n in [k, nmax]
    {
      std::vector<Integer> shapes = shape_polynomial(0, rank - 1);
      for (std::size_t k = 1; k < shapes.size(); ++k) {
        by_age[1] += shapes[k] * n_choices(Integer(k), 1, nmax);
      }
    }

    // age a+1: t2 tuples over a base of rank p <= rank-2 and age a < N,
    // windows inside [p+1, rank-1], n in [max(k, Gamma_p^2), nmax]
    for (std::uint32_t p = 1; p + 2 <= rank; ++p) {
      Integer nmin = gamma_[p] * gamma_[p];
      std::vector<Integer> shapes = shape_polynomial(p + 1, rank - 1);
      Integer per_base = 0;
      for (std::size_t k = 1; k < shapes.size(); ++k) {
        per_base += shapes[k] * n_choices(Integer(k), nmin, nmax);
      }
      if (per_base == 0) continue;
      for (std::uint32_t a = 1; a < ages; ++a) {
        if (by_age_[p][a] == 0) continue;
        by_age[a + 1] += by_age_[p][a] * per_base;
      }
    }

    Integer total = 0;
    for (std::uint32_t a = 1; a <= ages; ++a) total += by_age[a];
    delta_.push_back(total);
    gamma_.push_back(gamma_[rank - 1] + total);
    by_age_.push_back(std::move(by_age));
  }
}

const Integer& LevelCounter::delta_count(std::uint32_t q) {
  ensure_computed(q);
  return delta_[q];
}

const Integer& LevelCounter::gamma_count(std::uint32_t q) {
  ensure_computed(q);
  return gamma_[q];
}

const Integer& LevelCounter::delta_count_by_age(std::uint32_t q, std::uint32_t age) {
  if (age == 0 || age > static_cast<std::uint32_t>(params_.n())) {
    throw Error (Errc::bad_input, "age out of range");
  }
  ensure_computed(q);
  return by_age_[q][age];
}

Integer LevelCounter::n_max(std::uint32_t rank) {
  if (rank == 0) throw Error(Errc::bad_input, "rank 0 has no tuples");
  const Integer& g = gamma_count(rank - 1);
  return g * g;
}

Integer LevelCounter::t2_n_min(std::uint32_t base_rank) {
  const Integer& g = gamma_count(base_rank);
  return g * g;
}

}  // namespace bd
