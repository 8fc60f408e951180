#include "bd/subspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bd/errors.hpp"

namespace bd {

namespace {

// Row over Gamma_p of e_gamma* composed with i_p r_p.
SparseRow level_row(const TruncatedSpace& space, GammaId gamma, std::uint32_t p) {
  if (space.pool().rank(gamma) <= p) {
    SparseRow row(space.pool());
    row.set(gamma, 1);
    return row;
  }
  return space.ext(p, space.truncation()).row(gamma);
}

Integer grid_bucket(const Rational& value, const Rational& grid) {
  Rational scaled = value / grid;
  Integer bucket;
  mpz_fdiv_q(bucket.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  return bucket;
}

}  // namespace

Rational functional_distance(const TruncatedSpace& space, GammaId a, GammaId b, std::uint32_t p) {
  if (!space.structure().contains(a) || !space.structure().contains(b)) {
    throw Error(Errc::unknown_gamma, "distance ids outside the truncation");
  }
  return (level_row(space, a, p) - level_row(space, b, p)).l1_norm();
}

PairSchedule pair_search(const TruncatedSpace& space, std::vector<Rational> eps) {
  if (eps.empty()) throw Error(Errc::bad_input, "empty epsilon schedule");
  Rational total(0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0)) throw Error(Errc::bad_input, "epsilons must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw Error(Errc::bad_input, "epsilons must decrease");
    }
    total += eps[i];
  }
  Rational c = space.c_bound();
  if (!(2 * c * c * total < 1)) {
    throw Error(Errc::bad_input,
                "schedule rejected: 2 C^2 sum eps = " + format_rational(2 * c * c * total) +
                    " is not below 1");
  }

  PairSchedule schedule;
  schedule.eps = std::move(eps);
  const Pool& pool = space.pool();
  std::uint32_t truncation = space.truncation();
  std::vector<std::uint32_t> chosen = {0};

  for (std::size_t s = 0; s < schedule.eps.size(); ++s) {
    const Rational& epsilon = schedule.eps[s];
    bool found = false;
    for (std::uint32_t level = chosen.back() + 1; level <= truncation && !found; ++level) {
      std::vector<GammaId> candidates;
      for (std::uint32_t r = chosen.back() + 1; r <= level; ++r) {
        const std::vector<GammaId>& members = space.structure().level(r);
        candidates.insert(candidates.end(), members.begin(), members.end());
      }
      std::sort(candidates.begin(), candidates.end(), IdLess{&pool});

      auto qualifies = [&](GammaId a, GammaId b) {
        for (std::uint32_t p : chosen) {
          if (!(functional_distance(space, a, b, p) < epsilon)) return false;
        }
        return true;
      };

      std::optional<std::pair<GammaId, GammaId>> best;
      auto offer = [&](GammaId a, GammaId b) {
        if (pool.less(b, a)) std::swap(a, b);
        if (!best.has_value() || pool.less(a, best->first) ||
            (a == best->first && pool.less(b, best->second))) {
          best = {a, b};
        }
      };

      // Pigeonhole pass: bucket concatenated level rows on an eps/4 grid in
      // l1; any two rows in one bucket are provably eps/4-close.
      std::size_t dimension = 0;
      for (std::uint32_t p : chosen) dimension += space.structure().gamma_size(p);
      Rational grid = epsilon / Rational(4 * static_cast<unsigned long>(dimension));
      std::map<std::string, std::vector<GammaId>> buckets;
      for (GammaId id : candidates) {
        std::ostringstream key;
        for (std::uint32_t p : chosen) {
          SparseRow row = level_row(space, id, p);
          for (GammaId col : space.structure().gamma_up_to(p)) {
            key << grid_bucket(row.get(col), grid).get_str() << ',';
          }
          key << ';';
        }
        buckets[key.str()].push_back(id);
      }
      for (const auto& [key, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (qualifies(members[i], members[j])) offer(members[i], members[j]);
          }
        }
      }
      // Exhaustive fallback: the grid can separate qualifying pairs that
      // straddle cell boundaries.
      if (!best.has_value()) {
        for (std::size_t i = 0; i < candidates.size() && !best.has_value(); ++i) {
          for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (qualifies(candidates[i], candidates[j])) {
              offer(candidates[i], candidates[j]);
              break;  // candidates scanned in canonical order: first hit is least
            }
          }
        }
      }

      if (best.has_value()) {
        PairRecord record;
        record.level = level;
        record.first = best->first;
        record.second = best->second;
        record.max_distance = 0;
        for (std::uint32_t p : chosen) {
          Rational d = functional_distance(space, record.first, record.second, p);
          record.distances.emplace_back(p, d);
          if (d > record.max_distance) record.max_distance = d;
        }
        schedule.pairs.push_back(std::move(record));
        chosen.push_back(level);
        found = true;
      }
    }
    if (!found) break;
  }
  schedule.complete = schedule.pairs.size() == schedule.eps.size();
  return schedule;
}

ZPresentation build_z(const TruncatedSpace& space, const PairSchedule& schedule) {
  const Pool& pool = space.pool();
  std::uint32_t truncation = space.truncation();
  ZPresentation z;
  z.levels = {0};
  for (const PairRecord& pair : schedule.pairs) z.levels.push_back(pair.level);
  if (z.levels.back() < truncation) z.levels.push_back(truncation);

  for (std::size_t s = 0; s < z.levels.size(); ++s) {
    std::vector<SparseRow> basis;
    std::uint32_t lo = s == 0 ? 0 : z.levels[s - 1] + 1;
    std::uint32_t hi = z.levels[s];
    const PairRecord* pair = s >= 1 && s <= schedule.pairs.size() ? &schedule.pairs[s - 1] : nullptr;
    for (std::uint32_t r = lo; r <= hi; ++r) {
      for (GammaId id : space.structure().level(r)) {
        if (pair && (id == pair->first || id == pair->second)) continue;
        basis.push_back(space.basis_vector(id));
      }
    }
    if (pair) {
      basis.push_back(space.basis_vector(pair->first) + space.basis_vector(pair->second));
    }
    z.block_bases.push_back(std::move(basis));
  }

  std::vector<SparseRow> generators;
  for (const std::vector<SparseRow>& basis : z.block_bases) {
    generators.insert(generators.end(), basis.begin(), basis.end());
  }
  z.dim = exact_rank(generators, space.structure().gamma_up_to(truncation));
  std::size_t expected = space.structure().gamma_size(truncation) - schedule.pairs.size();
  z.report.add("subspace", "z-dimension", std::to_string(z.dim), std::to_string(expected),
               z.dim == expected && z.dim == generators.size());

  const std::size_t top = z.levels.size() - 1;
  const std::uint32_t q_top = z.levels[top];
  std::size_t move_checked = 0, move_failed = 0;
  std::size_t fix_checked = 0, fix_failed = 0;
  for (std::size_t p = 0; p <= top; ++p) {
    std::vector<SparseRow> images;
    Rational bound = p < schedule.pairs.size() ? schedule.eps[p] : Rational(0);
    for (const SparseRow& x : z.block_bases[p]) {
      SparseRow restricted = space.restrict_to(x, z.levels[p]);
      SparseRow image = space.ext(z.levels[p], q_top).apply(restricted);
      for (std::size_t t = p; t < schedule.pairs.size(); ++t) {
        image.set(schedule.pairs[t].second, image.get(schedule.pairs[t].first));
      }
      SparseRow diff = space.restrict_to(x, q_top) - image;
      if (p == top) {
        ++fix_checked;
        if (!diff.empty()) ++fix_failed;
      } else {
        ++move_checked;
        if (diff.sup_norm() > bound * x.sup_norm()) ++move_failed;
      }
      images.push_back(std::move(image));
    }
    z.t_images.push_back(std::move(images));
  }
  z.report.add("subspace", "t-map-displacement",
               std::to_string(move_failed) + " failures of " + std::to_string(move_checked),
               "sup|r(x) - T(x)| <= eps_{p+1} sup|x|", move_failed == 0);
  z.report.add("subspace", "t-map-top-restriction",
               std::to_string(fix_failed) + " failures of " + std::to_string(fix_checked),
               "T_{q,q} = r_q", fix_failed == 0);
  return z;
}

QuotientData quotient_check(const TruncatedSpace& space, const PairSchedule& schedule,
                            const ZPresentation& z) {
  const Pool& pool = space.pool();
  QuotientData data;
  data.ell1_pairing = 0;
  data.ell1_bound = 0;

  for (const PairRecord& pair : schedule.pairs) {
    SparseRow w = (space.dual_triple(pair.first).d_row - space.dual_triple(pair.second).d_row)
                      .scaled(Rational(1, 2));
    data.w_rows.push_back(std::move(w));
  }

  std::size_t annihilation_checked = 0, annihilation_failed = 0;
  for (const SparseRow& w : data.w_rows) {
    for (const std::vector<SparseRow>& basis : z.block_bases) {
      for (const SparseRow& generator : basis) {
        ++annihilation_checked;
        if (w.dot(generator) != 0) ++annihilation_failed;
      }
    }
  }
  data.report.add("subspace", "w-annihilates-z",
                  std::to_string(annihilation_failed) + " failures of " +
                      std::to_string(annihilation_checked),
                  "w_s*(g) = 0", annihilation_failed == 0);

  bool unit_ok = true;
  bool closeness_ok = true;
  for (std::size_t s = 0; s < schedule.pairs.size(); ++s) {
    const PairRecord& pair = schedule.pairs[s];
    SparseRow difference =
        space.basis_vector(pair.first) - space.basis_vector(pair.second);
    if (data.w_rows[s].dot(difference) != 1) unit_ok = false;
    Rational c_gap = (space.dual_triple(pair.first).c_row - space.dual_triple(pair.second).c_row)
                         .l1_norm();
    if (!(c_gap <= schedule.eps[s])) closeness_ok = false;
  }
  data.report.add("subspace", "w-unit-pairing", unit_ok ? "all 1" : "mismatch",
                  "w_s*(d_1 - d_2) = 1", unit_ok);
  data.report.add("subspace", "extension-row-closeness", closeness_ok ? "within eps" : "exceeds",
                  "|c_1* - c_2*|_1 <= eps_s", closeness_ok);

  if (!schedule.pairs.empty()) {
    SparseRow witness(pool);
    for (const PairRecord& pair : schedule.pairs) {
      witness += space.basis_vector(pair.first) - space.basis_vector(pair.second);
    }
    for (const SparseRow& w : data.w_rows) data.ell1_pairing += w.dot(witness);
    Rational expected(static_cast<unsigned long>(schedule.pairs.size()));
    data.ell1_bound = data.ell1_pairing / witness.sup_norm();
    data.report.add("subspace", "w-ell1-lower-witness", format_rational(data.ell1_pairing),
                    format_rational(expected), data.ell1_pairing == expected);
  }
  return data;
}

}  // namespace bd
