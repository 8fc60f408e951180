#include "bd/checks.hpp"

#include "bd/errors.hpp"

namespace bd {

VerificationReport compatibility_check(const TruncatedSpace& space) {
  VerificationReport report;
  const Pool& pool = space.pool();
  std::uint32_t truncation = space.truncation();
  for (std::uint32_t p = 0; p < truncation; ++p) {
    for (std::uint32_t q = p + 1; q <= truncation; ++q) {
      bool pass = true;
      std::string witness = "all columns equal";
      for (GammaId delta : space.structure().gamma_up_to(p)) {
        SparseRow lhs = space.ext(p, truncation).column(delta);
        SparseRow rhs = space.ext(q, truncation).apply(space.restrict_to(lhs, q));
        if (!(lhs == rhs)) {
          pass = false;
          witness = "column " + pool.digest(delta) + " differs";
          break;
        }
      }
      report.add("framework",
                 "compatibility[p=" + std::to_string(p) + ",q=" + std::to_string(q) + "]",
                 witness, "i_p = i_q r_q i_p", pass);
    }
  }
  return report;
}

VerificationReport fdd_check(const TruncatedSpace& space, const std::vector<SparseRow>& samples) {
  VerificationReport report;
  std::uint32_t truncation = space.truncation();
  Rational initial_bound = space.c_bound();
  Rational interval_bound = 2 * space.c_bound();

  std::size_t initial_checked = 0, initial_failed = 0;
  std::size_t interval_checked = 0, interval_failed = 0;
  std::string first_failure = "";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Rational norm = samples[i].sup_norm();
    for (std::uint32_t lo = 0; lo <= truncation; ++lo) {
      for (std::uint32_t hi = lo; hi <= truncation; ++hi) {
        Rational projected = space.project({lo, hi}, samples[i]).sup_norm();
        if (lo == 0) {
          ++initial_checked;
          if (projected > initial_bound * norm) {
            ++initial_failed;
            if (first_failure.empty()) {
              first_failure = "sample " + std::to_string(i) + " E=[0," + std::to_string(hi) + "]";
            }
          }
        }
        ++interval_checked;
        if (projected > interval_bound * norm) {
          ++interval_failed;
          if (first_failure.empty()) {
            first_failure = "sample " + std::to_string(i) + " E=[" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]";
          }
        }
      }
    }
  }
  report.add("framework", "fdd-initial-projections",
             std::to_string(initial_failed) + " failures of " + std::to_string(initial_checked) +
                 (first_failure.empty() ? "" : " (" + first_failure + ")"),
             "sup|P_[0,p]x| <= c_bound sup|x|", initial_failed == 0);
  report.add("framework", "fdd-interval-projections",
             std::to_string(interval_failed) + " failures of " + std::to_string(interval_checked),
             "sup|P_E x| <= 2 c_bound sup|x|", interval_failed == 0);
  return report;
}

VerificationReport duality_checks(const TruncatedSpace& space) {
  VerificationReport report;
  const Pool& pool = space.pool();
  std::uint32_t truncation = space.truncation();
  std::vector<GammaId> all = space.structure().gamma_up_to(truncation);

  std::vector<DualTriple> triples;
  triples.reserve(all.size());
  for (GammaId id : all) triples.push_back(space.dual_triple(id));

  std::size_t failed = 0;
  std::string witness;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      Rational value = triples[i].d_row.dot(space.basis_vector(all[j]));
      Rational expected = i == j ? 1 : 0;
      if (value != expected) {
        ++failed;
        if (witness.empty()) {
          witness = "d*[" + pool.digest(all[i]) + "](d[" + pool.digest(all[j]) + "]) = " +
                    format_rational(value);
        }
      }
    }
  }
  report.add("framework", "biorthogonality",
             std::to_string(failed) + " failures of " + std::to_string(all.size() * all.size()) +
                 (witness.empty() ? "" : " (" + witness + ")"),
             "d_xi*(d_gamma) = [xi = gamma]", failed == 0);

  for (std::uint32_t q = 0; q <= truncation; ++q) {
    std::vector<GammaId> gamma_q = space.structure().gamma_up_to(q);
    std::vector<SparseRow> d_rows;
    d_rows.reserve(gamma_q.size());
    for (GammaId id : gamma_q) d_rows.push_back(space.dual_triple(id).d_row);
    std::size_t rank = exact_rank(d_rows, gamma_q);
    report.add("framework", "dual-span[q=" + std::to_string(q) + "]", std::to_string(rank),
               std::to_string(gamma_q.size()), rank == gamma_q.size());
  }

  // Span containment of the extension functionals: in coordinates this is
  // exactly support containment in the previous Gamma level.
  std::size_t span_failed = 0;
  std::string span_witness;
  for (GammaId id : all) {
    std::uint32_t rank = pool.rank(id);
    if (rank == 0) continue;
    const SparseRow& c_row = space.dual_triple(id).c_row;
    for (const auto& [ref, value] : c_row.entries()) {
      if (pool.rank(ref) >= rank) {
        ++span_failed;
        if (span_witness.empty()) span_witness = pool.digest(id);
        break;
      }
    }
  }
  report.add("framework", "extension-row-span",
             std::to_string(span_failed) + " failures" +
                 (span_witness.empty() ? "" : " (" + span_witness + ")"),
             "c_gamma* in span of previous level", span_failed == 0);
  return report;
}

Ell1Witness ell1_lower_witness(const TruncatedSpace& space, const SparseRow& lambda) {
  if (lambda.empty()) throw Error(Errc::bad_input, "empty coefficient family");
  const Pool& pool = space.pool();
  std::uint32_t q = 0;
  for (const auto& [id, value] : lambda.entries()) {
    if (!space.structure().contains(id)) {
      throw Error(Errc::unknown_gamma, "coefficient id outside the truncation");
    }
    q = std::max(q, pool.rank(id));
  }
  SparseRow witness(pool);
  const SparseMatrix& to_top = space.ext(q, space.truncation());
  for (const auto& [id, value] : lambda.entries()) {
    witness.add_scaled(to_top.column(id), rational_sign(value));
  }
  Ell1Witness out{std::move(witness), Rational(0), Rational(0)};
  for (const auto& [id, value] : lambda.entries()) {
    out.pairing += value * out.witness.get(id);
  }
  out.bound = out.pairing / out.witness.sup_norm();
  return out;
}

}  // namespace bd
