#pragma once

#include <string>
#include <vector>

#include "bd/space.hpp"

namespace bd {

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  void add(std::string suite, std::string check, std::string lhs, std::string rhs, bool pass) {
    records.push_back({std::move(suite), std::move(check), std::move(lhs), std::move(rhs), pass});
  }

  void merge(VerificationReport other) {
    for (CheckRecord& r : other.records) records.push_back(std::move(r));
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const CheckRecord& r : records) {
      if (!r.pass) ++n;
    }
    return n;
  }

  bool all_pass() const { return failures() == 0; }
};

// i_{p,Q} = i_{q,Q} o r_q o i_{p,Q} on every basis vector of Gamma_p, for
// all p < q <= Q. One record per (p, q); a failing record names the first
// offending basis column.
VerificationReport compatibility_check(const TruncatedSpace& space);

// For every sample x (coordinates over Gamma_Q), every initial projection
// satisfies sup|P_{[0,p]} x| <= c_bound * sup|x| and every interval
// projection satisfies sup|P_E x| <= 2 * c_bound * sup|x|.
VerificationReport fdd_check(const TruncatedSpace& space, const std::vector<SparseRow>& samples);

// (a) biorthogonality of the d* rows against the d basis vectors, all pairs;
// (b) for each q the d* rows of Gamma_q span the full coordinate space of
// Gamma_q (exact rank #Gamma_q); (c) every extension row is supported inside
// the previous level's coordinates.
VerificationReport duality_checks(const TruncatedSpace& space);

struct Ell1Witness {
  SparseRow witness;  // i_q(sum of signed basis rows), coordinates over Gamma_Q
  Rational pairing;   // sum |lambda|, realized exactly by the witness
  Rational bound;     // pairing / sup|witness|: certified lower bound in the model
};

// Witness for the lower l1 estimate of sum lambda_gamma e_gamma*. lambda is
// a sparse coefficient map over the ids of A; throws BadInput when empty.
Ell1Witness ell1_lower_witness(const TruncatedSpace& space, const SparseRow& lambda);

}  // namespace bd
