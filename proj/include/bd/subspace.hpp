#pragma once

#include "bd/checks.hpp"

namespace bd {

// Exact l1 norm over Gamma_p of the row difference of the two evaluation
// functionals composed with i_p r_p: an upper bound for the operator norm
// of the difference on the space.
Rational functional_distance(const TruncatedSpace& space, GammaId a, GammaId b, std::uint32_t p);

struct PairRecord {
  std::uint32_t level = 0;  // chosen re-indexed level q_s
  GammaId first;
  GammaId second;
  std::vector<std::pair<std::uint32_t, Rational>> distances;  // (p, distance), re-checked
  Rational max_distance;
};

struct PairSchedule {
  std::vector<Rational> eps;
  std::vector<PairRecord> pairs;
  bool complete = false;  // one pair found per epsilon
};

// Greedy re-indexed pair selection: q_0 = 0; for each s pick the first level
// q_s <= Q whose new members contain a pair with functional_distance < eps_s
// at every previously chosen level. Candidate pairs are pigeonholed through
// an eps/4 grid on their concatenated rows first; an exhaustive scan follows
// if the grid produces no collision. Ties break by canonical id order.
// Missing pairs are reported (complete = false), not fatal: the truncation
// may simply be too short.
PairSchedule pair_search(const TruncatedSpace& space, std::vector<Rational> eps);

struct ZPresentation {
  std::vector<std::uint32_t> levels;  // re-indexed levels q_0 = 0 < q_1 < ...
  // Basis of each block N_s, as coordinate vectors over Gamma_Q.
  std::vector<std::vector<SparseRow>> block_bases;
  std::size_t dim = 0;
  // T_{top,p} images of the N_p basis vectors (coordinates over Gamma_{q_top}).
  std::vector<std::vector<SparseRow>> t_images;
  VerificationReport report;
};

// Builds the co-one-per-pair subspace presentation and verifies: (a) the
// T_{top,p} maps move each block basis vector by at most eps_{p+1} times its
// sup norm, (b) T_{top,top} restricts to the plain restriction, (c) the
// generators are independent with dim = #Gamma_Q - #pairs.
ZPresentation build_z(const TruncatedSpace& space, const PairSchedule& schedule);

struct QuotientData {
  std::vector<SparseRow> w_rows;  // w_s* = (d_{first}* - d_{second}*)/2
  Rational ell1_pairing;          // sum of lambda against the signed witness
  Rational ell1_bound;            // certified lower bound for ||sum w_s*||
  VerificationReport report;
};

// Verifies the quotient functionals: (a) every w_s* annihilates every Z
// generator, (b) w_s*(d_first - d_second) = 1, (c) the extension rows of a
// pair differ by at most eps_s in l1, (d) the l1 lower witness for the w*
// family.
QuotientData quotient_check(const TruncatedSpace& space, const PairSchedule& schedule,
                            const ZPresentation& z);

}  // namespace bd
