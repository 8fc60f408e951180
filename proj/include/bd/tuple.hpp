#pragma once

#include <cstdint>
#include <vector>

#include "bd/gamma.hpp"
#include "bd/rational.hpp"

namespace bd {

// The two admissible tuple shapes. A t1 tuple starts a chain (age 1); a t2
// tuple extends the chain of its base element, so its age is age(base) + 1.
enum class TupleType { t1, t2 };

struct TupleEntry {
  int sign = 1;         // +1 or -1
  RankInterval window;  // interval the inner node's rank must fall in
  GammaId node;         // eta_i
};

// Symbolic code of a non-origin member of Gamma. The weight parameter n is
// unbounded (admissible values at rank >= 4 exceed 64 bits).
struct TupleCode {
  TupleType type = TupleType::t1;
  std::uint32_t rank = 1;
  GammaId base;  // only meaningful for t2
  Integer n = 1;
  std::vector<TupleEntry> entries;

  std::size_t k() const { return entries.size(); }
};

// Age of a member: 0 for the origin atom, in [1, N] for tuples.
struct AgeTag {
  std::uint32_t age = 0;
};

}  // namespace bd
