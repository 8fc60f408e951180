#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bd/counting.hpp"
#include "bd/gamma.hpp"
#include "bd/params.hpp"
#include "bd/tuple.hpp"

namespace bd {

// Intern table for members of Gamma. Identity is content addressed: every
// member has a canonical text encoding and the member's id in files is the
// hex digest of that encoding. The pool is reference closed by construction
// (a tuple can only be built from handles this pool already issued).
//
// Besides tuples the pool holds the distinguished origin atom (the single
// rank-0 member of the standard construction) and, for the generic
// framework tests, free-form named atoms at arbitrary ranks.
class Pool {
 public:
  explicit Pool(X0Params params);

  const X0Params& params() const { return params_; }
  LevelCounter& counter() const { return counter_; }

  GammaId origin() const { return GammaId{0}; }

  // Named atom for fabricated level structures. Not admissible as a tuple
  // reference target in t2 bases.
  GammaId add_atom(const std::string& name, std::uint32_t rank);

  // Checks every admissibility clause of the tuple against the exact level
  // cardinalities and returns the age it would receive. Throws the clause's
  // error on violation.
  AgeTag validate(const TupleCode& t) const;

  // validate + intern. Idempotent: the same tuple always yields the same id.
  GammaId materialize(const TupleCode& t);

  // Interns without validation. Only used by the negative-control fault
  // injection in the verify driver.
  GammaId intern_unchecked(const TupleCode& t);

  bool contains(GammaId id) const { return id.value < members_.size(); }
  std::size_t size() const { return members_.size(); }

  std::uint32_t rank(GammaId id) const;
  std::uint32_t age(GammaId id) const;
  bool is_tuple(GammaId id) const;
  const TupleCode& tuple(GammaId id) const;
  const std::string& digest(GammaId id) const;
  const std::string& encoding(GammaId id) const;

  std::optional<GammaId> find_digest(const std::string& digest) const;

  // Canonical total order: by rank, then structurally. Deterministic across
  // runs (depends only on member content).
  int compare(GammaId a, GammaId b) const;
  bool less(GammaId a, GammaId b) const { return compare(a, b) < 0; }

  std::vector<GammaId> members_of_rank(std::uint32_t rank) const;  // canonical order
  std::vector<GammaId> all_members() const;                        // canonical order

  bool level_complete(std::uint32_t rank) const;
  void mark_level_complete(std::uint32_t rank);

  // Canonical text encoding of a tuple built from this pool's handles, and
  // its inverse. decode resolves member digests and throws UnknownGamma for
  // dangling references.
  std::string encode(const TupleCode& t) const;
  TupleCode decode(const std::string& line) const;

 private:
  enum class Kind { origin, atom, tuple };

  struct Member {
    Kind kind;
    std::uint32_t rank;
    std::uint32_t age;  // 0 for origin/atoms
    std::string name;   // atoms only
    TupleCode code;     // tuples only
    std::string encoding;
    std::string digest;
  };

  GammaId intern(Member member);
  const Member& member(GammaId id) const;

  X0Params params_;
  mutable LevelCounter counter_;
  std::vector<Member> members_;
  std::unordered_map<std::string, std::uint32_t> by_digest_;
  std::vector<std::vector<std::uint32_t>> by_rank_;
  std::vector<bool> level_complete_;
};

// Comparator for canonically ordered containers keyed by GammaId.
struct IdLess {
  const Pool* pool = nullptr;
  bool operator()(GammaId a, GammaId b) const { return pool->less(a, b); }
};

// Canonical structural order on tuple codes (same order the pool uses for
// interned tuple members of equal rank).
int compare_tuple_codes(const Pool& pool, const TupleCode& a, const TupleCode& b);

// Hex digest of the canonical encoding (SHA-256 truncated to 16 hex chars).
std::string content_digest(const std::string& encoding);

}  // namespace bd
