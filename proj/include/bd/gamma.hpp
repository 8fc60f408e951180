#pragma once

#include <cstdint>
#include <functional>
#include <limits>

namespace bd {

// Opaque handle to an interned member of a Pool. Identity is content
// addressed (see Pool); the handle itself is only valid together with the
// pool that produced it. Ordering between handles is defined by the pool's
// canonical order, not by the raw value.
struct GammaId {
  std::uint32_t value = 0;

  friend bool operator==(GammaId a, GammaId b) { return a.value == b.value; }
  friend bool operator!=(GammaId a, GammaId b) { return a.value != b.value; }
};

// Closed interval [lo, hi] of level indices. Tuples only ever carry
// non-empty finite intervals.
struct RankInterval {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  bool contains(std::uint32_t rank) const { return lo <= rank && rank <= hi; }
  friend bool operator==(RankInterval a, RankInterval b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Evaluation window: a (possibly unbounded) interval of level indices.
// Window::all() is [0, infinity); empty windows are normal values.
struct Window {
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t lo = 0;
  std::uint32_t hi = kInf;
  bool empty = false;

  static Window all() { return Window{}; }
  static Window none() { return Window{0, 0, true}; }
  static Window of(RankInterval e) { return Window{e.lo, e.hi, false}; }
  static Window range(std::uint32_t lo, std::uint32_t hi) {
    if (lo > hi) return none();
    return Window{lo, hi, false};
  }

  bool contains(std::uint32_t rank) const { return !empty && lo <= rank && rank <= hi; }

  Window intersect(Window other) const {
    if (empty || other.empty) return none();
    std::uint32_t nlo = lo > other.lo ? lo : other.lo;
    std::uint32_t nhi = hi < other.hi ? hi : other.hi;
    if (nlo > nhi) return none();
    return Window{nlo, nhi, false};
  }
};

}  // namespace bd

template <>
struct std::hash<bd::GammaId> {
  std::size_t operator()(bd::GammaId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
