#include "bd/pool.hpp"

#include <algorithm>
#include <sstream>

#include <sodium.h>

#include "bd/errors.hpp"

namespace bd {

std::string content_digest(const std::string& encoding) {
  unsigned char hash[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(hash, reinterpret_cast<const unsigned char*>(encoding.data()),
                     encoding.size());
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(16);
  for (int i = 0; i < 8; ++i) {
    out.push_back(hex[hash[i] >> 4]);
    out.push_back(hex[hash[i] & 0xf]);
  }
  return out;
}

Pool::Pool(X0Params params) : params_(std::move(params)), counter_(params_) {
  Member origin;
  origin.kind = Kind::origin;
  origin.rank = 0;
  origin.age = 0;
  origin.encoding = "G0";
  origin.digest = content_digest(origin.encoding);
  intern(std::move(origin));
}

const Pool::Member& Pool::member(GammaId id) const {
  if (!contains(id)) throw Error(Errc::unknown_gamma, "handle out of range");
  return members_[id.value];
}

GammaId Pool::intern(Member m) {
  auto it = by_digest_.find(m.digest);
  if (it != by_digest_.end()) {
    if (members_[it->second].encoding != m.encoding) {
      throw Error(Errc::bad_input, "digest collision between distinct members");
    }
    return GammaId{it->second};
  }
  std::uint32_t idx = static_cast<std::uint32_t>(members_.size());
  if (by_rank_.size() <= m.rank) by_rank_.resize(m.rank + 1);
  by_rank_[m.rank].push_back(idx);
  by_digest_.emplace(m.digest, idx);
  members_.push_back(std::move(m));
  return GammaId{idx};
}

GammaId Pool::add_atom(const std::string& name, std::uint32_t rank) {
  if (name.empty() || name.find_first_of(" \t()[]") != std::string::npos) {
    throw Error(Errc::bad_input, "atom name must be a bare token");
  }
  Member m;
  m.kind = Kind::atom;
  m.rank = rank;
  m.age = 0;
  m.name = name;
  m.encoding = "A " + std::to_string(rank) + " " + name;
  m.digest = content_digest(m.encoding);
  return intern(std::move(m));
}

AgeTag Pool::validate(const TupleCode& t) const {
  if (t.rank < 1) throw Error(Errc::bad_input, "tuples have rank >= 1");
  std::uint32_t window_lo = 0;
  std::uint32_t age = 1;
  if (t.type == TupleType::t2) {
    if (!contains(t.base)) throw Error(Errc::unknown_gamma, "dangling base reference");
    const Member& base = member(t.base);
    if (base.kind != Kind::tuple || base.rank < 1 || base.rank + 2 > t.rank) {
      throw Error(Errc::bad_base_rank, "base must be an aged member of rank in [1, rank-2]");
    }
    if (base.age >= static_cast<std::uint32_t>(params_.n())) {
      throw Error(Errc::age_exhausted, "base already has age N");
    }
    window_lo = base.rank + 1;
    age = base.age + 1;
  }
  const std::uint32_t window_hi = t.rank - 1;

  if (t.entries.empty()) throw Error(Errc::bad_k, "tuples carry at least one entry");
  if (Integer(static_cast<unsigned long>(t.entries.size())) > t.n) {
    throw Error(Errc::bad_k, "entry count exceeds the weight parameter n");
  }

  Integer nmax = counter_.n_max(t.rank);
  Integer nmin = t.type == TupleType::t2
                     ? counter_.t2_n_min(member(t.base).rank)
                     : Integer(1);
  if (t.n < nmin || t.n > nmax) {
    throw Error(Errc::bad_n, "weight parameter n outside [" + nmin.get_str() + ", " +
                                 nmax.get_str() + "]");
  }

  std::uint32_t next_free = window_lo;
  for (const TupleEntry& entry : t.entries) {
    if (entry.sign != 1 && entry.sign != -1) {
      throw Error(Errc::bad_input, "entry sign must be +1 or -1");
    }
    if (entry.window.lo > entry.window.hi || entry.window.lo < next_free ||
        entry.window.hi > window_hi) {
      throw Error(Errc::non_successive_intervals,
                  "intervals must be successive and inside the admissible window");
    }
    if (!contains(entry.node)) throw Error(Errc::unknown_gamma, "dangling node reference");
    if (!entry.window.contains(member(entry.node).rank)) {
      throw Error(Errc::rank_mismatch, "node rank outside its interval");
    }
    next_free = entry.window.hi + 1;
  }
  return AgeTag{age};
}

GammaId Pool::materialize(const TupleCode& t) {
  AgeTag tag = validate(t);
  Member m;
  m.kind = Kind::tuple;
  m.rank = t.rank;
  m.age = tag.age;
  m.code = t;
  m.encoding = encode(t);
  m.digest = content_digest(m.encoding);
  return intern(std::move(m));
}

GammaId Pool::intern_unchecked(const TupleCode& t) {
  Member m;
  m.kind = Kind::tuple;
  m.rank = t.rank;
  m.age = 1;
  if (t.type == TupleType::t2 && contains(t.base)) m.age = member(t.base).age + 1;
  m.code = t;
  m.encoding = encode(t);
  m.digest = content_digest(m.encoding);
  return intern(std::move(m));
}

std::uint32_t Pool::rank(GammaId id) const { return member(id).rank; }
std::uint32_t Pool::age(GammaId id) const { return member(id).age; }
bool Pool::is_tuple(GammaId id) const { return member(id).kind == Kind::tuple; }

const TupleCode& Pool::tuple(GammaId id) const {
  const Member& m = member(id);
  if (m.kind != Kind::tuple) throw Error(Errc::unknown_gamma, "member is not a tuple");
  return m.code;
}

const std::string& Pool::digest(GammaId id) const { return member(id).digest; }
const std::string& Pool::encoding(GammaId id) const { return member(id).encoding; }

std::optional<GammaId> Pool::find_digest(const std::string& digest) const {
  auto it = by_digest_.find(digest);
  if (it == by_digest_.end()) return std::nullopt;
  return GammaId{it->second};
}

int compare_tuple_codes(const Pool& pool, const TupleCode& ta, const TupleCode& tb) {
  if (ta.rank != tb.rank) return ta.rank < tb.rank ? -1 : 1;
  if (ta.type != tb.type) return ta.type == TupleType::t1 ? -1 : 1;
  if (ta.type == TupleType::t2) {
    int c = pool.compare(ta.base, tb.base);
    if (c != 0) return c;
  }
  if (ta.n != tb.n) return ta.n < tb.n ? -1 : 1;
  if (ta.entries.size() != tb.entries.size()) {
    return ta.entries.size() < tb.entries.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < ta.entries.size(); ++i) {
    const TupleEntry& ea = ta.entries[i];
    const TupleEntry& eb = tb.entries[i];
    if (ea.window.lo != eb.window.lo) return ea.window.lo < eb.window.lo ? -1 : 1;
    if (ea.window.hi != eb.window.hi) return ea.window.hi < eb.window.hi ? -1 : 1;
    int c = pool.compare(ea.node, eb.node);
    if (c != 0) return c;
    if (ea.sign != eb.sign) return ea.sign > eb.sign ? -1 : 1;  // +1 sorts first
  }
  return 0;
}

int Pool::compare(GammaId a, GammaId b) const {
  if (a == b) return 0;
  const Member& ma = member(a);
  const Member& mb = member(b);
  if (ma.rank != mb.rank) return ma.rank < mb.rank ? -1 : 1;
  auto kind_order = [](Kind k) { return k == Kind::origin ? 0 : (k == Kind::atom ? 1 : 2); };
  if (ma.kind != mb.kind) return kind_order(ma.kind) < kind_order(mb.kind) ? -1 : 1;
  switch (ma.kind) {
    case Kind::origin:
      return 0;
    case Kind::atom:
      return ma.name < mb.name ? -1 : (ma.name == mb.name ? 0 : 1);
    case Kind::tuple:
      return compare_tuple_codes(*this, ma.code, mb.code);
  }
  return 0;
}

std::vector<GammaId> Pool::members_of_rank(std::uint32_t rank) const {
  std::vector<GammaId> out;
  if (rank < by_rank_.size()) {
    out.reserve(by_rank_[rank].size());
    for (std::uint32_t idx : by_rank_[rank]) out.push_back(GammaId{idx});
  }
  std::sort(out.begin(), out.end(), IdLess{this});
  return out;
}

std::vector<GammaId> Pool::all_members() const {
  std::vector<GammaId> out;
  out.reserve(members_.size());
  for (std::uint32_t i = 0; i < members_.size(); ++i) out.push_back(GammaId{i});
  std::sort(out.begin(), out.end(), IdLess{this});
  return out;
}

bool Pool::level_complete(std::uint32_t rank) const {
  return rank < level_complete_.size() && level_complete_[rank];
}

void Pool::mark_level_complete(std::uint32_t rank) {
  if (level_complete_.size() <= rank) level_complete_.resize(rank + 1, false);
  level_complete_[rank] = true;
}

std::string Pool::encode(const TupleCode& t) const {
  std::ostringstream out;
  out << (t.type == TupleType::t1 ? "T1 " : "T2 ") << t.rank << ' ';
  if (t.type == TupleType::t2) {
    out << member(t.base).digest << ' ';
  }
  out << t.n.get_str() << " [";
  bool first = true;
  for (const TupleEntry& entry : t.entries) {
    if (!first) out << ' ';
    first = false;
    out << '(' << (entry.sign > 0 ? "+1" : "-1") << ' ' << entry.window.lo << ' '
        << entry.window.hi << ' ' << member(entry.node).digest << ')';
  }
  out << ']';
  return out.str();
}

namespace {

std::vector<std::string> tokenize_record(const std::string& line) {
  std::string cleaned;
  cleaned.reserve(line.size());
  for (char c : line) {
    if (c == '(' || c == ')' || c == '[' || c == ']') {
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(c);
    }
  }
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::uint32_t parse_u32(const std::string& token) {
  try {
    unsigned long v = std::stoul(token);
    if (v > 0xffffffffUL) throw std::out_of_range("u32");
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw Error(Errc::parse, "bad integer token '" + token + "'");
  }
}

}  // namespace

TupleCode Pool::decode(const std::string& line) const {
  std::vector<std::string> tokens = tokenize_record(line);
  if (tokens.empty()) throw Error(Errc::parse, "empty tuple record");
  TupleCode t;
  std::size_t pos = 0;
  if (tokens[pos] == "T1") {
    t.type = TupleType::t1;
  } else if (tokens[pos] == "T2") {
    t.type = TupleType::t2;
  } else {
    throw Error(Errc::parse, "tuple record must start with T1 or T2");
  }
  ++pos;
  auto need = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw Error(Errc::parse, std::string("missing ") + what);
    return tokens[pos++];
  };
  t.rank = parse_u32(need("rank"));
  if (t.type == TupleType::t2) {
    const std::string& dig = need("base digest");
    auto base = find_digest(dig);
    if (!base) throw Error(Errc::unknown_gamma, "unknown base digest " + dig);
    t.base = *base;
  }
  const std::string& n_token = need("weight parameter");
  for (char c : n_token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::parse, "bad weight parameter '" + n_token + "'");
    }
  }
  t.n = Integer(n_token);
  while (pos < tokens.size()) {
    TupleEntry entry;
    const std::string& sign = need("entry sign");
    if (sign == "+1") {
      entry.sign = 1;
    } else if (sign == "-1") {
      entry.sign = -1;
    } else {
      throw Error(Errc::parse, "bad entry sign '" + sign + "'");
    }
    entry.window.lo = parse_u32(need("entry lo"));
    entry.window.hi = parse_u32(need("entry hi"));
    const std::string& dig = need("entry digest");
    auto node = find_digest(dig);
    if (!node) throw Error(Errc::unknown_gamma, "unknown node digest " + dig);
    entry.node = *node;
    t.entries.push_back(entry);
  }
  return t;
}

}  // namespace bd
