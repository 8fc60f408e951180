#include "bd/block_vector.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "bd/errors.hpp"

namespace bd {

std::uint32_t BlockVector::min_rank() const {
  if (empty()) throw Error(Errc::bad_input, "empty vector has no support");
  std::uint32_t best = Window::kInf;
  for (const auto& [id, value] : coeffs_.entries()) best = std::min(best, pool().rank(id));
  return best;
}

std::uint32_t BlockVector::max_rank() const {
  if (empty()) throw Error(Errc::bad_input, "empty vector has no support");
  std::uint32_t best = 0;
  for (const auto& [id, value] : coeffs_.entries()) best = std::max(best, pool().rank(id));
  return best;
}

GammaId BlockVector::first_id() const {
  if (empty()) throw Error(Errc::bad_input, "empty vector has no support");
  return coeffs_.entries().begin()->first;
}

GammaId BlockVector::last_id() const {
  if (empty()) throw Error(Errc::bad_input, "empty vector has no support");
  return coeffs_.entries().rbegin()->first;
}

Integer BlockVector::basis_floor(LevelCounter& counter) const {
  std::uint32_t r = min_rank();
  if (r == 0) return 1;
  return 1 + counter.gamma_count(r - 1);
}

void BlockVector::write(std::ostream& out) const {
  for (const auto& [id, value] : coeffs_.entries()) {
    out << pool().digest(id) << ' ' << format_rational(value) << '\n';
  }
}

BlockVector BlockVector::read(const Pool& pool, std::istream& in) {
  BlockVector out{SparseRow(pool)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string digest, coeff;
    if (!(fields >> digest >> coeff)) throw Error(Errc::parse, "bad vector record '" + line + "'");
    auto id = pool.find_digest(digest);
    if (!id) throw Error(Errc::unknown_gamma, "unknown id " + digest);
    out.add(*id, parse_rational(coeff));
  }
  return out;
}

bool strictly_before(const BlockVector& a, const BlockVector& b) {
  if (a.empty() || b.empty()) return false;
  return a.pool().less(a.last_id(), b.first_id());
}

bool skipped_gap(const BlockVector& a, const BlockVector& b) {
  if (a.empty() || b.empty()) return false;
  return a.max_rank() + 1 < b.min_rank();
}

}  // namespace bd
