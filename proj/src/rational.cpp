#include "bd/rational.hpp"

#include <cctype>

#include "bd/errors.hpp"

namespace bd {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::inadmissible_rule: return "InadmissibleRule";
    case Errc::bad_interval: return "BadInterval";
    case Errc::unknown_gamma: return "UnknownGamma";
    case Errc::bad_n: return "BadN";
    case Errc::bad_k: return "BadK";
    case Errc::non_successive_intervals: return "NonSuccessiveIntervals";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::age_exhausted: return "AgeExhausted";
    case Errc::bad_base_rank: return "BadBaseRank";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::bad_input: return "BadInput";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::not_skipped: return "NotSkipped";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::config: return "ConfigError";
    case Errc::parse: return "ParseError";
  }
  return "Error";
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(Errc::parse, "empty rational literal");
  std::size_t slash = text.find('/');
  auto check_integer = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw Error(Errc::parse, "bad rational literal '" + text + "'");
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw Error(Errc::parse, "bad rational literal '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw Error(Errc::parse, "bad rational literal '" + text + "'");
      }
    }
  };
  Rational result;
  if (slash == std::string::npos) {
    check_integer(text, true);
    result = Rational(text);
  } else {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_integer(num, true);
    check_integer(den, false);
    if (Integer(den) == 0) throw Error(Errc::parse, "zero denominator in '" + text + "'");
    result = Rational(text);
  }
  result.canonicalize();
  return result;
}

}  // namespace bd
