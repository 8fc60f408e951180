#pragma once

#include "bd/errors.hpp"
#include "bd/rational.hpp"

namespace bd {

// Parameters of the weighted construction: an integer N >= 3 and a rational
// theta with 1 < theta < N/2. All derived constants are exact rationals.
class X0Params {
 public:
  X0Params(int n, Rational theta) : n_(n), theta_(std::move(theta)) {
    if (n_ < 3) throw Error(Errc::config, "N must be at least 3");
    if (!(theta_ > 1)) throw Error(Errc::config, "theta must exceed 1");
    if (!(2 * theta_ < n_)) throw Error(Errc::config, "theta must be below N/2");
  }

  static X0Params defaults() { return X0Params(3, Rational(6, 5)); }

  int n() const { return n_; }
  const Rational& theta() const { return theta_; }

  Rational weight() const { return theta_ / n_; }  // theta/N

  // N/(N-2theta): bounds every extension operator norm.
  Rational isomorphism_bound() const { return Rational(n_) / (n_ - 2 * theta_); }

  // 2N/(N-2theta): bounds every interval projection and every d* functional.
  Rational projection_bound() const { return 2 * isomorphism_bound(); }

  // 4N/(N-2theta): bound in the averaging check.
  Rational averaging_bound() const { return 4 * isomorphism_bound(); }

  // K = (2N^3 + 4thetaN^2 - 4thetaN)/(N^2 - 3thetaN + 2theta^2): the
  // asymptotic bound on sums of m successive normalized blocks starting at
  // basis position >= m.
  Rational asymptotic_bound() const {
    Rational nn(n_);
    Rational numerator = 2 * nn * nn * nn + 4 * theta_ * nn * nn - 4 * theta_ * nn;
    Rational denominator = nn * nn - 3 * theta_ * nn + 2 * theta_ * theta_;
    return numerator / denominator;
  }

 private:
  int n_;
  Rational theta_;
};

}  // namespace bd
