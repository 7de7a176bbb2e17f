#pragma once

#include <map>
#include <string>

#include "rctk/common.hpp"

namespace rctk {

/// Exact Laurent polynomial in q with exponents on the half-integer lattice.
/// Exponents are stored doubled; no zero coefficients are kept.
class QPolynomial {
 public:
  QPolynomial() = default;
  static QPolynomial one() { return monomial(0, 1); }
  static QPolynomial monomial(long long exp2, long long coeff);

  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(long long exp2) const;
  const std::map<long long, long long>& terms() const { return coeffs_; }

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial&) const = default;

  /// q -> q^s (exponent scaling; exact on the lattice).
  QPolynomial substitute_power(long long s) const;
  /// multiply by q^(exp2/2)
  QPolynomial shifted(long long exp2) const;

  long long eval_at_one() const;
  long long min_exp2() const;  // 0 on the zero polynomial
  long long max_exp2() const;

  /// renders e.g. "1 + q^(1/2) + 2q^2 - q^(-1)"
  std::string to_string() const;

 private:
  std::map<long long, long long> coeffs_;
  void insert(long long exp2, long long c);
};

/// Gaussian binomial [p+m choose m] in the variable q^step.
/// Palindromic of degree p*m*step. Throws invalid_input on negative input.
QPolynomial qbinomial(int p, int m, int step = 1);

}  // namespace rctk
