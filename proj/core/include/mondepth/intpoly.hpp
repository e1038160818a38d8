#ifndef MONDEPTH_INTPOLY_HPP
#define MONDEPTH_INTPOLY_HPP

#include <string>
#include <vector>

#include "mondepth/monomial.hpp"

namespace mondepth {

/// Polynomial in t with integer coefficients, coeffs[d] = coefficient of t^d.
/// Normal form: no trailing zeros; the zero polynomial has an empty vector.
struct IntPolynomial {
  std::vector<Int> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }
  static IntPolynomial one() { return IntPolynomial({Int(1)}); }

  void normalize();
  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for 0
  Int coeff(long d) const;
  Int eval_at_one() const;

  bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;  // "1 - 2t + t^2"
};

// cap < 0 means no truncation; otherwise results are truncated past t^cap.
IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b, long cap = -1);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b, long cap = -1);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b, long cap = -1);
IntPolynomial poly_shift(const IntPolynomial& a, long e, long cap = -1);  // * t^e
IntPolynomial poly_truncate(IntPolynomial a, long cap);

/// (1 - t^e), and (1 - t)^k expanded.
IntPolynomial one_minus_tpow(long e);
IntPolynomial one_minus_t_power(long k);

/// Exact division by (1 - t); requires a(1) == 0.
IntPolynomial divide_by_one_minus_t(const IntPolynomial& a);

}

#endif
