#include "mondepth/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mondepth {

void IntPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int IntPolynomial::coeff(long d) const {
  if (d < 0 || d >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[d];
}

Int IntPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs) s += c;
  return s;
}

std::string IntPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Int& c = coeffs[d];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || d == 0) os << a;
    if (d >= 1) {
      if (a != 1) os << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b, long cap) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  if (cap >= 0 && static_cast<long>(c.size()) > cap + 1) c.resize(cap + 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b, long cap) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  if (cap >= 0 && static_cast<long>(c.size()) > cap + 1) c.resize(cap + 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b, long cap) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  long deg = a.degree() + b.degree();
  if (cap >= 0) deg = std::min(deg, cap);
  std::vector<Int> c(deg + 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    if (static_cast<long>(i) > deg) break;
    std::size_t jmax = std::min(b.coeffs.size(), static_cast<std::size_t>(deg - i + 1));
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_shift(const IntPolynomial& a, long e, long cap) {
  if (a.is_zero() || (cap >= 0 && e > cap)) return IntPolynomial();
  std::vector<Int> c(a.coeffs.size() + e, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i + e] = a.coeffs[i];
  if (cap >= 0 && static_cast<long>(c.size()) > cap + 1) c.resize(cap + 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_truncate(IntPolynomial a, long cap) {
  if (cap >= 0 && static_cast<long>(a.coeffs.size()) > cap + 1) {
    a.coeffs.resize(cap + 1);
    a.normalize();
  }
  return a;
}

IntPolynomial one_minus_tpow(long e) {
  std::vector<Int> c(e + 1, 0);
  c[0] = 1;
  c[e] -= 1;  // e == 0 gives the zero polynomial
  return IntPolynomial(std::move(c));
}

IntPolynomial one_minus_t_power(long k) {
  IntPolynomial r = IntPolynomial::one();
  IntPolynomial f = one_minus_tpow(1);
  for (long i = 0; i < k; ++i) r = poly_mul(r, f);
  return r;
}

IntPolynomial divide_by_one_minus_t(const IntPolynomial& a) {
  if (a.is_zero()) return a;
  if (a.eval_at_one() != 0)
    throw std::invalid_argument("polynomial not divisible by (1 - t)");
  // a = (1-t) q  =>  q_d = sum_{i<=d} a_i
  std::vector<Int> q(a.coeffs.size() - 1, 0);
  Int run = 0;
  for (std::size_t d = 0; d + 1 < a.coeffs.size(); ++d) {
    run += a.coeffs[d];
    q[d] = run;
  }
  return IntPolynomial(std::move(q));
}

}
