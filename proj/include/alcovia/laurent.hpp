#pragma once

// Laurent polynomials in v with integer coefficients, v^2 = q.

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcovia {

using Rational = boost::multiprecision::cpp_rational;

class LaurentV {
 public:
  LaurentV() = default;
  LaurentV(std::int64_t c) { add_term(0, c); }  // NOLINT: constants convert

  static LaurentV monomial(int exp, std::int64_t c = 1);
  /// v - v^{-1}
  static LaurentV v_minus_inv();

  const std::map<int, std::int64_t>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int exp) const;
  void add_term(int exp, std::int64_t c);

  LaurentV& operator+=(const LaurentV& o);
  LaurentV& operator-=(const LaurentV& o);
  LaurentV& operator*=(const LaurentV& o);
  friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
  friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }
  friend LaurentV operator*(LaurentV a, const LaurentV& b) { return a *= b; }
  friend LaurentV operator-(LaurentV a);
  LaurentV pow(int k) const;
  LaurentV shifted(int k) const;  // multiply by v^k

  bool operator==(const LaurentV&) const = default;

  /// Every exponent is even and nonpositive, i.e. an element of Z[q^{-1}].
  bool in_z_q_inverse() const;
  bool only_even_exponents() const;
  /// Evaluation at q; requires only even exponents.
  Rational eval_q(const Rational& q) const;
  /// Evaluation at v.
  Rational eval_v(const Rational& v) const;

  /// Terms in q^-1 when possible, otherwise in v; highest degree first.
  std::string str() const;

 private:
  std::map<int, std::int64_t> c_;
};

}  // namespace alcovia
