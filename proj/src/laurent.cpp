#include "alcovia/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace alcovia {

LaurentV LaurentV::monomial(int exp, std::int64_t c) {
  LaurentV p;
  p.add_term(exp, c);
  return p;
}

LaurentV LaurentV::v_minus_inv() { return monomial(1) - monomial(-1); }

std::int64_t LaurentV::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

void LaurentV::add_term(int exp, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentV& LaurentV::operator+=(const LaurentV& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentV& LaurentV::operator*=(const LaurentV& o) {
  LaurentV r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  return *this = std::move(r);
}

LaurentV operator-(LaurentV a) {
  for (auto& [e, c] : a.c_) c = -c;
  return a;
}

LaurentV LaurentV::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentV::pow: negative exponent");
  LaurentV r(1);
  for (int j = 0; j < k; ++j) r *= *this;
  return r;
}

LaurentV LaurentV::shifted(int k) const {
  LaurentV r;
  for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
  return r;
}

bool LaurentV::in_z_q_inverse() const {
  for (const auto& [e, c] : c_)
    if (e > 0 || e % 2 != 0) return false;
  return true;
}

bool LaurentV::only_even_exponents() const {
  for (const auto& [e, c] : c_)
    if (e % 2 != 0) return false;
  return true;
}

namespace {

Rational rpow(const Rational& x, int k) {
  Rational r = 1;
  const Rational base = k < 0 ? Rational(1) / x : x;
  for (int j = 0; j < std::abs(k); ++j) r *= base;
  return r;
}

}  // namespace

Rational LaurentV::eval_q(const Rational& q) const {
  if (!only_even_exponents())
    throw std::invalid_argument("LaurentV::eval_q: odd power of v present");
  Rational s = 0;
  for (const auto& [e, c] : c_) s += Rational(c) * rpow(q, e / 2);
  return s;
}

Rational LaurentV::eval_v(const Rational& v) const {
  Rational s = 0;
  for (const auto& [e, c] : c_) s += Rational(c) * rpow(v, e);
  return s;
}

std::string LaurentV::str() const {
  if (c_.empty()) return "0";
  const bool in_q = in_z_q_inverse();
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int e = in_q ? it->first / 2 : it->first;
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = c < 0 ? -c : c;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << (in_q ? "q" : "v");
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace alcovia
