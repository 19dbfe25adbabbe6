#pragma once

// Spherical functions from walks, their direct symmetrization and weight
// multiplicities.

#include <cstdint>
#include <map>
#include <vector>

#include "alcovia/laurent.hpp"
#include "alcovia/walks.hpp"

namespace alcovia {

/// Finitely supported map coweight -> Laurent polynomial; no zero entries.
class GroupAlgebraElem {
 public:
  void add(const Coweight& mu, const LaurentV& c);
  const std::map<Coweight, LaurentV>& terms() const { return terms_; }
  LaurentV coeff(const Coweight& mu) const;
  bool operator==(const GroupAlgebraElem&) const = default;

  /// sum_mu c_mu(q) x^mu with x^mu = prod_i x_i^{mu_i}.
  Rational eval(const std::vector<Rational>& x, const Rational& q) const;

 private:
  std::map<Coweight, LaurentV> terms_;
};

Rational monomial_value(const std::vector<Rational>& x, const Coweight& mu);

/// sum over P(lambda)_mu of q^{-(<lambda+mu,rho> - dim p)} (1 - q^{-1})^{f(p)}.
GroupAlgebraElem spherical_via_paths(const RootSystem& rs, const Coweight& lambda,
                                     const Bounds& bounds = Bounds{});

/// The same function summed over walks of type m_lambda from each u in W0^lambda.
GroupAlgebraElem spherical_via_paths_prime(const RootSystem& rs, const Coweight& lambda,
                                           const Bounds& bounds = Bounds{});

/// Exact value of the W0-symmetrized definition at the point x. Throws
/// SingularPoint when some x^{w alpha^vee} equals 1.
Rational eval_direct(const RootSystem& rs, const Coweight& lambda,
                     const std::vector<Rational>& x, const Rational& q,
                     const Bounds& bounds = Bounds{});

/// Number of walks in P(lambda)_mu of dimension <lambda+mu,rho>.
std::map<Coweight, std::int64_t> weight_multiplicities(const RootSystem& rs,
                                                       const Coweight& lambda,
                                                       const Bounds& bounds = Bounds{});

/// Freudenthal recursion on the dual side (coroots as roots).
std::map<Coweight, std::int64_t> freudenthal(const RootSystem& rs, const Coweight& lambda);

}  // namespace alcovia
