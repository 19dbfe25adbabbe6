#include "alcovia/spherical.hpp"

#include <algorithm>
#include <numeric>

namespace alcovia {

void GroupAlgebraElem::add(const Coweight& mu, const LaurentV& c) {
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentV GroupAlgebraElem::coeff(const Coweight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentV() : it->second;
}

Rational monomial_value(const std::vector<Rational>& x, const Coweight& mu) {
  Rational r = 1;
  for (int i = 0; i < mu.rank(); ++i) {
    const Rational base = mu[i] < 0 ? Rational(1) / x[i] : x[i];
    for (int k = 0; k < std::abs(mu[i]); ++k) r *= base;
  }
  return r;
}

Rational GroupAlgebraElem::eval(const std::vector<Rational>& x, const Rational& q) const {
  Rational s = 0;
  for (const auto& [mu, c] : terms_) s += c.eval_q(q) * monomial_value(x, mu);
  return s;
}

GroupAlgebraElem spherical_via_paths(const RootSystem& rs, const Coweight& lambda,
                                     const Bounds& bounds) {
  const LaurentV one_minus = LaurentV(1) - LaurentV::monomial(-2);
  GroupAlgebraElem out;
  for (const auto& [mu, walks] : enumerate_P_lambda(rs, lambda, bounds)) {
    const int top = half_pair_rho(rs, lambda, mu);
    LaurentV c;
    for (const Walk& p : walks) {
      const WalkStats s = p.stats();
      c += one_minus.pow(s.folds).shifted(-2 * (top - s.dim));
    }
    out.add(mu, c);
  }
  return out;
}

GroupAlgebraElem spherical_via_paths_prime(const RootSystem& rs, const Coweight& lambda,
                                           const Bounds& bounds) {
  const auto [m, mword] = min_double_coset_rep(rs, lambda);
  const int prefactor = aff_length(rs, aff_translation(rs, lambda)) - aff_length(rs, m);
  GroupAlgebraElem out;
  for (const Walk& p : enumerate_P_prime(rs, lambda, bounds)) {
    const int shift = prefactor - p.start().fin.length() - p.end().fin.length();
    out.add(p.weight(), LaurentV::v_minus_inv().pow(p.num_folds()).shifted(shift));
  }
  return out;
}

Rational eval_direct(const RootSystem& rs, const Coweight& lambda,
                     const std::vector<Rational>& x, const Rational& q,
                     const Bounds& bounds) {
  rs.require_dominant(lambda, "eval_direct");
  if (static_cast<int>(x.size()) != rs.rank())
    fail(ErrorKind::InvalidArgument, "evaluation point has the wrong dimension");
  for (const Rational& xi : x)
    if (xi == 0) fail(ErrorKind::SingularPoint, "evaluation point has a zero coordinate");
  if (q == 0 || q == 1) fail(ErrorKind::InvalidArgument, "q must differ from 0 and 1");
  const Rational qinv = Rational(1) / q;

  std::vector<Coweight> pos_coroots;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    pos_coroots.push_back(rs.coroot_as_coweight(rs.root(k)));

  Rational sum = 0;
  Rational stab = 0;  // W_{0 lambda}(q^{-1})
  for (const FinWeylElem& w : rs.elements(bounds)) {
    if (rs.act(w, lambda) == lambda) {
      Rational t = 1;
      for (int k = 0; k < w.length(); ++k) t *= qinv;
      stab += t;
    }
    Rational term = monomial_value(x, rs.act(w, lambda));
    for (const Coweight& av : pos_coroots) {
      const Rational y = monomial_value(x, -rs.act(w, av));
      if (y == 1)
        fail(ErrorKind::SingularPoint, "x^{w alpha^vee} = 1 at the evaluation point");
      term *= (1 - qinv * y) / (1 - y);
    }
    sum += term;
  }
  return sum / stab;
}

std::map<Coweight, std::int64_t> weight_multiplicities(const RootSystem& rs,
                                                       const Coweight& lambda,
                                                       const Bounds& bounds) {
  std::map<Coweight, std::int64_t> out;
  for (const auto& [mu, walks] : enumerate_P_lambda(rs, lambda, bounds)) {
    const int top = half_pair_rho(rs, lambda, mu);
    const auto n = std::count_if(walks.begin(), walks.end(),
                                 [&](const Walk& p) { return p.dim() == top; });
    if (n > 0) out[mu] = n;
  }
  return out;
}

std::map<Coweight, std::int64_t> freudenthal(const RootSystem& rs, const Coweight& lambda) {
  rs.require_dominant(lambda, "freudenthal");
  const int n = rs.rank();
  // Invariant form on coweights: (alpha_i^vee, y) = L <y, alpha_i> / d_i.
  int lcm = 1;
  for (int i = 1; i <= n; ++i) lcm = std::lcm(lcm, rs.symmetrizer(i));
  auto form = [&](const IntVec& coroot_coords, const Coweight& y) {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      s += static_cast<long long>(coroot_coords[i]) * y[i] * (lcm / rs.symmetrizer(i + 1));
    return s;
  };

  // Dominant candidates lie between w0 lambda and lambda in dominance order.
  const Coweight low = rs.act(rs.longest_element().first, lambda);
  const IntVec box = *rs.coroot_coordinates(lambda - low);
  std::vector<std::pair<int, Coweight>> candidates;  // (height of lambda - mu, mu)
  IntVec c(n, 0);
  for (;;) {
    Coweight mu = lambda;
    for (int i = 0; i < n; ++i) mu -= c[i] * rs.simple_coroot(i + 1);
    if (mu.is_dominant())
      candidates.emplace_back(std::accumulate(c.begin(), c.end(), 0), std::move(mu));
    int j = 0;
    while (j < n && c[j] == box[j]) c[j++] = 0;
    if (j == n) break;
    ++c[j];
  }
  std::sort(candidates.begin(), candidates.end());

  const Coweight lam_rho = lambda + rs.two_rho_vee();
  std::map<Coweight, std::int64_t> dominant;
  auto mult_of = [&](const Coweight& nu) -> std::int64_t {
    auto it = dominant.find(rs.dominant_rep(nu).first);
    return it == dominant.end() ? 0 : it->second;
  };
  for (const auto& [height, mu] : candidates) {
    if (mu == lambda) {
      dominant[mu] = 1;
      continue;
    }
    const long long lhs = form(*rs.coroot_coordinates(lambda - mu), lam_rho + mu);
    long long rhs = 0;
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      const Root& a = rs.root(k);
      const Coweight beta = rs.coroot_as_coweight(a);
      for (Coweight nu = mu + beta;; nu += beta) {
        const std::int64_t m = mult_of(nu);
        if (m == 0) break;
        rhs += 2 * m * form(a.coroot_coords, nu);
      }
    }
    if (rhs % lhs != 0)
      fail(ErrorKind::InternalOperatorDeath, "Freudenthal recursion is not integral");
    if (rhs != 0) dominant[mu] = rhs / lhs;
  }

  std::map<Coweight, std::int64_t> out;
  for (const auto& [mu, m] : dominant)
    for (const Coweight& nu : rs.weyl_orbit(mu)) out[nu] = m;
  return out;
}

}  // namespace alcovia
