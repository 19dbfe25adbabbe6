#pragma once

// Affine Hecke algebra in the T-basis, one parameter v = q^{1/2}.

#include <map>

#include "alcovia/laurent.hpp"
#include "alcovia/walks.hpp"

namespace alcovia {

class HeckeElem {
 public:
  HeckeElem() = default;
  static HeckeElem basis(const AffElem& w, const LaurentV& c = LaurentV(1));

  const std::map<AffElem, LaurentV>& terms() const { return terms_; }
  LaurentV coeff(const AffElem& w) const;
  void add(const AffElem& w, const LaurentV& c);
  bool is_zero() const { return terms_.empty(); }

  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  HeckeElem& operator*=(const LaurentV& c);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const LaurentV& c, HeckeElem a) { return a *= c; }
  bool operator==(const HeckeElem&) const = default;

 private:
  std::map<AffElem, LaurentV> terms_;
};

/// h * T_{s_i}, i in 0..n.
HeckeElem right_mul_simple(const RootSystem& rs, const HeckeElem& h, int i);
/// h * T_{s_i}^{-1} with T_s^{-1} = T_s - (v - v^{-1}).
HeckeElem right_mul_simple_inv(const RootSystem& rs, const HeckeElem& h, int i);
/// h * T_gamma for gamma of length zero.
HeckeElem right_mul_omega(const RootSystem& rs, const HeckeElem& h, const AffElem& gamma);
HeckeElem mul(const RootSystem& rs, const HeckeElem& a, const HeckeElem& b);

/// x_v from the greedy reduced word of v.
HeckeElem x_elem(const RootSystem& rs, const AffElem& v);
/// x_v from an arbitrary expression v = s_{i1} ... s_{il} gamma.
HeckeElem x_elem_word(const RootSystem& rs, const Word& letters, const AffElem& gamma);

/// T_w against the sum over walks of type w of (v - v^{-1})^f x_{end}.
bool verify_walk_expansion(const RootSystem& rs, const AffElem& w,
                           const Bounds& bounds = Bounds{});

/// All elements of the extended affine Weyl group of length at most max_len.
std::vector<AffElem> elements_up_to_length(const RootSystem& rs, int max_len,
                                           const Bounds& bounds = Bounds{});

HeckeElem one_zero(const RootSystem& rs, const Bounds& bounds = Bounds{});
/// T_w 1_0 = 1_0 T_w = v^{l(w)} 1_0 for every w in W0.
bool check_idempotent_laws(const RootSystem& rs, const Bounds& bounds = Bounds{});
/// x^lambda 1_0 = v^{l(t_lambda) - l(m_lambda)} T_{m_lambda} 1_0.
bool check_translation_identity(const RootSystem& rs, const Coweight& lambda,
                                const Bounds& bounds = Bounds{});
/// P_lambda 1_0 from the path formula against
/// q^{l(m_lambda) - l(t_lambda)} sum_u v^{l(u)} T_u x^lambda 1_0. Rank <= 2 only.
bool check_spherical_symbolic(const RootSystem& rs, const Coweight& lambda,
                              const Bounds& bounds = Bounds{});

}  // namespace alcovia
