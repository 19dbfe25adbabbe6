#pragma once

// Extended affine Weyl group W~ = P x| W0.
//
// An element t_mu w is stored as its (translation, finite part) pair and
// identified with the alcove (t_mu w) c0, where c0 is the fundamental alcove.
// Letters 0..n denote s_0..s_n with s_0 = t_{theta^vee} s_theta. Affine roots
// alpha + k delta are the affine functions x -> <x,alpha> + k; a hyperplane
// H_{alpha+k delta} is normalized so that alpha is positive.

#include <compare>
#include <string>
#include <vector>

#include "alcovia/rootsys.hpp"

namespace alcovia {

struct AffElem {
  Coweight trans;
  FinWeylElem fin;

  bool operator==(const AffElem&) const = default;
  std::strong_ordering operator<=>(const AffElem& o) const {
    if (auto c = trans <=> o.trans; c != 0) return c;
    return fin <=> o.fin;
  }
};

struct AffElemHash {
  std::size_t operator()(const AffElem& x) const noexcept;
};

/// alpha + k delta with alpha given by its index in RootSystem::roots(),
/// positive or negative.
struct SignedAffRoot {
  int root = 0;
  int level = 0;
  bool operator==(const SignedAffRoot&) const = default;
};

/// The hyperplane H_{alpha + k delta}, alpha a positive root.
struct AffRoot {
  int root = 0;  // index of a positive root
  int level = 0;
  bool operator==(const AffRoot&) const = default;
  auto operator<=>(const AffRoot&) const = default;
};

struct StepClass {
  AffRoot wall;
  bool positive = false;  // true for a positive crossing x -> x s_i
};

struct AffineWord {
  Word letters;  // over 0..n
  AffElem omega_part;
};

AffElem aff_identity(const RootSystem& rs);
AffElem aff_translation(const RootSystem& rs, const Coweight& mu);
AffElem aff_from_fin(const RootSystem& rs, const FinWeylElem& w);
/// s_i for i in 0..n.
AffElem aff_simple(const RootSystem& rs, int i);
/// s_{alpha + k delta} = t_{-k alpha^vee} s_alpha.
AffElem aff_reflection(const RootSystem& rs, const AffRoot& h);
AffElem aff_mul(const RootSystem& rs, const AffElem& a, const AffElem& b);
AffElem aff_inverse(const RootSystem& rs, const AffElem& a);
AffElem aff_from_word(const RootSystem& rs, const Word& letters);

/// alpha_i as a signed affine root; alpha_0 = -theta + delta.
SignedAffRoot simple_affine_root(const RootSystem& rs, int i);
/// (t_mu w)(alpha + k delta) = w(alpha) + (k - <mu, w(alpha)>) delta.
SignedAffRoot aff_act(const RootSystem& rs, const AffElem& x, const SignedAffRoot& b);
bool is_positive_affine(const RootSystem& rs, const SignedAffRoot& b);
AffRoot normalize(const RootSystem& rs, const SignedAffRoot& b);

int aff_length(const RootSystem& rs, const AffElem& x);
/// epsilon(t_mu w) = <mu, 2 rho> - l(w).
int signed_length(const RootSystem& rs, const AffElem& x);
bool aff_is_left_descent(const RootSystem& rs, int i, const AffElem& x);

/// Wall between the alcoves x and x s_i and the orientation of that step.
StepClass classify_step(const RootSystem& rs, const AffElem& x, int i);

/// Greedy smallest left descent over 0..n; x = s_{i1} ... s_{il} * omega_part.
AffineWord reduced_word(const RootSystem& rs, const AffElem& x);

/// m_lambda = t_lambda (w0 w_{0 lambda})^{-1} and its reduced word.
std::pair<AffElem, AffineWord> min_double_coset_rep(const RootSystem& rs,
                                                    const Coweight& lambda);

std::string affroot_str(const RootSystem& rs, const AffRoot& h);

}  // namespace alcovia
