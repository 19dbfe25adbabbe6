#include "alcovia/hecke.hpp"

#include <set>

#include "alcovia/spherical.hpp"

namespace alcovia {

HeckeElem HeckeElem::basis(const AffElem& w, const LaurentV& c) {
  HeckeElem h;
  h.add(w, c);
  return h;
}

LaurentV HeckeElem::coeff(const AffElem& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentV() : it->second;
}

void HeckeElem::add(const AffElem& w, const LaurentV& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElem& HeckeElem::operator*=(const LaurentV& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

HeckeElem right_mul_simple(const RootSystem& rs, const HeckeElem& h, int i) {
  const AffElem s = aff_simple(rs, i);
  const LaurentV d = LaurentV::v_minus_inv();
  HeckeElem out;
  for (const auto& [w, c] : h.terms()) {
    AffElem ws = aff_mul(rs, w, s);
    if (aff_length(rs, ws) > aff_length(rs, w)) {
      out.add(ws, c);
    } else {
      out.add(ws, c);
      out.add(w, c * d);
    }
  }
  return out;
}

HeckeElem right_mul_simple_inv(const RootSystem& rs, const HeckeElem& h, int i) {
  HeckeElem out = right_mul_simple(rs, h, i);
  HeckeElem shift = h;
  shift *= LaurentV::v_minus_inv();
  return out -= shift;
}

HeckeElem right_mul_omega(const RootSystem& rs, const HeckeElem& h, const AffElem& gamma) {
  HeckeElem out;
  for (const auto& [w, c] : h.terms()) out.add(aff_mul(rs, w, gamma), c);
  return out;
}

HeckeElem mul(const RootSystem& rs, const HeckeElem& a, const HeckeElem& b) {
  HeckeElem out;
  for (const auto& [y, c] : b.terms()) {
    const AffineWord word = reduced_word(rs, y);
    HeckeElem part = a;
    for (int i : word.letters) part = right_mul_simple(rs, part, i);
    part = right_mul_omega(rs, part, word.omega_part);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElem x_elem_word(const RootSystem& rs, const Word& letters, const AffElem& gamma) {
  HeckeElem h = HeckeElem::basis(aff_identity(rs));
  AffElem x = aff_identity(rs);
  for (int i : letters) {
    if (classify_step(rs, x, i).positive) {
      h = right_mul_simple(rs, h, i);
    } else {
      h = right_mul_simple_inv(rs, h, i);
    }
    x = aff_mul(rs, x, aff_simple(rs, i));
  }
  return right_mul_omega(rs, h, gamma);
}

HeckeElem x_elem(const RootSystem& rs, const AffElem& v) {
  const AffineWord w = reduced_word(rs, v);
  return x_elem_word(rs, w.letters, w.omega_part);
}

bool verify_walk_expansion(const RootSystem& rs, const AffElem& w, const Bounds& bounds) {
  const AffineWord word = reduced_word(rs, w);
  HeckeElem rhs;
  for (const Walk& p : enumerate_walks(rs, WalkType{word.letters, word.omega_part}, bounds)) {
    HeckeElem term = x_elem(rs, p.end());
    term *= LaurentV::v_minus_inv().pow(p.num_folds());
    rhs += term;
  }
  return rhs == HeckeElem::basis(w);
}

std::vector<AffElem> elements_up_to_length(const RootSystem& rs, int max_len,
                                           const Bounds& bounds) {
  rs.guard_group_size(bounds, "elements_up_to_length");
  // Length-zero elements: the finite parts of the minuscule translations.
  std::vector<AffElem> omega{aff_identity(rs)};
  for (int i = 1; i <= rs.rank(); ++i) {
    Coweight w = Coweight::zero(rs.rank());
    w[i - 1] = 1;
    if (rs.pair(w, rs.theta()) != 1) continue;  // not minuscule
    const auto [m, word] = min_double_coset_rep(rs, w);
    if (word.letters.empty()) omega.push_back(m);
  }
  std::set<AffElem> seen(omega.begin(), omega.end());
  std::vector<AffElem> layer = omega;
  std::vector<AffElem> out = omega;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffElem> next;
    for (const AffElem& x : layer) {
      for (int i = 0; i <= rs.rank(); ++i) {
        AffElem y = aff_mul(rs, aff_simple(rs, i), x);
        if (aff_length(rs, y) != len || !seen.insert(y).second) continue;
        next.push_back(y);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

HeckeElem one_zero(const RootSystem& rs, const Bounds& bounds) {
  HeckeElem h;
  for (const FinWeylElem& w : rs.elements(bounds))
    h.add(aff_from_fin(rs, w), LaurentV::monomial(w.length()));
  return h;
}

bool check_idempotent_laws(const RootSystem& rs, const Bounds& bounds) {
  const HeckeElem one = one_zero(rs, bounds);
  for (const FinWeylElem& w : rs.elements(bounds)) {
    const HeckeElem tw = HeckeElem::basis(aff_from_fin(rs, w));
    HeckeElem expected = one;
    expected *= LaurentV::monomial(w.length());
    if (mul(rs, tw, one) != expected || mul(rs, one, tw) != expected) return false;
  }
  return true;
}

bool check_translation_identity(const RootSystem& rs, const Coweight& lambda,
                                const Bounds& bounds) {
  const HeckeElem one = one_zero(rs, bounds);
  const AffElem t = aff_translation(rs, lambda);
  const auto [m, word] = min_double_coset_rep(rs, lambda);
  const HeckeElem lhs = mul(rs, x_elem(rs, t), one);
  HeckeElem rhs = mul(rs, HeckeElem::basis(m), one);
  rhs *= LaurentV::monomial(aff_length(rs, t) - aff_length(rs, m));
  return lhs == rhs;
}

bool check_spherical_symbolic(const RootSystem& rs, const Coweight& lambda,
                              const Bounds& bounds) {
  if (rs.rank() > 2)
    fail(ErrorKind::GroupTooLarge, "symbolic spherical check is limited to rank <= 2");
  const HeckeElem one = one_zero(rs, bounds);
  HeckeElem lhs;
  const GroupAlgebraElem p = spherical_via_paths(rs, lambda, bounds);
  for (const auto& [mu, c] : p.terms()) {
    HeckeElem term = x_elem(rs, aff_translation(rs, mu));
    term *= c;
    lhs += term;
  }
  lhs = mul(rs, lhs, one);

  const AffElem t = aff_translation(rs, lambda);
  const auto [m, word] = min_double_coset_rep(rs, lambda);
  const HeckeElem xl1 = mul(rs, x_elem(rs, t), one);
  HeckeElem rhs;
  for (const auto& [u, uword] : rs.coset_min_reps(lambda)) {
    HeckeElem term = mul(rs, HeckeElem::basis(aff_from_fin(rs, u)), xl1);
    term *= LaurentV::monomial(u.length());
    rhs += term;
  }
  rhs *= LaurentV::monomial(2 * (aff_length(rs, m) - aff_length(rs, t)));
  return lhs == rhs;
}

}  // namespace alcovia
