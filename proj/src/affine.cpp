#include "alcovia/affine.hpp"

#include <cstdlib>
#include <sstream>

namespace alcovia {

std::size_t AffElemHash::operator()(const AffElem& x) const noexcept {
  const std::size_t a = CoweightHash{}(x.trans);
  const std::size_t b = FinWeylElemHash{}(x.fin);
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

AffElem aff_identity(const RootSystem& rs) {
  return AffElem{Coweight::zero(rs.rank()), rs.identity()};
}

AffElem aff_translation(const RootSystem& rs, const Coweight& mu) {
  rs.require_rank(mu, "translation");
  return AffElem{mu, rs.identity()};
}

AffElem aff_from_fin(const RootSystem& rs, const FinWeylElem& w) {
  return AffElem{Coweight::zero(rs.rank()), w};
}

AffElem aff_simple(const RootSystem& rs, int i) {
  if (i == 0) {
    const Root& theta = rs.theta();
    return AffElem{rs.coroot_as_coweight(theta), rs.reflection(theta)};
  }
  return aff_from_fin(rs, rs.simple(i));
}

AffElem aff_reflection(const RootSystem& rs, const AffRoot& h) {
  const Root& a = rs.root(h.root);
  return AffElem{-h.level * rs.coroot_as_coweight(a), rs.reflection(a)};
}

AffElem aff_mul(const RootSystem& rs, const AffElem& a, const AffElem& b) {
  return AffElem{a.trans + rs.act(a.fin, b.trans), rs.mul(a.fin, b.fin)};
}

AffElem aff_inverse(const RootSystem& rs, const AffElem& a) {
  FinWeylElem winv = rs.inverse(a.fin);
  Coweight t = -rs.act(winv, a.trans);
  return AffElem{std::move(t), std::move(winv)};
}

AffElem aff_from_word(const RootSystem& rs, const Word& letters) {
  AffElem x = aff_identity(rs);
  for (int i : letters) x = aff_mul(rs, x, aff_simple(rs, i));
  return x;
}

SignedAffRoot simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) return SignedAffRoot{rs.negate_index(rs.theta_index()), 1};
  rs.require_simple_index(i);
  return SignedAffRoot{i - 1, 0};
}

SignedAffRoot aff_act(const RootSystem& rs, const AffElem& x, const SignedAffRoot& b) {
  const IntVec img = rs.act_on_root(x.fin, rs.root(b.root).root_coords);
  const auto idx = rs.root_index(img);
  if (!idx) fail(ErrorKind::InvalidArgument, "Weyl group image is not a root");
  return SignedAffRoot{*idx, b.level - rs.pair(x.trans, img)};
}

bool is_positive_affine(const RootSystem& rs, const SignedAffRoot& b) {
  return b.level > 0 || (b.level == 0 && rs.root(b.root).positive);
}

AffRoot normalize(const RootSystem& rs, const SignedAffRoot& b) {
  if (rs.root(b.root).positive) return AffRoot{b.root, b.level};
  return AffRoot{rs.negate_index(b.root), -b.level};
}

int aff_length(const RootSystem& rs, const AffElem& x) {
  const FinWeylElem winv = rs.inverse(x.fin);
  int len = 0;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const IntVec& a = rs.root(k).root_coords;
    const int shift = RootSystem::is_positive(rs.act_on_root(winv, a)) ? 0 : 1;
    len += std::abs(rs.pair(x.trans, a) - shift);
  }
  return len;
}

int signed_length(const RootSystem& rs, const AffElem& x) {
  return rs.pair_two_rho(x.trans) - x.fin.length();
}

bool aff_is_left_descent(const RootSystem& rs, int i, const AffElem& x) {
  return !is_positive_affine(
      rs, aff_act(rs, aff_inverse(rs, x), simple_affine_root(rs, i)));
}

StepClass classify_step(const RootSystem& rs, const AffElem& x, int i) {
  const SignedAffRoot wall = aff_act(rs, x, simple_affine_root(rs, i));
  return StepClass{normalize(rs, wall), !rs.root(wall.root).positive};
}

AffineWord reduced_word(const RootSystem& rs, const AffElem& x) {
  AffineWord out;
  AffElem cur = x;
  for (;;) {
    int i = 0;
    while (i <= rs.rank() && !aff_is_left_descent(rs, i, cur)) ++i;
    if (i > rs.rank()) break;
    out.letters.push_back(i);
    cur = aff_mul(rs, aff_simple(rs, i), cur);
  }
  out.omega_part = std::move(cur);
  return out;
}

std::pair<AffElem, AffineWord> min_double_coset_rep(const RootSystem& rs,
                                                    const Coweight& lambda) {
  rs.require_dominant(lambda, "min_double_coset_rep");
  const FinWeylElem w0 = rs.longest_element().first;
  const FinWeylElem w0l = rs.stabilizer_longest(lambda);
  AffElem m{lambda, rs.inverse(rs.mul(w0, w0l))};
  AffineWord word = reduced_word(rs, m);
  return {std::move(m), std::move(word)};
}

std::string affroot_str(const RootSystem& rs, const AffRoot& h) {
  std::ostringstream os;
  const IntVec& c = rs.root(h.root).root_coords;
  os << "H[";
  for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
  os << "]+" << h.level << "d";
  return os.str();
}

}  // namespace alcovia
