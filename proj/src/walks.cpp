#include "alcovia/walks.hpp"

#include <algorithm>

namespace alcovia {

namespace {

std::vector<bool> mask_from_positions(int len, const std::vector<int>& folds) {
  std::vector<bool> mask(len, false);
  for (int k : folds) {
    if (k < 1 || k > len)
      fail(ErrorKind::InvalidWalk, "fold position " + std::to_string(k) +
                                       " outside 1.." + std::to_string(len));
    mask[k - 1] = true;
  }
  return mask;
}

void check_type(const RootSystem& rs, const WalkType& type) {
  for (int i : type.letters)
    if (i < 0 || i > rs.rank())
      fail(ErrorKind::IndexOutOfRange, "letter " + std::to_string(i) + " outside 0.." +
                                           std::to_string(rs.rank()));
  if (aff_length(rs, type.omega) != 0)
    fail(ErrorKind::InvalidWalk, "omega part of a walk type must have length 0");
}

}  // namespace

Walk::Walk(const RootSystem& rs, WalkType type, const std::vector<int>& folds)
    : Walk(rs, std::move(type), folds, aff_identity(rs)) {}

Walk::Walk(const RootSystem& rs, WalkType type, const std::vector<int>& folds,
           AffElem start)
    : rs_(&rs), type_(std::move(type)) {
  check_type(rs, type_);
  mask_ = mask_from_positions(size(), folds);
  alcoves_.push_back(std::move(start));
  rebuild();
}

Walk::Walk(const RootSystem& rs, WalkType type, std::vector<bool> mask, AffElem start,
           bool)
    : rs_(&rs), type_(std::move(type)), mask_(std::move(mask)) {
  alcoves_.push_back(std::move(start));
  rebuild();
}

void Walk::rebuild() {
  const RootSystem& rs = *rs_;
  alcoves_.resize(1);
  steps_.clear();
  alcoves_.reserve(type_.letters.size() + 1);
  steps_.reserve(type_.letters.size());
  for (std::size_t k = 0; k < type_.letters.size(); ++k) {
    const int i = type_.letters[k];
    const AffElem& x = alcoves_.back();
    const StepClass sc = classify_step(rs, x, i);
    if (mask_[k]) {
      if (sc.positive)
        fail(ErrorKind::InvalidWalk,
             "fold at step " + std::to_string(k + 1) + " is on the negative side");
      steps_.push_back(Step{sc.wall, StepKind::Fold});
      alcoves_.push_back(x);
    } else {
      steps_.push_back(Step{sc.wall, sc.positive ? StepKind::PosCross : StepKind::NegCross});
      alcoves_.push_back(aff_mul(rs, x, aff_simple(rs, i)));
    }
  }
  end_ = aff_mul(rs, alcoves_.back(), type_.omega);
}

std::vector<int> Walk::folds() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (mask_[k]) out.push_back(k + 1);
  return out;
}

int Walk::num_folds() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

WalkStats Walk::stats() const {
  WalkStats s;
  for (const Step& st : steps_) {
    switch (st.kind) {
      case StepKind::PosCross: ++s.pos; break;
      case StepKind::NegCross: ++s.neg; break;
      case StepKind::Fold: ++s.folds; break;
    }
  }
  s.length = size();
  s.signed_len = s.pos - s.neg;
  s.dim = s.pos + s.folds;
  s.weight = end_.trans;
  s.final_dir = end_.fin;
  return s;
}

int Walk::dim() const {
  int d = 0;
  for (const Step& st : steps_)
    if (st.kind != StepKind::NegCross) ++d;
  return d;
}

Walk Walk::with_mask(std::vector<bool> mask) const {
  if (static_cast<int>(mask.size()) != size())
    fail(ErrorKind::InvalidWalk, "fold mask length does not match the walk type");
  return Walk(*rs_, type_, std::move(mask), alcoves_.front(), true);
}

WalkType lambda_walk_type(const RootSystem& rs, const Coweight& lambda,
                          const FinWeylElem& u) {
  const auto [m, mword] = min_double_coset_rep(rs, lambda);
  WalkType t;
  t.letters = rs.canonical_word(u);
  t.letters.insert(t.letters.end(), mword.letters.begin(), mword.letters.end());
  t.omega = mword.omega_part;
  return t;
}

Walk antidominant_walk(const RootSystem& rs, const Coweight& lambda) {
  rs.require_dominant(lambda, "antidominant_walk");
  const FinWeylElem u =
      rs.mul(rs.longest_element().first, rs.stabilizer_longest(lambda));
  return Walk(rs, lambda_walk_type(rs, lambda, u), {});
}

std::vector<Walk> enumerate_walks(const RootSystem& rs, const WalkType& type,
                                  const Bounds& bounds) {
  return enumerate_walks(rs, type, aff_identity(rs), bounds);
}

std::vector<Walk> enumerate_walks(const RootSystem& rs, const WalkType& type,
                                  const AffElem& start, const Bounds& bounds) {
  const int len = static_cast<int>(type.letters.size());
  if (len > bounds.max_letters)
    fail(ErrorKind::TypeTooLong, "walk type has " + std::to_string(len) +
                                     " letters, limit is " +
                                     std::to_string(bounds.max_letters));
  check_type(rs, type);
  const std::vector<AffElem> gens = [&] {
    std::vector<AffElem> g;
    for (int i = 0; i <= rs.rank(); ++i) g.push_back(aff_simple(rs, i));
    return g;
  }();

  std::vector<Walk> out;
  std::vector<bool> mask(len, false);
  std::vector<AffElem> path{start};
  path.reserve(len + 1);
  // Explicit DFS; choice[k] is 0 before any branch, 1 after crossing, 2 after fold.
  std::vector<int> choice(len + 1, 0);
  int k = 0;
  while (k >= 0) {
    if (k == len) {
      out.push_back(Walk(rs, type, mask, start, true));
      --k;
      continue;
    }
    const int i = type.letters[k];
    if (choice[k] == 0) {
      choice[k] = 1;
      mask[k] = false;
      path.resize(k + 1);
      path.push_back(aff_mul(rs, path[k], gens[i]));
      ++k;
      continue;
    }
    if (choice[k] == 1) {
      choice[k] = 2;
      if (!classify_step(rs, path[k], i).positive) {
        mask[k] = true;
        path.resize(k + 1);
        path.push_back(path[k]);
        ++k;
        continue;
      }
    }
    choice[k] = 0;
    mask[k] = false;
    --k;
  }
  return out;
}

std::map<Coweight, std::vector<Walk>> enumerate_P_lambda(const RootSystem& rs,
                                                         const Coweight& lambda,
                                                         const Bounds& bounds) {
  rs.require_dominant(lambda, "enumerate_P_lambda");
  std::map<Coweight, std::vector<Walk>> out;
  for (const auto& [u, uword] : rs.coset_min_reps(lambda)) {
    for (Walk& p : enumerate_walks(rs, lambda_walk_type(rs, lambda, u), bounds)) {
      Coweight mu = p.weight();
      out[std::move(mu)].push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Walk> enumerate_P_prime(const RootSystem& rs, const Coweight& lambda,
                                    const Bounds& bounds) {
  rs.require_dominant(lambda, "enumerate_P_prime");
  const auto [m, mword] = min_double_coset_rep(rs, lambda);
  const WalkType t{mword.letters, mword.omega_part};
  std::vector<Walk> out;
  for (const auto& [u, uword] : rs.coset_min_reps(lambda)) {
    for (Walk& p : enumerate_walks(rs, t, aff_from_fin(rs, u), bounds))
      out.push_back(std::move(p));
  }
  return out;
}

std::vector<Walk> unfold_sequence(const Walk& p) {
  std::vector<Walk> out;
  std::vector<bool> mask(p.size(), false);
  out.push_back(p.with_mask(mask));
  for (int k : p.folds()) {
    mask[k - 1] = true;
    out.push_back(p.with_mask(mask));
  }
  return out;
}

int half_pair_rho(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  const int two = rs.pair_two_rho(lambda + mu);
  if (two % 2 != 0)
    fail(ErrorKind::InvalidArgument,
         "<lambda+mu, 2rho> is odd: mu is not in lambda + Q");
  return two / 2;
}

}  // namespace alcovia
