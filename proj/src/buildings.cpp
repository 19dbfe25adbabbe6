#include "alcovia/buildings.hpp"

#include "alcovia/saturated.hpp"

namespace alcovia {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::InvalidArgument, "labelled count overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::InvalidArgument, "labelled count overflows 64 bits");
  return r;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<std::int64_t> poly_pow(const std::vector<std::int64_t>& a, int k) {
  std::vector<std::int64_t> r{1};
  for (int j = 0; j < k; ++j) r = poly_mul(r, a);
  return r;
}

}  // namespace

Thickness Thickness::uniform(const RootSystem& rs, std::int64_t q) {
  if (q < 1) fail(ErrorKind::InvalidArgument, "thickness must be at least 1");
  return Thickness{std::vector<std::int64_t>(rs.rank() + 1, q)};
}

std::int64_t labelled_count(const Walk& p, const Thickness& th) {
  if (static_cast<int>(th.q.size()) != p.root_system().rank() + 1)
    fail(ErrorKind::InvalidArgument, "thickness needs one entry per letter 0..n");
  std::int64_t n = 1;
  for (int k = 1; k <= p.size(); ++k) {
    const std::int64_t q = th.at(p.type().letters[k - 1]);
    if (q < 1) fail(ErrorKind::InvalidArgument, "thickness must be at least 1");
    switch (p.step(k).kind) {
      case StepKind::PosCross: n = checked_mul(n, q); break;
      case StepKind::Fold: n = checked_mul(n, q - 1); break;
      case StepKind::NegCross: break;
    }
  }
  return n;
}

std::int64_t retraction_fiber_count(const RootSystem& rs, const Coweight& lambda,
                                    const Coweight& mu, const Thickness& th,
                                    const Bounds& bounds) {
  rs.require_rank(mu, "retraction_fiber_count");
  const auto all = enumerate_P_lambda(rs, lambda, bounds);
  auto it = all.find(mu);
  if (it == all.end()) return 0;
  std::int64_t total = 0;
  for (const Walk& p : it->second) total = checked_add(total, labelled_count(p, th));
  return total;
}

std::vector<std::int64_t> fiber_polynomial(const RootSystem& rs, const Coweight& lambda,
                                           const Coweight& mu, bool in_r,
                                           const Bounds& bounds) {
  rs.require_rank(mu, "fiber_polynomial");
  const auto all = enumerate_P_lambda(rs, lambda, bounds);
  std::vector<std::int64_t> total{0};
  auto it = all.find(mu);
  if (it == all.end()) return total;
  // In q: q^a (q-1)^f. In r: (r+1)^a r^f.
  const std::vector<std::int64_t> cross = in_r ? std::vector<std::int64_t>{1, 1}
                                               : std::vector<std::int64_t>{0, 1};
  const std::vector<std::int64_t> fold = in_r ? std::vector<std::int64_t>{0, 1}
                                              : std::vector<std::int64_t>{-1, 1};
  for (const Walk& p : it->second) {
    const WalkStats s = p.stats();
    const auto term = poly_mul(poly_pow(cross, s.pos), poly_pow(fold, s.folds));
    if (term.size() > total.size()) total.resize(term.size(), 0);
    for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j];
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

bool check_lower_bound(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                       std::int64_t q, const Bounds& bounds) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "lower bound check needs q >= 2");
  if (!contains(rs, lambda, mu))
    fail(ErrorKind::NotInSaturatedSet,
         mu.str() + " is not in the saturated set of " + lambda.str());
  std::int64_t bound = 1;
  for (int k = 0; k < half_pair_rho(rs, lambda, mu); ++k) bound = checked_mul(bound, q - 1);
  return retraction_fiber_count(rs, lambda, mu, Thickness::uniform(rs, q), bounds) >= bound;
}

}  // namespace alcovia
