#pragma once

// Counting q-labelled walks, which gives the sizes of retraction fibers in a
// regular affine building of the given thickness.

#include <cstdint>
#include <vector>

#include "alcovia/walks.hpp"

namespace alcovia {

struct Thickness {
  std::vector<std::int64_t> q;  // q_0 .. q_n, one per cotype

  static Thickness uniform(const RootSystem& rs, std::int64_t q);
  std::int64_t at(int i) const { return q[i]; }
};

/// Product over steps: q_i for a positive crossing, q_i - 1 for a fold and 1
/// for a negative crossing.
std::int64_t labelled_count(const Walk& p, const Thickness& th);

std::int64_t retraction_fiber_count(const RootSystem& rs, const Coweight& lambda,
                                    const Coweight& mu, const Thickness& th,
                                    const Bounds& bounds = Bounds{});

/// Coefficients (constant term first) of sum_p q^{pos(p)} (q-1)^{f(p)} over
/// P(lambda)_mu, as a polynomial in q, or in r = q - 1 when in_r is set.
std::vector<std::int64_t> fiber_polynomial(const RootSystem& rs, const Coweight& lambda,
                                           const Coweight& mu, bool in_r = false,
                                           const Bounds& bounds = Bounds{});

/// count >= (q-1)^{<lambda+mu,rho>} for uniform q >= 2; throws NotInSaturatedSet.
bool check_lower_bound(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                       std::int64_t q, const Bounds& bounds = Bounds{});

}  // namespace alcovia
